#pragma once

// Classes {{r / f^a}} in the top local cohomology H^c_f(R) = lim_a R / f^[a],
// with transition maps multiplication by f^(b-a).

#include <cstdint>
#include <string>

#include "ddelta/groebner.hpp"

namespace ddelta {

class CechClass {
public:
    /// Stores r reduced modulo f^[level]; level >= 1.
    CechClass(RegSeqPtr rs, const Polynomial& numerator, std::uint64_t level);

    const RegSeqPtr& sequence() const noexcept { return rs_; }
    const Polynomial& numerator() const noexcept { return numerator_; }
    std::uint64_t level() const noexcept { return level_; }

    /// "{{r/f^a}}"
    std::string to_string() const;

private:
    RegSeqPtr rs_;
    Polynomial numerator_;
    std::uint64_t level_;
};

bool cech_is_zero(const CechClass& xi);
/// Compares at the larger level via the transition maps.
bool cech_equal(const CechClass& xi, const CechClass& eta);
/// The class at level b >= xi.level(), numerator multiplied by f^(b-a).
CechClass raise_level(const CechClass& xi, std::uint64_t b);
CechClass cech_add(const CechClass& xi, const CechClass& eta);

CechClass scalar_action(const Polynomial& s, const CechClass& xi);
/// {{r/f^a}} -> {{r^p/f^(ap)}}
CechClass f_nat(const CechClass& xi);
/// f^(p-1) * f_nat
CechClass f_fed(const CechClass& xi);
CechClass f_fed_power(const CechClass& xi, unsigned e);

/// f_j * xi = 0 for every j in t.
bool annihilated_by(const CechClass& xi, Subset t);

/// (f_j : j in g_seq) + (f_i^a : i not in g_seq); the source of phi_embed.
Ideal annihilator_quotient_ideal(const RegularSequence& rs, Subset g_seq, std::uint64_t a);

/// r mod annihilator_quotient_ideal  ->  {{ g^(a-1) r / f^a }}, g = prod_{j in g_seq} f_j.
CechClass phi_embed(const RegSeqPtr& rs, const Polynomial& r, std::uint64_t a, Subset g_seq);

/// Inverse of phi_embed on the annihilator of f_{g_seq}: returns s, reduced modulo
/// annihilator_quotient_ideal(g_seq, level), with phi_embed(s) = xi.
/// Throws NotInAnnihilator when xi is not killed by every f_j, j in g_seq.
Polynomial phi_section(const CechClass& xi, Subset g_seq);

/// Fedder action transported to R / annihilator_quotient_ideal(g_seq, a):
/// r -> f_T^(p-1) r^p at level ap, T the complement of g_seq.
Polynomial fedder_on_quotient(const RegularSequence& rs, const Polynomial& r, std::uint64_t a, Subset g_seq);

}  // namespace ddelta
