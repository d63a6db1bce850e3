#pragma once

// Exact verification procedures over finite levels: colon identities, complex
// structure, Frobenius stability, death levels of cohomology classes, the augmentation
// identity, structure-morphism kernels and the codimension-two decomposition.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddelta/cech.hpp"
#include "ddelta/ddelta_complex.hpp"

namespace ddelta {

struct Assertion {
    std::string label;
    bool pass = false;
    std::string witness;  // canonical text of a counterexample when pass is false
};

struct SuiteReport {
    std::vector<Assertion> assertions;
    bool pass() const;
    /// First failing assertion, if any.
    const Assertion* first_failure() const;
    void add(std::string label, bool pass, std::string witness = {});
};

/// (f^[b] : f^(b-a)) = f^[a] and (f^[b] : f^[a]) = (f^(b-a)) + f^[b] for 1 <= a < b <= max_level.
SuiteReport check_colon_identities(const RegularSequence& rs, std::uint64_t max_level);

/// d o d = 0, coface identities, d = sum (-1)^k d_k, and embed(T) d_{S->T} = +-embed(S).
SuiteReport check_complex_wellformed(const DDeltaLevel& level);

/// The Fedder chain map commutes with differentials and transitions and is intertwined
/// with f_fed by embed_summand; all as exact polynomial identities.
SuiteReport check_frobenius_stability(const RegSeqPtr& rs, std::uint64_t a);

// ---------------------------------------------------------------------------
// Death levels

struct GeneratorDeath {
    PolyVector generator;                    // in term i of L_a
    std::optional<std::uint64_t> death_level;  // nullopt: still alive at the bound
};

struct DeathReport {
    unsigned degree = 0;
    std::uint64_t start_level = 1;
    std::uint64_t bound = 1;
    bool cohomology_zero = false;  // H^i(L_a) = 0 already
    std::vector<GeneratorDeath> generators;
    std::vector<std::uint64_t> levels_tested;

    bool all_died() const;
    /// Largest death level over all generators; start_level when there are none.
    std::optional<std::uint64_t> max_death_level() const;
};

/// Walks a, ap, ap^2, ... (and the bound itself), then refines to the exact minimum,
/// testing whether the transition image of each generator lies in im d^(i-1) + relations.
/// bound defaults to a * p^2.
DeathReport verify_vanishing(const RegSeqPtr& rs, unsigned degree, std::uint64_t a,
                             std::optional<std::uint64_t> bound = std::nullopt);

/// Minimal death level of a single vector of term `degree` at level a, or nullopt within bound.
std::optional<std::uint64_t> death_level_of(const RegSeqPtr& rs, unsigned degree, std::uint64_t a,
                                            const PolyVector& v, std::uint64_t bound,
                                            std::vector<std::uint64_t>* tested = nullptr);

/// The top class 1 in R / f^[a] survives every transition a -> b for b <= up_to.
bool top_class_persists(const RegSeqPtr& rs, std::uint64_t a, std::uint64_t up_to);

// ---------------------------------------------------------------------------
// Augmentation

struct AugmentationReport {
    std::uint64_t level = 1;
    Ideal colon_by_product;  // (f^[a] : f)
    Ideal sum_of_colons;     // sum_j (f^[a] : f_j)
    Ideal boundary_image;    // im d^(c-1) under embed_summand, plus f^[a]
    bool colon_equal = false;
    bool image_equal = false;
    std::string witness;
    bool pass() const { return colon_equal && image_equal; }
};

AugmentationReport verify_augmentation(const RegSeqPtr& rs, std::uint64_t a);

// ---------------------------------------------------------------------------
// Structure morphism

struct StructureKernelReport {
    unsigned e = 1;
    std::uint64_t q = 1;
    Ideal colon;     // (f^[q+p] : f^(p-1))
    Ideal expected;  // f^[q+1]
    bool equal = false;
    std::string witness;
    // K^0 data: (f) and f^[p]; quotient (f) / f^[p].
    Ideal k0_numerator;
    Ideal k0_denominator;
    // Finite-level V_f ideals: (f^q) + f^[q+1] and (f^q) + f^[q+p].
    Ideal v_numerator;
    Ideal v_denominator;
    bool pass() const { return equal; }
};

StructureKernelReport verify_structure_kernels(const RegSeqPtr& rs, unsigned e);

struct Codim2Report {
    unsigned e = 1;
    std::uint64_t q = 1;
    Ideal colon_f;     // ((fg)^q, f^(q+p), g^(q+1)) : f^(q+1)
    Ideal expected_f;  // (f^(p-1), g^q)
    Ideal colon_g;     // symmetric
    Ideal expected_g;
    Ideal intersection;  // (f^(q+1)) cap (g^(q+1))
    Ideal container;     // ((fg)^q, f^(q+p), g^(q+p))
    bool colon_f_equal = false;
    bool colon_g_equal = false;
    bool intersection_contained = false;
    std::string witness;
    bool pass() const { return colon_f_equal && colon_g_equal && intersection_contained; }
};

/// Requires c = 2.
Codim2Report verify_codim2_V(const RegSeqPtr& rs, unsigned e);

// ---------------------------------------------------------------------------
// Cech and Fedder algebra

/// Deterministic pseudo-random polynomial with at most `terms` terms of degree <= max_degree.
Polynomial random_polynomial(const RingPtr& ring, std::uint64_t& state, unsigned terms, unsigned max_degree);

/// Fixed image of R/f, cyclic generation by {{1/f^2}} up to e_max, the augmentation
/// action identity, semilinearity, annihilator embedding round trips and transition
/// injectivity on `samples` seeded random classes.
SuiteReport check_cech_fedder_algebra(const RegSeqPtr& rs, std::uint64_t seed, unsigned samples = 100,
                                      unsigned e_max = 3);

/// Both filtration pieces certified for every 1 <= n <= c.
SuiteReport check_filtration(const DDeltaLevel& level);

}  // namespace ddelta
