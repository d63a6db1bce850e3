#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ddelta/error.hpp"
#include "ddelta/polyring.hpp"

namespace ddelta {

/// Ideal of F_p[x_1..x_n] given by generators, with a lazily computed and shared
/// reduced Groebner basis. Copies share the cache.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial> gens = {});

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const RingContext& ring() const noexcept { return *ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    /// Unique reduced Groebner basis w.r.t. the ring's term order; computed once.
    const std::vector<Polynomial>& groebner_basis() const;

    Polynomial normal_form(const Polynomial& r) const;
    bool contains(const Polynomial& r) const;
    bool contains(const Ideal& other) const;
    bool is_zero() const;
    bool is_unit() const;

    /// Equality of ideals, decided by comparing reduced Groebner bases.
    bool operator==(const Ideal& other) const;
    bool operator!=(const Ideal& other) const { return !(*this == other); }

    /// "(g1, g2, ...)" using the reduced basis.
    std::string to_string() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Polynomial> basis;
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& r, const Ideal& ideal);

Ideal operator+(const Ideal& a, const Ideal& b);
/// r * I
Ideal operator*(const Polynomial& r, const Ideal& ideal);

/// (I : r) = { s : s r in I }. r must be nonzero.
Ideal colon(const Ideal& ideal, const Polynomial& r);
/// (I : J) = intersection of (I : g) over the generators g of J.
Ideal colon(const Ideal& ideal, const Ideal& other);
Ideal intersect(const Ideal& a, const Ideal& b);

/// A polynomial of `b`'s reduced basis that is not in `a`, if any (b not contained in a).
std::optional<Polynomial> containment_witness(const Ideal& a, const Ideal& b);

/// Subset of [c] = {1, ..., c} as a bitmask. Numeric order of masks is colex order.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t mask) : mask_(mask) {}
    static Subset of(std::initializer_list<unsigned> elements);
    static Subset full(unsigned c) { return Subset(c >= 32 ? ~0u : ((1u << c) - 1)); }

    constexpr std::uint32_t mask() const noexcept { return mask_; }
    bool contains(unsigned element) const noexcept { return (mask_ >> (element - 1)) & 1u; }
    unsigned size() const noexcept { return static_cast<unsigned>(__builtin_popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    std::vector<unsigned> elements() const;
    Subset with(unsigned element) const { return Subset(mask_ | (1u << (element - 1))); }
    Subset without(unsigned element) const { return Subset(mask_ & ~(1u << (element - 1))); }
    Subset complement(unsigned c) const { return Subset(full(c).mask_ & ~mask_); }
    bool is_subset_of(Subset other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    /// 1-based position of `element` in the sorted subset (element must belong to it).
    unsigned position(unsigned element) const;

    auto operator<=>(const Subset&) const = default;

    /// "{1,3}"
    std::string to_string() const;

private:
    std::uint32_t mask_ = 0;
};

/// All subsets of [c] of size k, in colex order.
std::vector<Subset> subsets_of_size(unsigned c, unsigned k);
/// All subsets of [c], by size then colex.
std::vector<Subset> all_subsets(unsigned c);

struct PermutabilityFailure {
    Subset t;       // (f_T) : f_j != (f_T)
    unsigned j = 0;  // 1-based index outside t; 0 means the ideal (f) is the unit ideal
};

struct PermutabilityCertificate {
    bool permutable = false;
    std::vector<PermutabilityFailure> failures;
    std::string to_string() const;
};

/// Checks (f_T) : f_j = (f_T) for every T and every j not in T, and that (f) is proper.
PermutabilityCertificate is_permutable_regular(const std::vector<Polynomial>& f);

/// Thrown when a sequence handed to RegularSequence fails the permutability check.
class NotPermutable : public Error {
public:
    explicit NotPermutable(PermutabilityCertificate certificate)
        : Error("sequence is not a permutable regular sequence: " + certificate.to_string()),
          certificate_(std::move(certificate))
    {
    }
    const PermutabilityCertificate& certificate() const noexcept { return certificate_; }

private:
    PermutabilityCertificate certificate_;
};

/// Certified permutable regular sequence f_1..f_c with cached bracket powers.
class RegularSequence {
public:
    /// Verifies permutability; throws NotPermutable with the certificate otherwise.
    static std::shared_ptr<const RegularSequence> create(RingPtr ring, std::vector<Polynomial> f);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const RingContext& ring() const noexcept { return *ring_; }
    std::uint64_t characteristic() const noexcept { return ring_->characteristic(); }
    unsigned length() const noexcept { return static_cast<unsigned>(f_.size()); }
    /// 1-based.
    const Polynomial& element(unsigned i) const { return f_.at(i - 1); }
    const std::vector<Polynomial>& elements() const noexcept { return f_; }
    /// f = f_1 ... f_c
    const Polynomial& product() const noexcept { return product_; }
    /// f_T = prod_{i in T} f_i, raised to `e`.
    Polynomial product_over(Subset t, std::uint64_t e = 1) const;

    /// (f_T)
    Ideal ideal_of(Subset t) const;
    /// f^[a] = (f_1^a, ..., f_c^a); cached per level.
    const Ideal& bracket_power(std::uint64_t a) const;
    /// (f_i^a : i in T)
    Ideal bracket_power(std::uint64_t a, Subset t) const;

    std::string to_string() const;

private:
    RegularSequence(RingPtr ring, std::vector<Polynomial> f);

    RingPtr ring_;
    std::vector<Polynomial> f_;
    Polynomial product_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::uint64_t, std::unique_ptr<Ideal>> bracket_cache_;
};

using RegSeqPtr = std::shared_ptr<const RegularSequence>;

}  // namespace ddelta
