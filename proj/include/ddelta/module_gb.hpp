#pragma once

// Buchberger's algorithm on submodules of R^n under a position-over-term order.
// Ideals are the rank-one case. Everything above this layer (ideals, colon,
// kernels, cohomology) is phrased in terms of these primitives.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ddelta/polyring.hpp"

namespace ddelta {

using PolyVector = std::vector<Polynomial>;

namespace gb {

struct VTerm {
    std::uint32_t comp;
    Monomial mono;
    std::uint64_t coeff;
};

/// Module element as terms sorted strictly descending in position-over-term order
/// (component 0 is the largest position).
using Vec = std::vector<VTerm>;

int compare(const VTerm& a, const VTerm& b, TermOrder order) noexcept;

Vec from_poly(const Polynomial& f, std::uint32_t comp = 0);
Vec from_vector(std::span<const Polynomial> v, std::uint32_t offset = 0);
PolyVector to_vector(const Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset = 0);
Polynomial to_poly(const Vec& v, const RingPtr& ring);

/// a + coeff * mono * b
Vec add_scaled(std::span<const VTerm> a, std::span<const VTerm> b, std::uint64_t coeff, const Monomial& mono,
               const RingContext& ring);

/// Reduced Groebner basis: monic, interreduced, sorted descending by leading term.
/// `module_mode` disables the product criterion, which is only valid for ideals.
std::vector<Vec> reduced_basis(std::vector<Vec> generators, const RingContext& ring, bool module_mode);

/// Fully reduced normal form of `v` modulo a Groebner basis.
Vec normal_form(const Vec& v, std::span<const Vec> basis, const RingContext& ring);

/// Generators of { u in R^n : sum_k u_k * columns[k] lies in span(relations) }.
/// `columns` and `relations` live in R^target_rank; the result lives in R^columns.size().
std::vector<PolyVector> preimage(const RingPtr& ring, std::size_t target_rank, std::span<const PolyVector> columns,
                                 std::span<const PolyVector> relations);

/// Cofactors a with r = sum a_k * gens[k], or nullopt if r is not in the ideal.
std::optional<PolyVector> lift(const Polynomial& r, std::span<const Polynomial> gens);

}  // namespace gb
}  // namespace ddelta
