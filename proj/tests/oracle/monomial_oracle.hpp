#pragma once

// Brute-force model of the level-a complex for a monomial sequence f_i = x_i^{e_i}
// in exactly c variables. Every summand R/J_S(a) is spanned by monomials, and all
// differentials and transitions preserve the twisted exponent
//   t_i = u_i - (a-1) e_i  (i in S),   t_i = u_i  (i not in S),
// so each complex splits into finite F_p complexes indexed by t in the box
// prod_i [-(a-1) e_i, e_i). Nothing here touches Groebner bases.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Exponents = std::vector<std::int64_t>;

class MonomialOracle {
public:
    MonomialOracle(std::uint64_t p, std::vector<std::int64_t> e);

    unsigned length() const { return static_cast<unsigned>(e_.size()); }

    /// x^u lies in J_S(a) = (f_j : j not in S) + (f_i^a : i in S).
    bool in_summand_ideal(const Exponents& u, std::uint32_t s, std::uint64_t a) const;

    /// dim_{F_p} of the degree-i term of L_a.
    std::uint64_t term_dimension(unsigned i, std::uint64_t a) const;
    /// dim_{F_p} ker d^i (d^c = 0).
    std::uint64_t kernel_dimension(unsigned i, std::uint64_t a) const;
    /// dim_{F_p} H^i(L_a).
    std::uint64_t cohomology_dimension(unsigned i, std::uint64_t a) const;
    /// Smallest b in [a, bound] at which H^i(L_a) -> H^i(L_b) is zero.
    std::optional<std::uint64_t> death_level(unsigned i, std::uint64_t a, std::uint64_t bound) const;
    /// The class of 1 in the top summand of L_a is nonzero in H^c(L_b).
    bool top_class_alive(std::uint64_t a, std::uint64_t b) const;

private:
    bool present(std::uint32_t s, const Exponents& t, std::uint64_t a) const;
    std::vector<Exponents> box(std::uint64_t a) const;
    std::vector<std::uint32_t> subsets(unsigned i) const;
    /// Matrix of d^i in twisted degree t at level a: rows present (i+1)-sets, cols present i-sets.
    std::vector<std::vector<std::int64_t>> differential(unsigned i, const Exponents& t, std::uint64_t a,
                                                        std::vector<std::uint32_t>& rows,
                                                        std::vector<std::uint32_t>& cols) const;
    std::uint64_t rank(std::vector<std::vector<std::int64_t>> m) const;
    std::vector<std::vector<std::int64_t>> null_space(const std::vector<std::vector<std::int64_t>>& m,
                                                      std::size_t cols) const;

    std::uint64_t p_;
    std::vector<std::int64_t> e_;
};

/// Some generator divides x^u.
bool monomial_ideal_contains(const std::vector<Exponents>& generators, const Exponents& u);

}  // namespace oracle
