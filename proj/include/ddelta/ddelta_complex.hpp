#pragma once

// Finite-level models of the Delta-Delta complex of a permutable regular sequence.
//
// Level a, degree i: (+)_{|S| = i} R / J_S(a),  J_S(a) = (f_j : j not in S) + (f_i^a : i in S),
// summands in colex order. The differential sends summand S to S u {j} by
// (-1)^(position of j in S u {j}) * f_j^(a-1).

#include <cstdint>
#include <string>
#include <vector>

#include "ddelta/fpmod.hpp"
#include "ddelta/groebner.hpp"

namespace ddelta {

Ideal summand_ideal(const RegularSequence& rs, Subset s, std::uint64_t a);

struct DDeltaLevel {
    RegSeqPtr rs;
    std::uint64_t a = 1;
    ChainComplex complex;
    std::vector<std::vector<Subset>> labels;  // labels[i]: summands of term i
    std::vector<std::vector<Ideal>> ideals;   // ideals[i][k] = J_{labels[i][k]}(a)

    unsigned length() const noexcept { return rs->length(); }
    /// Position of s among labels[|s|].
    std::size_t index_of(Subset s) const;
};

DDeltaLevel build_level(const RegSeqPtr& rs, std::uint64_t a);

/// Unsigned coface d^i_k : term i -> term i+1 (k = 1..i+1): inclusions S -> T where
/// T \ S is the k-th element of T, each multiplied by f_j^(a-1).
PolyMatrix coface(const DDeltaLevel& level, unsigned i, unsigned k);

struct CosimplicialReport {
    bool ok = true;
    std::string witness;  // first failing identity
};

/// d^{i+1}_k d^i_j = d^{i+1}_j d^i_{k-1} for j < k, and d^i = sum_k (-1)^k d^i_k.
CosimplicialReport check_semicosimplicial(const DDeltaLevel& level);

/// R / J_S(a) -> R / f^[a], multiplication by f_{complement of S}^(a-1).
ModuleMap embed_summand(const DDeltaLevel& level, Subset s);
/// Row matrix of embed_summand over every summand of term i.
PolyMatrix embed_row(const DDeltaLevel& level, unsigned i);

/// Per-degree components of a map of complexes. The image of v in degree i is
/// components[i] * frobenius(v, frobenius_power); power 0 means R-linear.
struct ChainMap {
    std::vector<PolyMatrix> components;
    unsigned frobenius_power = 0;
};

/// L_a -> L_b on summand S: multiplication by f_S^(b-a).
ChainMap transition_chain_map(const DDeltaLevel& from, const DDeltaLevel& to);
/// L_a -> L_{ap} on summand S: r -> f_S^(p-1) r^p.
ChainMap fedder_chain_map(const DDeltaLevel& from);

/// Composite g after f of two chain maps (either may be semilinear).
ChainMap compose(const ChainMap& g, const ChainMap& f);

struct ChainMapReport {
    bool well_defined = true;  // relations map into relations
    bool commutes = true;      // commutes with the differentials in the target
    bool exact = true;         // ... already as a polynomial matrix identity
    std::string witness;
    bool ok() const { return well_defined && commutes; }
};

/// Commutation is tested as an exact matrix identity first, then modulo the target relations.
ChainMapReport check_chain_map(const ChainMap& map, const ChainComplex& from, const ChainComplex& to);
ChainMapReport check_chain_map(const ChainMap& map, const DDeltaLevel& from, const DDeltaLevel& to);

/// Filtration pieces at level a for 1 <= n <= c.
struct FiltrationSplit {
    unsigned n = 0;
    ChainComplex quotient;                    // summands S subset [n]
    ChainComplex kernel;                      // summands S subset [n] with n in S
    std::vector<std::vector<Subset>> quotient_labels;
    std::vector<std::vector<Subset>> kernel_labels;
    bool quotient_is_complex = false;
    bool kernel_is_complex = false;
    bool ranks_add = false;                // rank Q_n^i = rank K_n^i + rank Q_{n-1}^i
    bool projection_is_chain_map = false;  // Q_n -> Q_{n-1}
    bool inclusion_is_chain_map = false;   // K_n -> Q_n
    bool quotient_matches_subsequence = false;  // Q_n = level-a complex of f_[n] over R / f_{[c] \ [n]}
    bool kernel_matches_shifted = false;   // K_n = level-a complex of f_[n-1] over R / (f_{[c]\[n]}, f_n^a), shifted
    std::string witness;
    bool ok() const
    {
        return quotient_is_complex && kernel_is_complex && ranks_add && projection_is_chain_map &&
               inclusion_is_chain_map && quotient_matches_subsequence && kernel_matches_shifted;
    }
};

FiltrationSplit quotient_and_kernel_complexes(const DDeltaLevel& level, unsigned n);

/// Graphviz rendering: nodes are summands with their ideals, edges the signed multipliers.
std::string to_dot(const DDeltaLevel& level);

}  // namespace ddelta
