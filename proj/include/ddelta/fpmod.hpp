#pragma once

// Finitely presented modules over R = F_p[x_1..x_n], polynomial matrices between
// them, and kernel / cohomology computations through module Groebner bases.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ddelta/groebner.hpp"
#include "ddelta/module_gb.hpp"

namespace ddelta {

/// Submodule of R^rank with a cached position-over-term Groebner basis.
class Submodule {
public:
    Submodule(RingPtr ring, std::size_t rank, std::vector<PolyVector> gens = {});

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<PolyVector>& generators() const noexcept { return gens_; }
    const std::vector<gb::Vec>& groebner_basis() const;

    PolyVector normal_form(const PolyVector& v) const;
    bool contains(const PolyVector& v) const;
    bool contains(const Submodule& other) const;

    /// dim_{F_p} R^rank / this, or nullopt when the quotient is infinite-dimensional.
    std::optional<std::uint64_t> quotient_dimension() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<gb::Vec> basis;
    };

    RingPtr ring_;
    std::size_t rank_;
    std::vector<PolyVector> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Reduced form of v modulo N; zero iff v lies in N.
PolyVector module_normal_form(const PolyVector& v, const Submodule& n);

PolyVector zero_vector(const RingPtr& ring, std::size_t rank);
PolyVector unit_vector(const RingPtr& ring, std::size_t rank, std::size_t index);
bool is_zero_vector(const PolyVector& v);
std::string vector_to_string(const PolyVector& v);
/// Deterministic ordering on vectors of equal rank.
bool vector_less(const PolyVector& a, const PolyVector& b);

/// Cokernel of a relation matrix: R^rank / span(relations).
class FPModule {
public:
    FPModule(RingPtr ring, std::size_t rank, std::vector<PolyVector> relations = {},
             std::vector<Subset> summand_labels = {});

    /// R / I
    static FPModule cyclic(const Ideal& ideal);
    /// (+)_k R / ideals[k], labelled by `labels` (may be empty).
    static FPModule direct_sum(const std::vector<Ideal>& ideals, std::vector<Subset> labels = {});

    const RingPtr& ring_ptr() const noexcept { return relations_.ring_ptr(); }
    std::size_t rank() const noexcept { return relations_.rank(); }
    const std::vector<PolyVector>& relations() const noexcept { return relations_.generators(); }
    const Submodule& relation_module() const noexcept { return relations_; }
    const std::vector<Subset>& summand_labels() const noexcept { return labels_; }

    PolyVector normal_form(const PolyVector& v) const { return relations_.normal_form(v); }
    bool is_zero_element(const PolyVector& v) const { return relations_.contains(v); }
    bool is_zero() const;
    std::optional<std::uint64_t> dimension() const { return relations_.quotient_dimension(); }

private:
    Submodule relations_;
    std::vector<Subset> labels_;
};

/// Dense rows x cols matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    static PolyMatrix identity(const RingPtr& ring, std::size_t n);
    static PolyMatrix diagonal(const RingPtr& ring, const std::vector<Polynomial>& entries);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Polynomial& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    PolyVector column(std::size_t c) const;
    std::vector<PolyVector> columns() const;

    PolyVector apply(const PolyVector& v) const;
    PolyMatrix operator*(const PolyMatrix& other) const;
    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    PolyMatrix scaled(std::int64_t c) const;
    /// Entrywise r -> r^(p^e).
    PolyMatrix frobenius(unsigned e = 1) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// R-linear map source -> target; column j is the image of the j-th generator.
struct ModuleMap {
    FPModule source;
    FPModule target;
    PolyMatrix matrix;
};

/// matrix * (source relations) lies in the target relation module.
bool certify_well_defined(const ModuleMap& map);
/// Every column of the matrix reduces to zero in the target.
bool is_zero_map(const ModuleMap& map);
/// g o f
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct KernelResult {
    FPModule module;                 // presentation on the kernel generators
    ModuleMap inclusion;             // module -> map.source
    std::vector<PolyVector> generators;  // in source coordinates
};

/// { v : map(v) = 0 in target } modulo the source relations.
KernelResult kernel(const ModuleMap& map);

/// Cochain complex; maps[i] : terms[i] -> terms[i+1].
struct ChainComplex {
    std::vector<FPModule> terms;
    std::vector<ModuleMap> maps;
};

/// Every consecutive composite is the zero map.
bool is_complex(const ChainComplex& complex);

struct CohomologyResult {
    std::size_t degree = 0;
    FPModule presentation;               // on the lifted generators
    std::vector<PolyVector> generators;  // nonzero classes, reduced and sorted, in term coordinates
    Submodule cycles;                    // ker d^i (contains the term relations)
    Submodule boundaries;                // im d^(i-1) + term relations
    bool is_zero() const { return generators.empty(); }
    /// dim_{F_p} of the cohomology when finite.
    std::optional<std::uint64_t> dimension() const;
};

CohomologyResult cohomology(const ChainComplex& complex, std::size_t degree);

/// im d^(degree-1) + relations of terms[degree].
Submodule boundary_module(const ChainComplex& complex, std::size_t degree);
/// Generators of ker d^degree (all unit vectors for the last term).
std::vector<PolyVector> cycle_generators(const ChainComplex& complex, std::size_t degree);

}  // namespace ddelta
