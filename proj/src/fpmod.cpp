#include "ddelta/fpmod.hpp"

#include <algorithm>
#include <functional>

#include "ddelta/error.hpp"

namespace ddelta {

// ---------------------------------------------------------------------------
// Vectors

PolyVector zero_vector(const RingPtr& ring, std::size_t rank)
{
    return PolyVector(rank, Polynomial(ring));
}

PolyVector unit_vector(const RingPtr& ring, std::size_t rank, std::size_t index)
{
    auto v = zero_vector(ring, rank);
    v.at(index) = Polynomial::constant(ring, 1);
    return v;
}

bool is_zero_vector(const PolyVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Polynomial& f) { return f.is_zero(); });
}

std::string vector_to_string(const PolyVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

bool vector_less(const PolyVector& a, const PolyVector& b)
{
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] == b[i])
            continue;
        return polynomial_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Submodule

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<PolyVector> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)), cache_(std::make_shared<Cache>())
{
    for (const auto& g : gens_) {
        if (g.size() != rank_)
            throw DomainError("submodule generator has rank " + std::to_string(g.size()) + ", expected " +
                              std::to_string(rank_));
        for (const auto& f : g)
            require_same_ring(*ring_, f.ring());
    }
}

const std::vector<gb::Vec>& Submodule::groebner_basis() const
{
    std::call_once(cache_->once, [this] {
        std::vector<gb::Vec> vecs;
        vecs.reserve(gens_.size());
        for (const auto& g : gens_)
            vecs.push_back(gb::from_vector(g));
        cache_->basis = gb::reduced_basis(std::move(vecs), *ring_, rank_ > 1);
    });
    return cache_->basis;
}

PolyVector Submodule::normal_form(const PolyVector& v) const
{
    if (v.size() != rank_)
        throw DomainError("vector has rank " + std::to_string(v.size()) + ", expected " + std::to_string(rank_));
    auto rem = gb::normal_form(gb::from_vector(v), groebner_basis(), *ring_);
    return gb::to_vector(rem, ring_, rank_);
}

bool Submodule::contains(const PolyVector& v) const
{
    if (is_zero_vector(v))
        return true;
    return is_zero_vector(normal_form(v));
}

bool Submodule::contains(const Submodule& other) const
{
    return std::all_of(other.gens_.begin(), other.gens_.end(), [this](const PolyVector& g) { return contains(g); });
}

std::optional<std::uint64_t> Submodule::quotient_dimension() const
{
    const auto& basis = groebner_basis();
    const std::size_t nvars = ring_->num_vars();
    std::uint64_t total = 0;
    for (std::size_t comp = 0; comp < rank_; ++comp) {
        std::vector<Monomial> leads;
        for (const auto& g : basis)
            if (g.front().comp == comp)
                leads.push_back(g.front().mono);
        if (std::any_of(leads.begin(), leads.end(), [](const Monomial& m) { return m.is_one(); }))
            continue;
        // Finite iff every variable has a pure-power leading monomial.
        std::vector<std::uint64_t> bound(nvars, 0);
        for (std::size_t v = 0; v < nvars; ++v) {
            for (const auto& m : leads) {
                bool pure = m[v] > 0 && m.degree() == m[v];
                if (pure && (bound[v] == 0 || m[v] < bound[v]))
                    bound[v] = m[v];
            }
            if (bound[v] == 0)
                return std::nullopt;
        }
        Monomial cur(nvars);
        std::function<void(std::size_t)> walk = [&](std::size_t v) {
            if (v == nvars) {
                for (const auto& m : leads)
                    if (m.divides(cur))
                        return;
                ++total;
                return;
            }
            for (std::uint64_t e = 0; e < bound[v]; ++e) {
                cur.set(v, e);
                walk(v + 1);
            }
            cur.set(v, 0);
        };
        walk(0);
    }
    return total;
}

PolyVector module_normal_form(const PolyVector& v, const Submodule& n)
{
    return n.normal_form(v);
}

// ---------------------------------------------------------------------------
// FPModule

FPModule::FPModule(RingPtr ring, std::size_t rank, std::vector<PolyVector> relations, std::vector<Subset> summand_labels)
    : relations_(std::move(ring), rank, std::move(relations)), labels_(std::move(summand_labels))
{
    if (!labels_.empty() && labels_.size() != rank)
        throw DomainError("summand labels must match the rank");
}

FPModule FPModule::cyclic(const Ideal& ideal)
{
    std::vector<PolyVector> rels;
    for (const auto& g : ideal.generators())
        rels.push_back(PolyVector{g});
    return FPModule(ideal.ring_ptr(), 1, std::move(rels));
}

FPModule FPModule::direct_sum(const std::vector<Ideal>& ideals, std::vector<Subset> labels)
{
    if (ideals.empty())
        throw DomainError("direct sum of no modules needs an explicit ring");
    const auto& ring = ideals.front().ring_ptr();
    const std::size_t n = ideals.size();
    std::vector<PolyVector> rels;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& g : ideals[k].generators()) {
            auto v = zero_vector(ring, n);
            v[k] = g;
            rels.push_back(std::move(v));
        }
    return FPModule(ring, n, std::move(rels), std::move(labels));
}

bool FPModule::is_zero() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        if (!relations_.contains(unit_vector(ring_ptr(), rank(), i)))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_))
{
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n)
{
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::diagonal(const RingPtr& ring, const std::vector<Polynomial>& entries)
{
    PolyMatrix m(ring, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(i, i) = entries[i];
    return m;
}

PolyVector PolyMatrix::column(std::size_t c) const
{
    PolyVector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back(at(r, c));
    return v;
}

std::vector<PolyVector> PolyMatrix::columns() const
{
    std::vector<PolyVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

PolyVector PolyMatrix::apply(const PolyVector& v) const
{
    if (v.size() != cols_)
        throw DomainError("matrix-vector size mismatch");
    auto out = zero_vector(ring_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero())
                out[r] += at(r, c) * v[c];
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const
{
    if (cols_ != other.rows_)
        throw DomainError("matrix product size mismatch");
    PolyMatrix out(ring_, rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero())
                continue;
            for (std::size_t c = 0; c < other.cols_; ++c)
                if (!other.at(k, c).is_zero())
                    out.at(r, c) += at(r, k) * other.at(k, c);
        }
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DomainError("matrix sum size mismatch");
    PolyMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] += other.entries_[i];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const
{
    return *this + other.scaled(-1);
}

PolyMatrix PolyMatrix::scaled(std::int64_t c) const
{
    PolyMatrix out = *this;
    auto k = ring_->field().reduce(c);
    for (auto& e : out.entries_)
        e = e.scaled(k);
    return out;
}

PolyMatrix PolyMatrix::frobenius(unsigned e) const
{
    PolyMatrix out = *this;
    for (auto& x : out.entries_)
        x = ddelta::frobenius(x, e);
    return out;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

bool PolyMatrix::operator==(const PolyMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string PolyMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out += "; ";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c)
                out += ", ";
            out += at(r, c).to_string();
        }
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Maps

bool certify_well_defined(const ModuleMap& map)
{
    if (map.matrix.rows() != map.target.rank() || map.matrix.cols() != map.source.rank())
        return false;
    for (const auto& rel : map.source.relations())
        if (!map.target.is_zero_element(map.matrix.apply(rel)))
            return false;
    return true;
}

bool is_zero_map(const ModuleMap& map)
{
    for (std::size_t c = 0; c < map.matrix.cols(); ++c)
        if (!map.target.is_zero_element(map.matrix.column(c)))
            return false;
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    return {f.source, g.target, g.matrix * f.matrix};
}

KernelResult kernel(const ModuleMap& map)
{
    const auto& ring = map.source.ring_ptr();
    auto columns = map.matrix.columns();
    auto gens = gb::preimage(ring, map.target.rank(), columns, map.target.relations());
    std::sort(gens.begin(), gens.end(), vector_less);

    auto rels = gb::preimage(ring, map.source.rank(), gens, map.source.relations());
    FPModule module(ring, gens.size(), std::move(rels));

    PolyMatrix incl(ring, map.source.rank(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
        for (std::size_t r = 0; r < map.source.rank(); ++r)
            incl.at(r, c) = gens[c][r];
    return {module, ModuleMap{module, map.source, std::move(incl)}, std::move(gens)};
}

// ---------------------------------------------------------------------------
// Complexes

bool is_complex(const ChainComplex& complex)
{
    if (complex.maps.size() + 1 != complex.terms.size() && !(complex.terms.empty() && complex.maps.empty()))
        return false;
    for (std::size_t i = 0; i + 1 < complex.maps.size(); ++i) {
        auto composite = compose(complex.maps[i + 1], complex.maps[i]);
        if (!is_zero_map(composite))
            return false;
    }
    return true;
}

Submodule boundary_module(const ChainComplex& complex, std::size_t degree)
{
    const auto& term = complex.terms.at(degree);
    std::vector<PolyVector> gens = term.relations();
    if (degree > 0)
        for (auto& col : complex.maps.at(degree - 1).matrix.columns())
            if (!is_zero_vector(col))
                gens.push_back(std::move(col));
    return Submodule(term.ring_ptr(), term.rank(), std::move(gens));
}

std::vector<PolyVector> cycle_generators(const ChainComplex& complex, std::size_t degree)
{
    const auto& term = complex.terms.at(degree);
    std::vector<PolyVector> out;
    if (degree >= complex.maps.size()) {
        for (std::size_t i = 0; i < term.rank(); ++i)
            out.push_back(unit_vector(term.ring_ptr(), term.rank(), i));
        return out;
    }
    const auto& map = complex.maps[degree];
    auto columns = map.matrix.columns();
    for (auto& g : gb::preimage(term.ring_ptr(), map.target.rank(), columns, map.target.relations())) {
        auto nf = term.normal_form(g);
        if (!is_zero_vector(nf) && std::find(out.begin(), out.end(), nf) == out.end())
            out.push_back(std::move(nf));
    }
    std::sort(out.begin(), out.end(), vector_less);
    return out;
}

std::optional<std::uint64_t> CohomologyResult::dimension() const
{
    auto b = boundaries.quotient_dimension();
    auto z = cycles.quotient_dimension();
    if (!b || !z)
        return std::nullopt;
    return *b - *z;
}

CohomologyResult cohomology(const ChainComplex& complex, std::size_t degree)
{
    const auto& term = complex.terms.at(degree);
    const auto& ring = term.ring_ptr();
    auto z = cycle_generators(complex, degree);
    // Cycles always contain the term relations; keep them explicit so dimensions are exact.
    std::vector<PolyVector> zgens = z;
    for (const auto& rel : term.relations())
        zgens.push_back(rel);
    Submodule cycles(ring, term.rank(), std::move(zgens));
    Submodule boundaries = boundary_module(complex, degree);

    std::vector<PolyVector> lifted;
    for (const auto& g : z) {
        auto nf = boundaries.normal_form(g);
        if (is_zero_vector(nf))
            continue;
        if (std::find(lifted.begin(), lifted.end(), nf) == lifted.end())
            lifted.push_back(std::move(nf));
    }
    std::sort(lifted.begin(), lifted.end(), vector_less);

    auto rels = gb::preimage(ring, term.rank(), lifted, boundaries.generators());
    FPModule presentation(ring, lifted.size(), std::move(rels));
    return {degree, std::move(presentation), std::move(lifted), std::move(cycles), std::move(boundaries)};
}

}  // namespace ddelta
