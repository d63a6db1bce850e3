#include "graded_oracle.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t mod(std::int64_t x, std::uint64_t p)
{
    auto P = static_cast<std::int64_t>(p);
    return ((x % P) + P) % P;
}

std::int64_t inverse(std::int64_t x, std::uint64_t p)
{
    std::int64_t r = 1, b = mod(x, p);
    for (auto e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % static_cast<std::int64_t>(p);
        b = b * b % static_cast<std::int64_t>(p);
    }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<std::int64_t>>& m, std::size_t cols, std::uint64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && mod(m[piv][c], p) == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        auto inv = inverse(m[row][c], p);
        for (auto& x : m[row])
            x = mod(x, p) * inv % static_cast<std::int64_t>(p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || mod(m[r][c], p) == 0)
                continue;
            auto factor = mod(m[r][c], p);
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = mod(m[r][k] - factor * m[row][k], p);
        }
        pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    return pivots;
}

}  // namespace

GradedOracle::GradedOracle(std::uint64_t p, std::size_t nvars, std::vector<Poly> f) : p_(p), n_(nvars), f_(std::move(f))
{
    for (const auto& g : f_) {
        if (g.empty())
            throw std::invalid_argument("zero generator");
        std::int64_t d = -1;
        for (const auto& [e, c] : g) {
            std::int64_t de = 0;
            for (auto x : e)
                de += x;
            if (d >= 0 && de != d)
                throw std::invalid_argument("generators must be homogeneous");
            d = de;
        }
        if (d == 0)
            throw std::invalid_argument("generators must be nonconstant");
        deg_.push_back(d);
    }
}

GradedOracle GradedOracle::from(const std::vector<ddelta::Polynomial>& f)
{
    std::vector<Poly> out;
    for (const auto& g : f) {
        Poly q;
        for (const auto& t : g.terms()) {
            Exps e;
            for (auto x : t.monomial.exponents())
                e.push_back(static_cast<std::uint32_t>(x));
            q[e] = static_cast<std::int64_t>(t.coeff);
        }
        out.push_back(std::move(q));
    }
    return GradedOracle(f.front().ring().characteristic(), f.front().ring().num_vars(), std::move(out));
}

GradedOracle::Poly GradedOracle::multiply(const Poly& a, const Poly& b) const
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(n_);
            for (std::size_t k = 0; k < n_; ++k)
                e[k] = ea[k] + eb[k];
            auto& slot = out[e];
            slot = mod(slot + ca * cb, p_);
            if (slot == 0)
                out.erase(e);
        }
    return out;
}

GradedOracle::Poly GradedOracle::power(const Poly& a, std::uint64_t e) const
{
    Poly out{{Exps(n_, 0), 1}};
    for (std::uint64_t k = 0; k < e; ++k)
        out = multiply(out, a);
    return out;
}

GradedOracle::Poly GradedOracle::product_over(std::uint32_t s, std::uint64_t e) const
{
    Poly out{{Exps(n_, 0), 1}};
    for (std::size_t i = 0; i < f_.size(); ++i)
        if (s >> i & 1U)
            out = multiply(out, power(f_[i], e));
    return out;
}

std::vector<GradedOracle::Exps> GradedOracle::monomials_of_degree(std::int64_t d) const
{
    std::vector<Exps> out;
    if (d < 0)
        return out;
    Exps e(n_, 0);
    // Enumerate compositions of d into n_ parts.
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t left) {
        if (k + 1 == n_) {
            e[k] = static_cast<std::uint32_t>(left);
            out.push_back(e);
            return;
        }
        for (std::int64_t x = left; x >= 0; --x) {
            e[k] = static_cast<std::uint32_t>(x);
            rec(k + 1, left - x);
        }
    };
    rec(0, d);
    return out;
}

const GradedOracle::Quotient& GradedOracle::quotient(std::uint32_t s, std::uint64_t a, std::int64_t d)
{
    auto key = std::make_tuple(s, a, d);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    Quotient q;
    q.monomials = monomials_of_degree(d);
    std::map<Exps, std::size_t> index;
    for (std::size_t k = 0; k < q.monomials.size(); ++k)
        index[q.monomials[k]] = k;
    // J_S(a)_d is spanned by monomial multiples of the generators.
    for (std::size_t i = 0; i < f_.size(); ++i) {
        auto g = (s >> i & 1U) ? power(f_[i], a) : f_[i];
        auto gd = (s >> i & 1U) ? deg_[i] * static_cast<std::int64_t>(a) : deg_[i];
        for (const auto& m : monomials_of_degree(d - gd)) {
            std::vector<std::int64_t> row(q.monomials.size(), 0);
            for (const auto& [e, c] : g) {
                Exps sum(n_);
                for (std::size_t k = 0; k < n_; ++k)
                    sum[k] = e[k] + m[k];
                row[index.at(sum)] = c;
            }
            q.rows.push_back(std::move(row));
        }
    }
    q.pivots = echelon(q.rows, q.monomials.size(), p_);
    std::vector<bool> is_pivot(q.monomials.size(), false);
    for (auto c : q.pivots)
        is_pivot[c] = true;
    for (std::size_t k = 0; k < q.monomials.size(); ++k)
        if (!is_pivot[k])
            q.free.push_back(k);
    return cache_.emplace(key, std::move(q)).first->second;
}

std::int64_t GradedOracle::top_degree(std::uint32_t s, std::uint64_t a)
{
    auto key = std::make_pair(s, a);
    if (auto it = top_cache_.find(key); it != top_cache_.end())
        return it->second;
    std::int64_t d = 0;
    while (!quotient(s, a, d).free.empty())
        ++d;
    return top_cache_[key] = d - 1;
}

std::uint64_t GradedOracle::quotient_dimension(std::uint32_t s, std::uint64_t a)
{
    std::uint64_t total = 0;
    for (std::int64_t d = 0; d <= top_degree(s, a); ++d)
        total += quotient(s, a, d).free.size();
    return total;
}

std::vector<std::int64_t> GradedOracle::reduce(const Quotient& q, std::vector<std::int64_t> v) const
{
    for (std::size_t r = 0; r < q.pivots.size(); ++r) {
        auto c = mod(v[q.pivots[r]], p_);
        if (c == 0)
            continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = mod(v[k] - c * q.rows[r][k], p_);
    }
    return v;
}

std::vector<std::int64_t> GradedOracle::coordinates(const Quotient& q, const Poly& r) const
{
    std::vector<std::int64_t> v(q.monomials.size(), 0);
    std::map<Exps, std::size_t> index;
    for (std::size_t k = 0; k < q.monomials.size(); ++k)
        index[q.monomials[k]] = k;
    for (const auto& [e, c] : r)
        v[index.at(e)] = c;
    v = reduce(q, v);
    std::vector<std::int64_t> out;
    for (auto k : q.free)
        out.push_back(v[k]);
    return out;
}

std::vector<std::uint32_t> GradedOracle::subsets(unsigned i) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1U << f_.size()); ++s)
        if (static_cast<unsigned>(std::popcount(s)) == i)
            out.push_back(s);
    return out;
}

std::int64_t GradedOracle::twist(std::uint32_t s, std::uint64_t a) const
{
    std::int64_t t = 0;
    for (std::size_t i = 0; i < f_.size(); ++i)
        if (s >> i & 1U)
            t += static_cast<std::int64_t>(a - 1) * deg_[i];
    return t;
}

std::pair<std::int64_t, std::int64_t> GradedOracle::twisted_range(std::uint64_t a)
{
    std::int64_t lo = 0, hi = 0;
    for (std::uint32_t s = 0; s < (1U << f_.size()); ++s) {
        lo = std::min(lo, -twist(s, a));
        hi = std::max(hi, top_degree(s, a) - twist(s, a));
    }
    return {lo, hi};
}

GradedOracle::Matrix GradedOracle::differential(unsigned i, std::int64_t t, std::uint64_t a,
                                                std::vector<std::uint32_t>& rows, std::vector<std::uint32_t>& cols,
                                                std::vector<std::size_t>& row_offsets,
                                                std::vector<std::size_t>& col_offsets)
{
    rows = i < f_.size() ? subsets(i + 1) : std::vector<std::uint32_t>{};
    cols = subsets(i);
    std::size_t nrows = 0, ncols = 0;
    row_offsets.clear();
    col_offsets.clear();
    for (auto s : rows) {
        row_offsets.push_back(nrows);
        nrows += quotient(s, a, t + twist(s, a)).free.size();
    }
    for (auto s : cols) {
        col_offsets.push_back(ncols);
        ncols += quotient(s, a, t + twist(s, a)).free.size();
    }
    Matrix m(nrows, std::vector<std::int64_t>(ncols, 0));
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        auto s = cols[ci];
        const auto& src = quotient(s, a, t + twist(s, a));
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            auto tt = rows[ri];
            if ((s & ~tt) != 0 || std::popcount(tt & ~s) != 1)
                continue;
            auto j = static_cast<unsigned>(std::countr_zero(tt & ~s));
            // Sign (-1)^(1-based position of j in T).
            auto pos = std::popcount(tt & ((1U << j) - 1)) + 1;
            auto mult = power(f_[j], a - 1);
            const auto& tgt = quotient(tt, a, t + twist(tt, a));
            for (std::size_t k = 0; k < src.free.size(); ++k) {
                Poly basis{{src.monomials[src.free[k]], 1}};
                auto image = coordinates(tgt, multiply(basis, mult));
                for (std::size_t r = 0; r < image.size(); ++r)
                    m[row_offsets[ri] + r][col_offsets[ci] + k] = mod(pos % 2 ? -image[r] : image[r], p_);
            }
        }
    }
    return m;
}

std::uint64_t GradedOracle::rank(Matrix m) const
{
    if (m.empty())
        return 0;
    return echelon(m, m[0].size(), p_).size();
}

GradedOracle::Matrix GradedOracle::null_space(const Matrix& m, std::size_t cols) const
{
    auto r = m;
    auto pivots = echelon(r, cols, p_);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::int64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = mod(-r[k][free], p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t GradedOracle::cohomology_dimension(unsigned i, std::uint64_t a)
{
    auto [lo, hi] = twisted_range(a);
    std::uint64_t total = 0;
    std::vector<std::uint32_t> rows, cols;
    std::vector<std::size_t> ro, co;
    for (auto t = lo; t <= hi; ++t) {
        auto d = differential(i, t, a, rows, cols, ro, co);
        std::size_t ncols = 0;
        for (auto s : cols)
            ncols += quotient(s, a, t + twist(s, a)).free.size();
        std::uint64_t image = i > 0 ? rank(differential(i - 1, t, a, rows, cols, ro, co)) : 0;
        total += ncols - rank(d) - image;
    }
    return total;
}

std::optional<std::uint64_t> GradedOracle::death_level(unsigned i, std::uint64_t a, std::uint64_t bound)
{
    auto [lo, hi] = twisted_range(a);
    for (std::uint64_t b = a; b <= bound; ++b) {
        bool dead = true;
        for (auto t = lo; t <= hi && dead; ++t) {
            std::vector<std::uint32_t> rows, cols, brows, bcols;
            std::vector<std::size_t> ro, co, bro, bco;
            auto d = differential(i, t, a, rows, cols, ro, co);
            std::size_t ncols = 0;
            for (auto s : cols)
                ncols += quotient(s, a, t + twist(s, a)).free.size();
            auto cycles = null_space(d, ncols);
            if (cycles.empty())
                continue;
            // Boundaries at level b, degree t, as columns.
            Matrix boundary;
            std::size_t target_dim = 0;
            for (auto s : cols)
                target_dim += quotient(s, b, t + twist(s, b)).free.size();
            if (i > 0) {
                auto db = differential(i - 1, t, b, brows, bcols, bro, bco);
                std::size_t bcols_n = db.empty() ? 0 : db[0].size();
                for (std::size_t c = 0; c < bcols_n; ++c) {
                    std::vector<std::int64_t> col(db.size());
                    for (std::size_t r = 0; r < db.size(); ++r)
                        col[r] = db[r][c];
                    boundary.push_back(std::move(col));
                }
            }
            auto base = rank(boundary);
            for (const auto& z : cycles) {
                // Transition on summand S: multiply by f_S^(b-a).
                std::vector<std::int64_t> image;
                for (std::size_t ci = 0; ci < cols.size(); ++ci) {
                    auto s = cols[ci];
                    const auto& src = quotient(s, a, t + twist(s, a));
                    const auto& tgt = quotient(s, b, t + twist(s, b));
                    Poly r;
                    for (std::size_t k = 0; k < src.free.size(); ++k)
                        if (z[co[ci] + k] != 0)
                            r[src.monomials[src.free[k]]] = z[co[ci] + k];
                    auto coords = coordinates(tgt, multiply(r, product_over(s, b - a)));
                    image.insert(image.end(), coords.begin(), coords.end());
                }
                if (image.size() != target_dim)
                    throw std::logic_error("dimension mismatch");
                auto with = boundary;
                with.push_back(image);
                if (rank(with) != base) {
                    dead = false;
                    break;
                }
            }
        }
        if (dead)
            return b;
    }
    return std::nullopt;
}

bool GradedOracle::top_class_alive(std::uint64_t a, std::uint64_t b)
{
    const unsigned c = static_cast<unsigned>(f_.size());
    const std::uint32_t full = (1U << c) - 1;
    auto t = -twist(full, a);
    const auto& tgt = quotient(full, b, t + twist(full, b));
    auto image = coordinates(tgt, product_over(full, b - a));
    std::vector<std::uint32_t> rows, cols;
    std::vector<std::size_t> ro, co;
    auto d = differential(c - 1, t, b, rows, cols, ro, co);
    Matrix boundary;
    std::size_t n = d.empty() ? 0 : d[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::int64_t> col(d.size());
        for (std::size_t r = 0; r < d.size(); ++r)
            col[r] = d[r][k];
        boundary.push_back(std::move(col));
    }
    auto base = rank(boundary);
    boundary.push_back(image);
    return rank(boundary) != base;
}

}  // namespace oracle
