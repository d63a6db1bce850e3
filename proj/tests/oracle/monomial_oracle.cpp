#include "monomial_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace oracle {

MonomialOracle::MonomialOracle(std::uint64_t p, std::vector<std::int64_t> e) : p_(p), e_(std::move(e))
{
    if (e_.empty() || e_.size() > 8)
        throw std::invalid_argument("oracle supports 1..8 generators");
    for (auto x : e_)
        if (x < 1)
            throw std::invalid_argument("exponents must be positive");
}

bool MonomialOracle::in_summand_ideal(const Exponents& u, std::uint32_t s, std::uint64_t a) const
{
    for (unsigned i = 0; i < length(); ++i) {
        auto bound = (s >> i & 1U) ? static_cast<std::int64_t>(a) * e_[i] : e_[i];
        if (u[i] >= bound)
            return true;
    }
    return false;
}

bool MonomialOracle::present(std::uint32_t s, const Exponents& t, std::uint64_t a) const
{
    Exponents u(t);
    for (unsigned i = 0; i < length(); ++i) {
        if (s >> i & 1U)
            u[i] += static_cast<std::int64_t>(a - 1) * e_[i];
        if (u[i] < 0)
            return false;
    }
    return !in_summand_ideal(u, s, a);
}

std::vector<Exponents> MonomialOracle::box(std::uint64_t a) const
{
    std::vector<Exponents> out{Exponents{}};
    for (unsigned i = 0; i < length(); ++i) {
        std::vector<Exponents> next;
        for (const auto& t : out)
            for (std::int64_t v = -static_cast<std::int64_t>(a - 1) * e_[i]; v < e_[i]; ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::uint32_t> MonomialOracle::subsets(unsigned i) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1U << length()); ++s)
        if (static_cast<unsigned>(std::popcount(s)) == i)
            out.push_back(s);
    return out;
}

std::vector<std::vector<std::int64_t>> MonomialOracle::differential(unsigned i, const Exponents& t, std::uint64_t a,
                                                                    std::vector<std::uint32_t>& rows,
                                                                    std::vector<std::uint32_t>& cols) const
{
    rows.clear();
    cols.clear();
    for (auto s : subsets(i))
        if (present(s, t, a))
            cols.push_back(s);
    if (i < length())
        for (auto s : subsets(i + 1))
            if (present(s, t, a))
                rows.push_back(s);
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto diff = rows[r] & ~cols[c];
            if ((cols[c] & ~rows[r]) != 0 || std::popcount(diff) != 1)
                continue;
            auto below = std::popcount(cols[c] & (diff - 1));
            m[r][c] = (below % 2 == 0) ? 1 : static_cast<std::int64_t>(p_) - 1;
        }
    return m;
}

namespace {

std::int64_t inverse(std::int64_t x, std::uint64_t p)
{
    std::int64_t r = 1, b = x % static_cast<std::int64_t>(p);
    for (auto e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % static_cast<std::int64_t>(p);
        b = b * b % static_cast<std::int64_t>(p);
    }
    return r;
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<std::int64_t>>& m, std::size_t cols, std::uint64_t p)
{
    const auto P = static_cast<std::int64_t>(p);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][c] % P == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        auto inv = inverse(((m[row][c] % P) + P) % P, p);
        for (auto& x : m[row])
            x = ((x % P) + P) % P * inv % P;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] % P == 0)
                continue;
            auto factor = ((m[r][c] % P) + P) % P;
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = (((m[r][k] - factor * m[row][k]) % P) + P) % P;
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::uint64_t MonomialOracle::rank(std::vector<std::vector<std::int64_t>> m) const
{
    if (m.empty())
        return 0;
    return echelon(m, m[0].size(), p_).size();
}

std::vector<std::vector<std::int64_t>> MonomialOracle::null_space(const std::vector<std::vector<std::int64_t>>& m,
                                                                  std::size_t cols) const
{
    auto r = m;
    auto pivots = echelon(r, cols, p_);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<std::int64_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = (static_cast<std::int64_t>(p_) - r[k][free]) % static_cast<std::int64_t>(p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t MonomialOracle::term_dimension(unsigned i, std::uint64_t a) const
{
    std::uint64_t total = 0;
    for (const auto& t : box(a))
        for (auto s : subsets(i))
            total += present(s, t, a) ? 1 : 0;
    return total;
}

std::uint64_t MonomialOracle::kernel_dimension(unsigned i, std::uint64_t a) const
{
    std::uint64_t total = 0;
    std::vector<std::uint32_t> rows, cols;
    for (const auto& t : box(a)) {
        auto m = differential(i, t, a, rows, cols);
        total += cols.size() - rank(m);
    }
    return total;
}

std::uint64_t MonomialOracle::cohomology_dimension(unsigned i, std::uint64_t a) const
{
    std::uint64_t total = 0;
    std::vector<std::uint32_t> rows, cols, prev_rows, prev_cols;
    for (const auto& t : box(a)) {
        auto m = differential(i, t, a, rows, cols);
        std::uint64_t image = 0;
        if (i > 0)
            image = rank(differential(i - 1, t, a, prev_rows, prev_cols));
        total += cols.size() - rank(m) - image;
    }
    return total;
}

std::optional<std::uint64_t> MonomialOracle::death_level(unsigned i, std::uint64_t a, std::uint64_t bound) const
{
    for (std::uint64_t b = a; b <= bound; ++b) {
        bool dead = true;
        std::vector<std::uint32_t> rows, cols, brows, bcols;
        for (const auto& t : box(a)) {
            auto d = differential(i, t, a, rows, cols);
            auto cycles = null_space(d, cols.size());
            if (cycles.empty())
                continue;
            // Transition f_S^{b-a} keeps t and sends summand S to summand S.
            std::vector<std::vector<std::int64_t>> boundary_cols;
            std::vector<std::uint32_t> target;
            if (i > 0) {
                auto d = differential(i - 1, t, b, brows, bcols);
                target = brows;
                for (std::size_t c = 0; c < bcols.size(); ++c) {
                    std::vector<std::int64_t> col(brows.size());
                    for (std::size_t r = 0; r < brows.size(); ++r)
                        col[r] = d[r][c];
                    boundary_cols.push_back(std::move(col));
                }
            } else {
                for (auto s : subsets(i))
                    if (present(s, t, b))
                        target.push_back(s);
            }
            auto base = rank(boundary_cols);
            for (const auto& z : cycles) {
                std::vector<std::int64_t> image(target.size(), 0);
                for (std::size_t c = 0; c < cols.size(); ++c)
                    for (std::size_t r = 0; r < target.size(); ++r)
                        if (target[r] == cols[c])
                            image[r] = z[c];
                auto with = boundary_cols;
                with.push_back(image);
                if (rank(with) != base) {
                    dead = false;
                    break;
                }
            }
            if (!dead)
                break;
        }
        if (dead)
            return b;
    }
    return std::nullopt;
}

bool MonomialOracle::top_class_alive(std::uint64_t a, std::uint64_t b) const
{
    const unsigned c = length();
    const std::uint32_t full = (1U << c) - 1;
    // 1 in summand [c] at level a sits at t = -(a-1) e; transitions keep t.
    Exponents t(c);
    for (unsigned i = 0; i < c; ++i)
        t[i] = -static_cast<std::int64_t>(a - 1) * e_[i];
    if (!present(full, t, b))
        return false;
    std::vector<std::uint32_t> rows, cols;
    auto d = differential(c - 1, t, b, rows, cols);
    std::vector<std::vector<std::int64_t>> image_cols;
    for (std::size_t col = 0; col < cols.size(); ++col) {
        std::vector<std::int64_t> v(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            v[r] = d[r][col];
        image_cols.push_back(std::move(v));
    }
    auto base = rank(image_cols);
    image_cols.emplace_back(rows.size(), 1);  // rows == {full}
    return rank(image_cols) != base;
}

bool monomial_ideal_contains(const std::vector<Exponents>& generators, const Exponents& u)
{
    for (const auto& g : generators) {
        bool divides = true;
        for (std::size_t k = 0; k < g.size(); ++k)
            if (g[k] > u[k]) {
                divides = false;
                break;
            }
        if (divides)
            return true;
    }
    return false;
}

}  // namespace oracle
