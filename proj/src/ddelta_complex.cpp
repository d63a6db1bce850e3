#include "ddelta/ddelta_complex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ddelta/error.hpp"

namespace ddelta {

namespace {

Polynomial signed_multiplier(const RegularSequence& rs, Subset s, unsigned j, std::uint64_t a)
{
    auto m = rs.element(j).pow(a - 1);
    return s.with(j).position(j) % 2 == 1 ? -m : m;
}

FPModule term_module(const RingPtr& ring, const std::vector<Ideal>& ideals, const std::vector<Subset>& labels)
{
    if (ideals.empty())
        return FPModule(ring, 0);
    return FPModule::direct_sum(ideals, labels);
}

std::size_t find_label(const std::vector<Subset>& labels, Subset s)
{
    auto it = std::find(labels.begin(), labels.end(), s);
    return it == labels.end() ? labels.size() : static_cast<std::size_t>(it - labels.begin());
}

// Sub-collection of summands closed under the differential of the kept part.
struct Restricted {
    ChainComplex complex;
    std::vector<std::vector<Subset>> labels;
};

Restricted restrict_level(const DDeltaLevel& level, const std::function<bool(Subset)>& keep)
{
    Restricted out;
    const auto& ring = level.rs->ring_ptr();
    const unsigned c = level.length();
    std::vector<std::vector<std::size_t>> index(c + 1);
    for (unsigned i = 0; i <= c; ++i) {
        std::vector<Ideal> ideals;
        std::vector<Subset> labels;
        for (std::size_t k = 0; k < level.labels[i].size(); ++k)
            if (keep(level.labels[i][k])) {
                labels.push_back(level.labels[i][k]);
                ideals.push_back(level.ideals[i][k]);
                index[i].push_back(k);
            }
        out.complex.terms.push_back(term_module(ring, ideals, labels));
        out.labels.push_back(std::move(labels));
    }
    for (unsigned i = 0; i < c; ++i) {
        const auto& full = level.complex.maps[i].matrix;
        PolyMatrix m(ring, index[i + 1].size(), index[i].size());
        for (std::size_t r = 0; r < index[i + 1].size(); ++r)
            for (std::size_t col = 0; col < index[i].size(); ++col)
                m.at(r, col) = full.at(index[i + 1][r], index[i][col]);
        out.complex.maps.push_back({out.complex.terms[i], out.complex.terms[i + 1], std::move(m)});
    }
    return out;
}

// 0/1 matrix sending the summand labelled S in `from` to the one labelled S in `to`.
ChainMap label_map(const RingPtr& ring, const std::vector<std::vector<Subset>>& from,
                   const std::vector<std::vector<Subset>>& to)
{
    ChainMap out;
    for (std::size_t i = 0; i < from.size(); ++i) {
        PolyMatrix m(ring, to[i].size(), from[i].size());
        for (std::size_t col = 0; col < from[i].size(); ++col) {
            auto r = find_label(to[i], from[i][col]);
            if (r < to[i].size())
                m.at(r, col) = Polynomial::constant(ring, 1);
        }
        out.components.push_back(std::move(m));
    }
    return out;
}

std::string entry_witness(const std::string& what, std::size_t degree, std::size_t r, std::size_t c,
                          const Polynomial& lhs, const Polynomial& rhs)
{
    return what + " degree " + std::to_string(degree) + " entry (" + std::to_string(r) + "," + std::to_string(c) +
           "): " + lhs.to_string() + " vs " + rhs.to_string();
}

}  // namespace

Ideal summand_ideal(const RegularSequence& rs, Subset s, std::uint64_t a)
{
    std::vector<Polynomial> gens;
    for (unsigned i = 1; i <= rs.length(); ++i)
        gens.push_back(s.contains(i) ? rs.element(i).pow(a) : rs.element(i));
    return Ideal(rs.ring_ptr(), std::move(gens));
}

std::size_t DDeltaLevel::index_of(Subset s) const
{
    const auto& row = labels.at(s.size());
    auto k = find_label(row, s);
    if (k == row.size())
        throw DomainError("no summand labelled " + s.to_string());
    return k;
}

DDeltaLevel build_level(const RegSeqPtr& rs, std::uint64_t a)
{
    if (a == 0)
        throw DomainError("level must be at least 1");
    DDeltaLevel level;
    level.rs = rs;
    level.a = a;
    const unsigned c = rs->length();
    const auto& ring = rs->ring_ptr();
    for (unsigned i = 0; i <= c; ++i) {
        level.labels.push_back(subsets_of_size(c, i));
        std::vector<Ideal> ideals;
        for (auto s : level.labels.back())
            ideals.push_back(summand_ideal(*rs, s, a));
        level.complex.terms.push_back(term_module(ring, ideals, level.labels.back()));
        level.ideals.push_back(std::move(ideals));
    }
    for (unsigned i = 0; i < c; ++i) {
        PolyMatrix m(ring, level.labels[i + 1].size(), level.labels[i].size());
        for (std::size_t col = 0; col < level.labels[i].size(); ++col) {
            auto s = level.labels[i][col];
            for (unsigned j = 1; j <= c; ++j)
                if (!s.contains(j))
                    m.at(level.index_of(s.with(j)), col) = signed_multiplier(*rs, s, j, a);
        }
        level.complex.maps.push_back({level.complex.terms[i], level.complex.terms[i + 1], std::move(m)});
    }
    return level;
}

PolyMatrix coface(const DDeltaLevel& level, unsigned i, unsigned k)
{
    const auto& rs = *level.rs;
    const unsigned c = level.length();
    if (i >= c || k == 0 || k > i + 1)
        throw DomainError("coface index out of range");
    PolyMatrix m(rs.ring_ptr(), level.labels[i + 1].size(), level.labels[i].size());
    for (std::size_t col = 0; col < level.labels[i].size(); ++col) {
        auto s = level.labels[i][col];
        for (unsigned j = 1; j <= c; ++j) {
            if (s.contains(j) || s.with(j).position(j) != k)
                continue;
            m.at(level.index_of(s.with(j)), col) = rs.element(j).pow(level.a - 1);
        }
    }
    return m;
}

CosimplicialReport check_semicosimplicial(const DDeltaLevel& level)
{
    CosimplicialReport rep;
    const unsigned c = level.length();
    for (unsigned i = 0; i < c && rep.ok; ++i) {
        PolyMatrix sum(level.rs->ring_ptr(), level.labels[i + 1].size(), level.labels[i].size());
        for (unsigned k = 1; k <= i + 1; ++k) {
            auto d = coface(level, i, k);
            sum = sum + (k % 2 == 1 ? d.scaled(-1) : d);
        }
        if (!(sum == level.complex.maps[i].matrix)) {
            rep.ok = false;
            rep.witness = "differential " + std::to_string(i) + " differs from the alternating coface sum";
        }
    }
    for (unsigned i = 0; i + 2 <= c && rep.ok; ++i)
        for (unsigned k = 2; k <= i + 2 && rep.ok; ++k)
            for (unsigned j = 1; j < k && rep.ok; ++j) {
                auto lhs = coface(level, i + 1, k) * coface(level, i, j);
                auto rhs = coface(level, i + 1, j) * coface(level, i, k - 1);
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.witness = "d^" + std::to_string(i + 1) + "_" + std::to_string(k) + " d^" + std::to_string(i) +
                                  "_" + std::to_string(j) + " != d^" + std::to_string(i + 1) + "_" + std::to_string(j) +
                                  " d^" + std::to_string(i) + "_" + std::to_string(k - 1);
                }
            }
    return rep;
}

ModuleMap embed_summand(const DDeltaLevel& level, Subset s)
{
    const auto& rs = *level.rs;
    const unsigned c = level.length();
    PolyMatrix m(rs.ring_ptr(), 1, 1);
    m.at(0, 0) = rs.product_over(s.complement(c), level.a - 1);
    return {FPModule::cyclic(summand_ideal(rs, s, level.a)), FPModule::cyclic(rs.bracket_power(level.a)),
            std::move(m)};
}

PolyMatrix embed_row(const DDeltaLevel& level, unsigned i)
{
    const auto& rs = *level.rs;
    const unsigned c = level.length();
    PolyMatrix m(rs.ring_ptr(), 1, level.labels.at(i).size());
    for (std::size_t k = 0; k < level.labels[i].size(); ++k)
        m.at(0, k) = rs.product_over(level.labels[i][k].complement(c), level.a - 1);
    return m;
}

ChainMap transition_chain_map(const DDeltaLevel& from, const DDeltaLevel& to)
{
    if (from.rs->elements() != to.rs->elements())
        throw ContextMismatch("transition between levels of different sequences");
    if (to.a < from.a)
        throw DomainError("transition needs b >= a, got a=" + std::to_string(from.a) + " b=" + std::to_string(to.a));
    ChainMap out;
    for (const auto& row : from.labels) {
        std::vector<Polynomial> diag;
        for (auto s : row)
            diag.push_back(from.rs->product_over(s, to.a - from.a));
        out.components.push_back(PolyMatrix::diagonal(from.rs->ring_ptr(), diag));
    }
    return out;
}

ChainMap fedder_chain_map(const DDeltaLevel& from)
{
    const auto p = from.rs->characteristic();
    ChainMap out;
    out.frobenius_power = 1;
    for (const auto& row : from.labels) {
        std::vector<Polynomial> diag;
        for (auto s : row)
            diag.push_back(from.rs->product_over(s, p - 1));
        out.components.push_back(PolyMatrix::diagonal(from.rs->ring_ptr(), diag));
    }
    return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    if (g.components.size() != f.components.size())
        throw DomainError("chain maps of different lengths");
    ChainMap out;
    out.frobenius_power = g.frobenius_power + f.frobenius_power;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        out.components.push_back(g.components[i] * f.components[i].frobenius(g.frobenius_power));
    return out;
}

ChainMapReport check_chain_map(const ChainMap& map, const ChainComplex& from, const ChainComplex& to)
{
    ChainMapReport rep;
    const auto e = map.frobenius_power;
    if (map.components.size() != from.terms.size() || from.terms.size() != to.terms.size()) {
        rep.well_defined = rep.commutes = rep.exact = false;
        rep.witness = "length mismatch";
        return rep;
    }
    for (std::size_t i = 0; i < from.terms.size(); ++i) {
        const auto& m = map.components[i];
        for (const auto& rel : from.terms[i].relations()) {
            PolyVector fr;
            for (const auto& x : rel)
                fr.push_back(frobenius(x, e));
            auto image = m.apply(fr);
            if (!to.terms[i].is_zero_element(image)) {
                rep.well_defined = false;
                if (rep.witness.empty())
                    rep.witness = "degree " + std::to_string(i) + ": relation " + vector_to_string(rel) +
                                  " maps to nonzero " + vector_to_string(to.terms[i].normal_form(image));
            }
        }
    }
    for (std::size_t i = 0; i < from.maps.size(); ++i) {
        auto lhs = to.maps[i].matrix * map.components[i];
        auto rhs = map.components[i + 1] * from.maps[i].matrix.frobenius(e);
        if (lhs == rhs)
            continue;
        rep.exact = false;
        auto diff = lhs - rhs;
        for (std::size_t c = 0; c < diff.cols(); ++c)
            if (!to.terms[i + 1].is_zero_element(diff.column(c))) {
                rep.commutes = false;
                if (rep.witness.empty())
                    for (std::size_t r = 0; r < diff.rows(); ++r)
                        if (!(lhs.at(r, c) == rhs.at(r, c))) {
                            rep.witness = entry_witness("square", i, r, c, lhs.at(r, c), rhs.at(r, c));
                            break;
                        }
            }
    }
    return rep;
}

ChainMapReport check_chain_map(const ChainMap& map, const DDeltaLevel& from, const DDeltaLevel& to)
{
    return check_chain_map(map, from.complex, to.complex);
}

FiltrationSplit quotient_and_kernel_complexes(const DDeltaLevel& level, unsigned n)
{
    const unsigned c = level.length();
    if (n == 0 || n > c)
        throw DomainError("filtration index must satisfy 1 <= n <= c");
    const auto& rs = *level.rs;
    const auto& ring = rs.ring_ptr();
    const auto a = level.a;
    const Subset upto_n = Subset::full(n);
    const Subset upto_prev = Subset::full(n - 1);

    auto q = restrict_level(level, [&](Subset s) { return s.is_subset_of(upto_n); });
    auto q_prev = restrict_level(level, [&](Subset s) { return s.is_subset_of(upto_prev); });
    auto k = restrict_level(level, [&](Subset s) { return s.is_subset_of(upto_n) && s.contains(n); });

    FiltrationSplit out;
    out.n = n;
    out.quotient_is_complex = is_complex(q.complex);
    out.kernel_is_complex = is_complex(k.complex);

    out.ranks_add = true;
    for (unsigned i = 0; i <= c; ++i)
        if (q.labels[i].size() != k.labels[i].size() + q_prev.labels[i].size()) {
            out.ranks_add = false;
            out.witness = "rank mismatch in degree " + std::to_string(i);
        }

    auto proj = check_chain_map(label_map(ring, q.labels, q_prev.labels), q.complex, q_prev.complex);
    out.projection_is_chain_map = proj.ok();
    auto incl = check_chain_map(label_map(ring, k.labels, q.labels), k.complex, q.complex);
    out.inclusion_is_chain_map = incl.ok();
    if (out.witness.empty())
        out.witness = !proj.ok() ? proj.witness : incl.witness;

    // Q_n against the level-a complex of f_[n] over R / f_{[c] \ [n]}.
    std::vector<Polynomial> outside;
    for (unsigned i = n + 1; i <= c; ++i)
        outside.push_back(rs.element(i));
    auto sub_ideal = [&](Subset s, unsigned top, std::vector<Polynomial> extra) {
        for (unsigned i = 1; i <= top; ++i)
            extra.push_back(s.contains(i) ? rs.element(i).pow(a) : rs.element(i));
        return Ideal(ring, std::move(extra));
    };
    out.quotient_matches_subsequence = true;
    for (unsigned i = 0; i <= c; ++i)
        for (std::size_t idx = 0; idx < q.labels[i].size(); ++idx) {
            auto s = q.labels[i][idx];
            if (!(sub_ideal(s, n, outside) == summand_ideal(rs, s, a))) {
                out.quotient_matches_subsequence = false;
                out.witness = "quotient summand " + s.to_string() + " has the wrong ideal";
            }
            if (i == c)
                continue;
            for (unsigned j = 1; j <= n; ++j) {
                if (s.contains(j))
                    continue;
                auto r = find_label(q.labels[i + 1], s.with(j));
                if (!(q.complex.maps[i].matrix.at(r, idx) == signed_multiplier(rs, s, j, a))) {
                    out.quotient_matches_subsequence = false;
                    out.witness = "quotient differential at " + s.to_string() + " -> " + s.with(j).to_string();
                }
            }
        }

    // K_n against the level-a complex of f_[n-1] over R / (f_{[c] \ [n]}, f_n^a), shifted by one.
    auto kernel_extra = outside;
    kernel_extra.push_back(rs.element(n).pow(a));
    out.kernel_matches_shifted = k.labels[0].empty();
    for (unsigned i = 1; i <= c; ++i) {
        auto expected = i - 1 <= n - 1 ? subsets_of_size(n - 1, i - 1) : std::vector<Subset>{};
        if (k.labels[i].size() != expected.size()) {
            out.kernel_matches_shifted = false;
            out.witness = "kernel degree " + std::to_string(i) + " has the wrong number of summands";
            continue;
        }
        for (std::size_t idx = 0; idx < k.labels[i].size(); ++idx) {
            auto s = k.labels[i][idx];
            auto s_prime = s.without(n);
            if (s_prime != expected[idx] || !(sub_ideal(s_prime, n - 1, kernel_extra) == summand_ideal(rs, s, a))) {
                out.kernel_matches_shifted = false;
                out.witness = "kernel summand " + s.to_string() + " does not match " + s_prime.to_string();
            }
            if (i == c)
                continue;
            for (unsigned j = 1; j < n; ++j) {
                if (s.contains(j))
                    continue;
                auto r = find_label(k.labels[i + 1], s.with(j));
                if (!(k.complex.maps[i].matrix.at(r, idx) == signed_multiplier(rs, s_prime, j, a))) {
                    out.kernel_matches_shifted = false;
                    out.witness = "kernel differential at " + s.to_string() + " -> " + s.with(j).to_string();
                }
            }
        }
    }

    out.quotient = std::move(q.complex);
    out.quotient_labels = std::move(q.labels);
    out.kernel = std::move(k.complex);
    out.kernel_labels = std::move(k.labels);
    return out;
}

std::string to_dot(const DDeltaLevel& level)
{
    std::ostringstream out;
    out << "digraph ddelta {\n  rankdir=LR;\n  label=\"level " << level.a << ", f = " << level.rs->to_string()
        << "\";\n";
    auto node = [](Subset s) { return "S" + std::to_string(s.mask()); };
    for (std::size_t i = 0; i < level.labels.size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n    label=\"degree " << i << "\";\n";
        for (std::size_t k = 0; k < level.labels[i].size(); ++k) {
            auto s = level.labels[i][k];
            out << "    " << node(s) << " [label=\"" << s.to_string() << "\\nR/" << level.ideals[i][k].to_string()
                << "\"];\n";
        }
        out << "  }\n";
    }
    for (std::size_t i = 0; i + 1 < level.labels.size(); ++i) {
        const auto& m = level.complex.maps[i].matrix;
        for (std::size_t col = 0; col < m.cols(); ++col)
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (!m.at(r, col).is_zero())
                    out << "  " << node(level.labels[i][col]) << " -> " << node(level.labels[i + 1][r])
                        << " [label=\"" << m.at(r, col).to_string() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace ddelta
