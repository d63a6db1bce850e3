#include "ddelta/module_gb.hpp"

#include <algorithm>

#include "ddelta/budget.hpp"
#include "ddelta/error.hpp"

namespace ddelta::gb {

int compare(const VTerm& a, const VTerm& b, TermOrder order) noexcept
{
    if (a.comp != b.comp)
        return a.comp < b.comp ? 1 : -1;
    return ddelta::compare(a.mono, b.mono, order);
}

Vec from_poly(const Polynomial& f, std::uint32_t comp)
{
    Vec v;
    v.reserve(f.size());
    for (const auto& t : f.terms())
        v.push_back({comp, t.monomial, t.coeff});
    return v;
}

Vec from_vector(std::span<const Polynomial> v, std::uint32_t offset)
{
    Vec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (const auto& t : v[i].terms())
            out.push_back({static_cast<std::uint32_t>(i) + offset, t.monomial, t.coeff});
    return out;
}

PolyVector to_vector(const Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset)
{
    std::vector<std::vector<Term>> buckets(rank);
    for (const auto& t : v) {
        if (t.comp < offset || t.comp - offset >= rank)
            throw DomainError("module element has a component outside the requested range");
        buckets[t.comp - offset].push_back({t.mono, t.coeff});
    }
    PolyVector out;
    out.reserve(rank);
    for (auto& b : buckets)
        out.emplace_back(ring, std::move(b));
    return out;
}

Polynomial to_poly(const Vec& v, const RingPtr& ring)
{
    return to_vector(v, ring, 1).front();
}

Vec add_scaled(std::span<const VTerm> a, std::span<const VTerm> b, std::uint64_t coeff, const Monomial& mono,
               const RingContext& ring)
{
    const auto& field = ring.field();
    const auto order = ring.order();
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    // Scaled terms of b are produced lazily; multiplication by `mono` preserves their order.
    std::optional<VTerm> bj;
    auto load_b = [&]() {
        if (j < b.size())
            bj = VTerm{b[j].comp, b[j].mono * mono, field.mul(b[j].coeff, coeff)};
        else
            bj.reset();
    };
    load_b();
    while (i < a.size() || bj) {
        int cmp;
        if (i == a.size())
            cmp = -1;
        else if (!bj)
            cmp = 1;
        else
            cmp = compare(a[i], *bj, order);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            if (bj->coeff != 0)
                out.push_back(std::move(*bj));
            ++j;
            load_b();
        } else {
            auto c = field.add(a[i].coeff, bj->coeff);
            if (c != 0)
                out.push_back({a[i].comp, a[i].mono, c});
            ++i;
            ++j;
            load_b();
        }
    }
    return out;
}

namespace {

Vec make_monic(Vec v, const RingContext& ring)
{
    if (v.empty())
        return v;
    const auto& field = ring.field();
    auto inv = field.inv(v.front().coeff);
    for (auto& t : v)
        t.coeff = field.mul(t.coeff, inv);
    return v;
}

std::uint64_t max_degree(const Vec& v)
{
    std::uint64_t d = 0;
    for (const auto& t : v)
        d = std::max(d, t.mono.degree());
    return d;
}

const Vec* find_reducer(const VTerm& t, std::span<const Vec> basis)
{
    for (const auto& g : basis) {
        const auto& lead = g.front();
        if (lead.comp == t.comp && lead.mono.divides(t.mono))
            return &g;
    }
    return nullptr;
}

struct Element {
    Vec vec;
    bool active = true;
    std::uint64_t sugar = 0;
};

struct Pair {
    std::size_t i, j;  // i < j
    std::uint32_t comp;
    Monomial lcm;
    std::uint64_t sugar = 0;
};

class Buchberger {
public:
    Buchberger(const RingContext& ring, bool module_mode)
        : ring_(ring), module_mode_(module_mode), budget_(current_budget())
    {
    }

    std::vector<Vec> run(std::vector<Vec> generators)
    {
        for (auto& g : generators) {
            Vec h = reduce_by_active(g);
            if (!h.empty())
                insert(make_monic(std::move(h), ring_), max_degree(g));
        }
        while (!pairs_.empty()) {
            Pair pair = take_next_pair();
            if (++pairs_processed_ > budget_.max_pairs)
                throw BudgetExceeded("Groebner basis computation exceeded the S-pair budget (" +
                                     std::to_string(budget_.max_pairs) + ")");
            Vec s = s_vector(pair);
            Vec h = reduce_by_active(s);
            if (!h.empty())
                insert(make_monic(std::move(h), ring_), std::max(pair.sugar, max_degree(h)));
        }
        return finish();
    }

private:
    Vec reduce_by_active(const Vec& v)
    {
        active_.clear();
        for (const auto& e : elements_)
            if (e.active)
                active_.push_back(e.vec);
        return normal_form(v, active_, ring_);
    }



    Vec s_vector(const Pair& pair) const
    {
        const Vec& f = elements_[pair.i].vec;
        const Vec& g = elements_[pair.j].vec;
        Vec left = add_scaled({}, f, 1, pair.lcm / f.front().mono, ring_);
        return add_scaled(left, g, ring_.field().neg(1), pair.lcm / g.front().mono, ring_);
    }

    Pair take_next_pair()
    {
        // Sugar strategy, then normal selection; ties broken by index for determinism.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const auto& a = pairs_[k];
            const auto& b = pairs_[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar)
                    best = k;
                continue;
            }
            VTerm ta{a.comp, a.lcm, 1}, tb{b.comp, b.lcm, 1};
            int cmp = compare(ta, tb, ring_.order());
            if (cmp < 0 || (cmp == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i)))
                best = k;
        }
        Pair out = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return out;
    }

    bool coprime_leads(std::size_t a, std::size_t b) const
    {
        return !module_mode_ && elements_[a].vec.front().mono.coprime(elements_[b].vec.front().mono);
    }

    // Gebauer-Moeller update.
    void insert(Vec h, std::uint64_t sugar)
    {
        if (max_degree(h) > budget_.max_degree)
            throw BudgetExceeded("Groebner basis computation exceeded the degree budget (" +
                                 std::to_string(budget_.max_degree) + ")");
        const std::size_t hi = elements_.size();
        const auto hcomp = h.front().comp;
        const Monomial hlead = h.front().mono;
        elements_.push_back({std::move(h), true, sugar});

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < hi; ++g) {
            if (!elements_[g].active || elements_[g].vec.front().comp != hcomp)
                continue;
            const auto& gl = elements_[g].vec.front().mono;
            auto l = hlead.lcm(gl);
            auto ps = std::max(elements_[g].sugar + l.degree() - gl.degree(), sugar + l.degree() - hlead.degree());
            candidates.push_back({g, hi, hcomp, std::move(l), ps});
        }

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const auto& cand = candidates[k];
            bool keep = coprime_leads(cand.i, hi);
            if (!keep) {
                keep = true;
                for (std::size_t l = k + 1; l < candidates.size() && keep; ++l)
                    if (candidates[l].lcm.divides(cand.lcm))
                        keep = false;
                for (std::size_t l = 0; l < kept.size() && keep; ++l)
                    if (kept[l].lcm.divides(cand.lcm))
                        keep = false;
            }
            if (keep)
                kept.push_back(cand);
        }
        std::erase_if(kept, [&](const Pair& pr) { return coprime_leads(pr.i, hi); });

        std::erase_if(pairs_, [&](const Pair& pr) {
            if (pr.comp != hcomp || !hlead.divides(pr.lcm))
                return false;
            const auto& li = elements_[pr.i].vec.front().mono;
            const auto& lj = elements_[pr.j].vec.front().mono;
            return !(li.lcm(hlead) == pr.lcm) && !(lj.lcm(hlead) == pr.lcm);
        });
        for (auto& pr : kept)
            pairs_.push_back(std::move(pr));

        for (std::size_t g = 0; g < hi; ++g) {
            auto& e = elements_[g];
            if (e.active && e.vec.front().comp == hcomp && hlead.divides(e.vec.front().mono))
                e.active = false;
        }
    }

    std::vector<Vec> finish()
    {
        std::vector<Vec> basis;
        for (auto& e : elements_)
            if (e.active)
                basis.push_back(std::move(e.vec));
        // Leading terms already form an antichain; reduce the tails.
        std::vector<Vec> reduced;
        reduced.reserve(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::vector<Vec> others;
            for (std::size_t l = 0; l < basis.size(); ++l)
                if (l != k)
                    others.push_back(basis[l]);
            reduced.push_back(make_monic(normal_form(basis[k], others, ring_), ring_));
        }
        const auto order = ring_.order();
        std::sort(reduced.begin(), reduced.end(),
                  [order](const Vec& a, const Vec& b) { return compare(a.front(), b.front(), order) > 0; });
        return reduced;
    }

    const RingContext& ring_;
    bool module_mode_;
    Budget budget_;
    std::vector<Element> elements_;
    std::vector<Pair> pairs_;
    std::vector<Vec> active_;
    std::uint64_t pairs_processed_ = 0;
};

}  // namespace

std::vector<Vec> reduced_basis(std::vector<Vec> generators, const RingContext& ring, bool module_mode)
{
    std::erase_if(generators, [](const Vec& v) { return v.empty(); });
    if (generators.empty())
        return {};
    return Buchberger(ring, module_mode).run(std::move(generators));
}

Vec normal_form(const Vec& v, std::span<const Vec> basis, const RingContext& ring)
{
    const auto& field = ring.field();
    Vec result;
    Vec work = v;
    std::size_t pos = 0;
    while (pos < work.size()) {
        const VTerm& lead = work[pos];
        const Vec* g = find_reducer(lead, basis);
        if (g == nullptr) {
            result.push_back(lead);
            ++pos;
            continue;
        }
        const auto& glead = g->front();
        auto factor = field.neg(field.mul(lead.coeff, field.inv(glead.coeff)));
        Monomial mult = lead.mono / glead.mono;
        work = add_scaled(std::span<const VTerm>(work).subspan(pos), *g, factor, mult, ring);
        pos = 0;
    }
    return result;
}

std::vector<PolyVector> preimage(const RingPtr& ring, std::size_t target_rank, std::span<const PolyVector> columns,
                                 std::span<const PolyVector> relations)
{
    const auto m = static_cast<std::uint32_t>(target_rank);
    const std::size_t n = columns.size();
    std::vector<Vec> gens;
    gens.reserve(n + relations.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (columns[k].size() != target_rank)
            throw DomainError("column has the wrong rank");
        Vec v = from_vector(columns[k]);
        Monomial one(ring->num_vars());
        v.push_back({m + static_cast<std::uint32_t>(k), one, 1});
        gens.push_back(std::move(v));
    }
    for (const auto& rel : relations) {
        if (rel.size() != target_rank)
            throw DomainError("relation has the wrong rank");
        gens.push_back(from_vector(rel));
    }
    auto basis = reduced_basis(std::move(gens), *ring, true);
    std::vector<PolyVector> out;
    for (const auto& g : basis)
        if (g.front().comp >= m)
            out.push_back(to_vector(g, ring, n, m));
    return out;
}

std::optional<PolyVector> lift(const Polynomial& r, std::span<const Polynomial> gens)
{
    const auto& ring = r.ring_ptr();
    std::vector<Vec> tagged;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        require_same_ring(r.ring(), gens[k].ring());
        Vec v = from_poly(gens[k], 0);
        v.push_back({static_cast<std::uint32_t>(k + 1), Monomial(ring->num_vars()), 1});
        tagged.push_back(std::move(v));
    }
    auto basis = reduced_basis(std::move(tagged), *ring, true);
    Vec rem = normal_form(from_poly(r, 0), basis, *ring);
    if (!rem.empty() && rem.front().comp == 0)
        return std::nullopt;
    PolyVector cof = to_vector(rem, ring, gens.size(), 1);
    for (auto& c : cof)
        c = -c;
    return cof;
}

}  // namespace ddelta::gb
