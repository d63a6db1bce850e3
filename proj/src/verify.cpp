#include "ddelta/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ddelta/error.hpp"

namespace ddelta {

bool SuiteReport::pass() const
{
    return first_failure() == nullptr;
}

const Assertion* SuiteReport::first_failure() const
{
    for (const auto& a : assertions)
        if (!a.pass)
            return &a;
    return nullptr;
}

void SuiteReport::add(std::string label, bool pass, std::string witness)
{
    assertions.push_back({std::move(label), pass, pass ? std::string{} : std::move(witness)});
}

namespace {

std::string lv(std::uint64_t a)
{
    return std::to_string(a);
}

// Witness for I != J: a reduced basis element of one side missing from the other.
std::string inequality_witness(const Ideal& lhs, const Ideal& rhs)
{
    if (auto w = containment_witness(lhs, rhs))
        return w->to_string() + " lies in " + rhs.to_string() + " but not in " + lhs.to_string();
    if (auto w = containment_witness(rhs, lhs))
        return w->to_string() + " lies in " + lhs.to_string() + " but not in " + rhs.to_string();
    return {};
}

std::uint64_t ipow(std::uint64_t base, unsigned e)
{
    std::uint64_t out = 1;
    for (unsigned k = 0; k < e; ++k) {
        if (out > UINT64_MAX / base)
            throw OverflowError("level overflow");
        out *= base;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport check_colon_identities(const RegularSequence& rs, std::uint64_t max_level)
{
    SuiteReport rep;
    const auto& f = rs.product();
    for (std::uint64_t b = 2; b <= max_level; ++b)
        for (std::uint64_t a = 1; a < b; ++a) {
            const auto& fb = rs.bracket_power(b);
            const auto& fa = rs.bracket_power(a);
            auto lhs1 = colon(fb, f.pow(b - a));
            rep.add("(f^[" + lv(b) + "] : f^" + lv(b - a) + ") = f^[" + lv(a) + "]", lhs1 == fa,
                    inequality_witness(lhs1, fa));
            auto lhs2 = colon(fb, fa);
            auto rhs2 = Ideal(rs.ring_ptr(), {f.pow(b - a)}) + fb;
            rep.add("(f^[" + lv(b) + "] : f^[" + lv(a) + "]) = (f^" + lv(b - a) + ") + f^[" + lv(b) + "]",
                    lhs2 == rhs2, inequality_witness(lhs2, rhs2));
        }
    return rep;
}

SuiteReport check_complex_wellformed(const DDeltaLevel& level)
{
    SuiteReport rep;
    const std::string at = " at level " + lv(level.a);
    for (std::size_t i = 0; i < level.complex.maps.size(); ++i)
        rep.add("differential " + std::to_string(i) + " well defined" + at,
                certify_well_defined(level.complex.maps[i]));
    rep.add("d o d = 0" + at, is_complex(level.complex));
    auto cos = check_semicosimplicial(level);
    rep.add("semi-cosimplicial identities" + at, cos.ok, cos.witness);

    const auto& rs = *level.rs;
    const unsigned c = level.length();
    bool embed_ok = true;
    std::string witness;
    for (unsigned i = 0; i < c; ++i) {
        const auto& m = level.complex.maps[i].matrix;
        for (std::size_t col = 0; col < level.labels[i].size(); ++col) {
            auto s = level.labels[i][col];
            auto es = rs.product_over(s.complement(c), level.a - 1);
            for (unsigned j = 1; j <= c; ++j) {
                if (s.contains(j))
                    continue;
                auto t = s.with(j);
                auto lhs = rs.product_over(t.complement(c), level.a - 1) * m.at(level.index_of(t), col);
                if (!(lhs == es || lhs == -es)) {
                    embed_ok = false;
                    if (witness.empty())
                        witness = "embed(" + t.to_string() + ") d(" + s.to_string() + ") = " + lhs.to_string() +
                                  ", embed(" + s.to_string() + ") = " + es.to_string();
                }
            }
        }
    }
    rep.add("embeddings intertwine the differentials" + at, embed_ok, witness);
    return rep;
}

SuiteReport check_frobenius_stability(const RegSeqPtr& rs, std::uint64_t a)
{
    SuiteReport rep;
    const auto p = rs->characteristic();
    const unsigned c = rs->length();
    const auto la = build_level(rs, a);
    const auto lap = build_level(rs, a * p);
    const auto fa = fedder_chain_map(la);
    const std::string at = " at level " + lv(a);

    auto r = check_chain_map(fa, la, lap);
    rep.add("Fedder chain map well defined" + at, r.well_defined, r.witness);
    rep.add("Fedder chain map commutes with the differentials exactly" + at, r.commutes && r.exact, r.witness);

    const std::uint64_t b = a + 1;
    const auto lb = build_level(rs, b);
    const auto lbp = build_level(rs, b * p);
    auto lhs = compose(fedder_chain_map(lb), transition_chain_map(la, lb));
    auto rhs = compose(transition_chain_map(lap, lbp), fa);
    bool same = lhs.frobenius_power == rhs.frobenius_power;
    std::string witness;
    for (std::size_t i = 0; same && i < lhs.components.size(); ++i)
        if (!(lhs.components[i] == rhs.components[i])) {
            same = false;
            witness = "degree " + std::to_string(i) + ": " + lhs.components[i].to_string() + " vs " +
                      rhs.components[i].to_string();
        }
    rep.add("Fedder commutes with the transition " + lv(a) + " -> " + lv(b), same, witness);

    bool embed_ok = true;
    witness.clear();
    const auto fp = rs->product().pow(p - 1);
    for (const auto& row : la.labels)
        for (auto s : row) {
            auto ea = rs->product_over(s.complement(c), a - 1);
            auto eap = rs->product_over(s.complement(c), a * p - 1);
            auto left = eap * rs->product_over(s, p - 1);
            auto right = fp * frobenius(ea);
            if (!(left == right)) {
                embed_ok = false;
                if (witness.empty())
                    witness = "summand " + s.to_string() + ": " + left.to_string() + " vs " + right.to_string();
            }
        }
    rep.add("embeddings intertwine the Fedder chain map with f_fed" + at, embed_ok, witness);
    return rep;
}

// ---------------------------------------------------------------------------
// Death levels

namespace {

class LevelCache {
public:
    explicit LevelCache(RegSeqPtr rs) : rs_(std::move(rs)) {}

    const DDeltaLevel& level(std::uint64_t a)
    {
        auto it = levels_.find(a);
        if (it == levels_.end())
            it = levels_.emplace(a, build_level(rs_, a)).first;
        return it->second;
    }

    const Submodule& boundaries(std::uint64_t a, unsigned degree)
    {
        auto key = std::make_pair(a, degree);
        auto it = boundaries_.find(key);
        if (it == boundaries_.end())
            it = boundaries_.emplace(key, boundary_module(level(a).complex, degree)).first;
        return it->second;
    }

    bool dead_at(unsigned degree, std::uint64_t a, const PolyVector& v, std::uint64_t b)
    {
        const auto& labels = level(a).labels.at(degree);
        PolyVector image;
        for (std::size_t k = 0; k < labels.size(); ++k)
            image.push_back(v[k] * rs_->product_over(labels[k], b - a));
        return boundaries(b, degree).contains(image);
    }

    const RegSeqPtr& sequence() const { return rs_; }

private:
    RegSeqPtr rs_;
    std::map<std::uint64_t, DDeltaLevel> levels_;
    std::map<std::pair<std::uint64_t, unsigned>, Submodule> boundaries_;
};

std::vector<std::uint64_t> schedule(std::uint64_t a, std::uint64_t p, std::uint64_t bound)
{
    if (bound < a)
        return {};
    std::vector<std::uint64_t> out{a};
    for (std::uint64_t b = a; b <= bound / p && b * p <= bound;) {
        b *= p;
        out.push_back(b);
    }
    if (out.back() < bound)
        out.push_back(bound);
    return out;
}

std::optional<std::uint64_t> find_death(LevelCache& cache, unsigned degree, std::uint64_t a, const PolyVector& v,
                                        std::uint64_t bound, std::vector<std::uint64_t>* tested)
{
    const auto p = cache.sequence()->characteristic();
    auto note = [&](std::uint64_t b) {
        if (tested && std::find(tested->begin(), tested->end(), b) == tested->end())
            tested->push_back(b);
    };
    auto steps = schedule(a, p, bound);
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        note(steps[k]);
        if (cache.dead_at(degree, a, v, steps[k])) {
            hit = k;
            break;
        }
    }
    if (!hit)
        return std::nullopt;
    if (*hit == 0)
        return a;
    // Dead classes stay dead under transitions, so the death set is an up-set.
    std::uint64_t lo = steps[*hit - 1], hi = steps[*hit];
    while (hi - lo > 1) {
        auto mid = lo + (hi - lo) / 2;
        note(mid);
        if (cache.dead_at(degree, a, v, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

bool DeathReport::all_died() const
{
    return std::all_of(generators.begin(), generators.end(),
                       [](const GeneratorDeath& g) { return g.death_level.has_value(); });
}

std::optional<std::uint64_t> DeathReport::max_death_level() const
{
    std::uint64_t out = start_level;
    for (const auto& g : generators) {
        if (!g.death_level)
            return std::nullopt;
        out = std::max(out, *g.death_level);
    }
    return out;
}

std::optional<std::uint64_t> death_level_of(const RegSeqPtr& rs, unsigned degree, std::uint64_t a,
                                            const PolyVector& v, std::uint64_t bound,
                                            std::vector<std::uint64_t>* tested)
{
    LevelCache cache(rs);
    return find_death(cache, degree, a, v, bound, tested);
}

DeathReport verify_vanishing(const RegSeqPtr& rs, unsigned degree, std::uint64_t a, std::optional<std::uint64_t> bound)
{
    if (degree >= rs->length())
        throw DomainError("vanishing is only claimed below the top degree");
    const auto p = rs->characteristic();
    DeathReport rep;
    rep.degree = degree;
    rep.start_level = a;
    rep.bound = bound.value_or(a * p * p);

    LevelCache cache(rs);
    auto h = cohomology(cache.level(a).complex, degree);
    rep.cohomology_zero = h.is_zero();
    if (rep.bound >= a)
        rep.levels_tested.push_back(a);
    for (const auto& g : h.generators)
        rep.generators.push_back({g, find_death(cache, degree, a, g, rep.bound, &rep.levels_tested)});
    std::sort(rep.levels_tested.begin(), rep.levels_tested.end());
    rep.levels_tested.erase(std::unique(rep.levels_tested.begin(), rep.levels_tested.end()), rep.levels_tested.end());
    return rep;
}

bool top_class_persists(const RegSeqPtr& rs, std::uint64_t a, std::uint64_t up_to)
{
    LevelCache cache(rs);
    const unsigned c = rs->length();
    PolyVector one{Polynomial::constant(rs->ring_ptr(), 1)};
    for (std::uint64_t b = a; b <= up_to; ++b)
        if (cache.dead_at(c, a, one, b))
            return false;
    return true;
}

// ---------------------------------------------------------------------------

AugmentationReport verify_augmentation(const RegSeqPtr& rs, std::uint64_t a)
{
    const unsigned c = rs->length();
    const auto& fa = rs->bracket_power(a);
    auto lhs = colon(fa, rs->product());
    std::optional<Ideal> rhs;
    for (const auto& fj : rs->elements()) {
        auto part = colon(fa, fj);
        rhs = rhs ? *rhs + part : part;
    }
    auto level = build_level(rs, a);
    auto gens = fa.generators();
    const auto& last = level.complex.maps[c - 1].matrix;
    auto row = embed_row(level, c);
    for (std::size_t col = 0; col < last.cols(); ++col)
        gens.push_back(row.at(0, 0) * last.at(0, col));
    Ideal image(rs->ring_ptr(), std::move(gens));

    AugmentationReport rep{a, lhs, *rhs, image, lhs == *rhs, image == *rhs, {}};
    if (!rep.colon_equal)
        rep.witness = inequality_witness(lhs, *rhs);
    else if (!rep.image_equal)
        rep.witness = inequality_witness(image, *rhs);
    return rep;
}

StructureKernelReport verify_structure_kernels(const RegSeqPtr& rs, unsigned e)
{
    const auto p = rs->characteristic();
    const auto q = ipow(p, e);
    const auto& f = rs->product();
    const auto& ring = rs->ring_ptr();
    auto col = colon(rs->bracket_power(q + p), f.pow(p - 1));
    const auto& expected = rs->bracket_power(q + 1);
    Ideal fq(ring, {f.pow(q)});
    StructureKernelReport rep{e,
                              q,
                              col,
                              expected,
                              col == expected,
                              {},
                              Ideal(ring, {f}),
                              rs->bracket_power(p),
                              fq + rs->bracket_power(q + 1),
                              fq + rs->bracket_power(q + p)};
    if (!rep.equal)
        rep.witness = inequality_witness(col, expected);
    return rep;
}

Codim2Report verify_codim2_V(const RegSeqPtr& rs, unsigned e)
{
    if (rs->length() != 2)
        throw DomainError("the codimension-two decomposition needs c = 2");
    const auto p = rs->characteristic();
    const auto q = ipow(p, e);
    const auto& ring = rs->ring_ptr();
    const auto& f = rs->element(1);
    const auto& g = rs->element(2);
    const auto fgq = (f * g).pow(q);

    auto colon_f = colon(Ideal(ring, {fgq, f.pow(q + p), g.pow(q + 1)}), f.pow(q + 1));
    Ideal expected_f(ring, {f.pow(p - 1), g.pow(q)});
    auto colon_g = colon(Ideal(ring, {fgq, g.pow(q + p), f.pow(q + 1)}), g.pow(q + 1));
    Ideal expected_g(ring, {g.pow(p - 1), f.pow(q)});
    auto inter = intersect(Ideal(ring, {f.pow(q + 1)}), Ideal(ring, {g.pow(q + 1)}));
    Ideal container(ring, {fgq, f.pow(q + p), g.pow(q + p)});

    Codim2Report rep{e,
                     q,
                     colon_f,
                     expected_f,
                     colon_g,
                     expected_g,
                     inter,
                     container,
                     colon_f == expected_f,
                     colon_g == expected_g,
                     container.contains(inter),
                     {}};
    if (!rep.colon_f_equal)
        rep.witness = inequality_witness(colon_f, expected_f);
    else if (!rep.colon_g_equal)
        rep.witness = inequality_witness(colon_g, expected_g);
    else if (!rep.intersection_contained)
        rep.witness = containment_witness(container, inter)->to_string() + " lies in the intersection but not in " +
                      container.to_string();
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Polynomial random_polynomial(const RingPtr& ring, std::uint64_t& state, unsigned terms, unsigned max_degree)
{
    const auto n = ring->num_vars();
    const auto p = ring->characteristic();
    std::vector<Term> out;
    const unsigned count = static_cast<unsigned>(splitmix(state) % (terms + 1));
    for (unsigned t = 0; t < count; ++t) {
        Monomial m(n);
        unsigned budget = static_cast<unsigned>(splitmix(state) % (max_degree + 1));
        for (unsigned k = 0; k < budget; ++k) {
            auto v = splitmix(state) % n;
            m.set(v, m[v] + 1);
        }
        out.push_back({std::move(m), 1 + splitmix(state) % (p - 1)});
    }
    return Polynomial(ring, std::move(out));
}

SuiteReport check_cech_fedder_algebra(const RegSeqPtr& rs, std::uint64_t seed, unsigned samples, unsigned e_max)
{
    SuiteReport rep;
    const auto& ring = rs->ring_ptr();
    const auto p = rs->characteristic();
    const unsigned c = rs->length();
    const auto one = Polynomial::constant(ring, 1);
    const auto& f = rs->product();
    std::uint64_t state = seed;

    for (unsigned e = 1; e <= e_max; ++e) {
        auto lhs = f_fed_power(CechClass(rs, one, 2), e);
        CechClass rhs(rs, one, ipow(p, e) + 1);
        rep.add("f_fed^" + std::to_string(e) + "({{1/f^2}}) = {{1/f^" + lv(ipow(p, e) + 1) + "}}",
                cech_equal(lhs, rhs), lhs.to_string() + " vs " + rhs.to_string());
    }

    struct Tally {
        std::string label;
        unsigned failures = 0;
        std::string witness;
        void check(bool ok, const std::function<std::string()>& why)
        {
            if (!ok && failures++ == 0)
                witness = why();
        }
    };
    const std::string n = " (" + std::to_string(samples) + " classes)";
    Tally fixed{"f_fed fixes the image of R/f" + n, 0, {}};
    Tally augmentation{"f * f_fed(xi) = f_nat(f * xi)" + n, 0, {}};
    Tally semilinear{"f_nat and f_fed are p-semilinear" + n, 0, {}};
    Tally embed{"phi_embed is injective, lands in the annihilator and phi_section inverts it" + n, 0, {}};
    Tally stable{"phi_embed intertwines the Fedder actions" + n, 0, {}};
    Tally transition{"transition maps are injective" + n, 0, {}};

    for (unsigned k = 0; k < samples; ++k) {
        auto r = random_polynomial(ring, state, 3, 3);
        auto s = random_polynomial(ring, state, 2, 2);
        const std::uint64_t a = 1 + splitmix(state) % 3;
        CechClass xi(rs, r, a);

        auto base = scalar_action(r, CechClass(rs, one, 1));
        auto lhs_fixed = f_fed(base);
        auto rhs_fixed = scalar_action(frobenius(r), CechClass(rs, one, 1));
        fixed.check(cech_equal(lhs_fixed, rhs_fixed),
                    [&] { return "r = " + r.to_string() + ": " + lhs_fixed.to_string() + " vs " + rhs_fixed.to_string(); });

        auto lhs_aug = scalar_action(f, f_fed(xi));
        auto rhs_aug = f_nat(scalar_action(f, xi));
        augmentation.check(cech_equal(lhs_aug, rhs_aug),
                           [&] { return "xi = " + xi.to_string() + ": " + lhs_aug.to_string() + " vs " + rhs_aug.to_string(); });

        auto sp = frobenius(s);
        bool semi = cech_equal(f_nat(scalar_action(s, xi)), scalar_action(sp, f_nat(xi))) &&
                    cech_equal(f_fed(scalar_action(s, xi)), scalar_action(sp, f_fed(xi)));
        semilinear.check(semi, [&] { return "s = " + s.to_string() + ", xi = " + xi.to_string(); });

        const Subset g_seq(static_cast<std::uint32_t>(splitmix(state) % (1u << c)));
        auto rbar = random_polynomial(ring, state, 3, 3);
        auto emb = phi_embed(rs, rbar, a, g_seq);
        auto quotient = annihilator_quotient_ideal(*rs, g_seq, a);
        bool ok = cech_is_zero(emb) == quotient.contains(rbar) && annihilated_by(emb, g_seq);
        if (ok) {
            auto back = phi_section(emb, g_seq);
            ok = quotient.contains(back - rbar);
        }
        embed.check(ok, [&] { return "rbar = " + rbar.to_string() + ", g = f_" + g_seq.to_string() + ", a = " + lv(a); });

        auto via_quotient = phi_embed(rs, fedder_on_quotient(*rs, rbar, a, g_seq), a * p, g_seq);
        auto via_class = f_fed(emb);
        stable.check(cech_equal(via_quotient, via_class), [&] {
            return "rbar = " + rbar.to_string() + ", g = f_" + g_seq.to_string() + ": " + via_quotient.to_string() +
                   " vs " + via_class.to_string();
        });

        bool inj = true;
        for (std::uint64_t b = a; b <= a + 3; ++b)
            inj = inj && (cech_is_zero(xi) == cech_is_zero(raise_level(xi, b)));
        transition.check(inj, [&] { return "xi = " + xi.to_string(); });
    }
    for (auto* t : {&fixed, &augmentation, &semilinear, &embed, &stable, &transition})
        rep.add(t->label, t->failures == 0, t->witness);
    return rep;
}

SuiteReport check_filtration(const DDeltaLevel& level)
{
    SuiteReport rep;
    for (unsigned n = 1; n <= level.length(); ++n) {
        auto split = quotient_and_kernel_complexes(level, n);
        rep.add("filtration n=" + std::to_string(n) + " at level " + lv(level.a), split.ok(), split.witness);
    }
    return rep;
}

}  // namespace ddelta
