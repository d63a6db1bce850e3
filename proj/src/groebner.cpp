#include "ddelta/groebner.hpp"

#include <algorithm>

#include "ddelta/error.hpp"
#include "ddelta/module_gb.hpp"

namespace ddelta {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>())
{
    for (const auto& g : gens_)
        require_same_ring(*ring_, g.ring());
}

const std::vector<Polynomial>& Ideal::groebner_basis() const
{
    std::call_once(cache_->once, [this] {
        std::vector<gb::Vec> vecs;
        vecs.reserve(gens_.size());
        for (const auto& g : gens_)
            vecs.push_back(gb::from_poly(g));
        auto basis = gb::reduced_basis(std::move(vecs), *ring_, false);
        cache_->basis.reserve(basis.size());
        for (const auto& v : basis)
            cache_->basis.push_back(gb::to_poly(v, ring_));
    });
    return cache_->basis;
}

Polynomial Ideal::normal_form(const Polynomial& r) const
{
    require_same_ring(*ring_, r.ring());
    const auto& basis = groebner_basis();
    std::vector<gb::Vec> vecs;
    vecs.reserve(basis.size());
    for (const auto& g : basis)
        vecs.push_back(gb::from_poly(g));
    return gb::to_poly(gb::normal_form(gb::from_poly(r), vecs, *ring_), ring_);
}

bool Ideal::contains(const Polynomial& r) const
{
    if (r.is_zero())
        return true;
    if (is_unit())
        return true;
    return normal_form(r).is_zero();
}

bool Ideal::contains(const Ideal& other) const
{
    return !containment_witness(*this, other).has_value();
}

bool Ideal::is_zero() const
{
    return groebner_basis().empty();
}

bool Ideal::is_unit() const
{
    const auto& basis = groebner_basis();
    return basis.size() == 1 && basis.front().is_constant();
}

bool Ideal::operator==(const Ideal& other) const
{
    if (!same_ring(*ring_, *other.ring_))
        return false;
    return groebner_basis() == other.groebner_basis();
}

std::string Ideal::to_string() const
{
    std::string out = "(";
    const auto& basis = groebner_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i)
            out += ", ";
        out += basis[i].to_string();
    }
    if (basis.empty())
        out += "0";
    return out + ")";
}

bool ideal_member(const Polynomial& r, const Ideal& ideal)
{
    return ideal.contains(r);
}

Ideal operator+(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal operator*(const Polynomial& r, const Ideal& ideal)
{
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(r * g);
    return Ideal(ideal.ring_ptr(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Polynomial& r)
{
    require_same_ring(ideal.ring(), r.ring());
    if (r.is_zero())
        throw DomainError("colon by the zero polynomial");
    const auto& ring = ideal.ring_ptr();
    if (ideal.is_zero())
        return Ideal(ring);
    std::vector<PolyVector> columns{PolyVector{r}};
    std::vector<PolyVector> relations;
    for (const auto& g : ideal.groebner_basis())
        relations.push_back(PolyVector{g});
    auto pre = gb::preimage(ring, 1, columns, relations);
    std::vector<Polynomial> gens;
    gens.reserve(pre.size());
    for (auto& v : pre)
        gens.push_back(std::move(v.front()));
    return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& other)
{
    require_same_ring(ideal.ring(), other.ring());
    std::optional<Ideal> acc;
    for (const auto& g : other.generators()) {
        if (g.is_zero())
            continue;
        Ideal part = colon(ideal, g);
        acc = acc ? intersect(*acc, part) : part;
    }
    if (!acc)
        return Ideal(ideal.ring_ptr(), {Polynomial::constant(ideal.ring_ptr(), 1)});
    return *acc;
}

Ideal intersect(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    const auto& ring = a.ring_ptr();
    if (a.is_zero() || b.is_zero())
        return Ideal(ring);
    const auto& agens = a.groebner_basis();
    std::vector<PolyVector> columns;
    for (const auto& g : agens)
        columns.push_back(PolyVector{g});
    std::vector<PolyVector> relations;
    for (const auto& g : b.groebner_basis())
        relations.push_back(PolyVector{g});
    auto pre = gb::preimage(ring, 1, columns, relations);
    std::vector<Polynomial> gens;
    for (const auto& u : pre) {
        Polynomial s(ring);
        for (std::size_t k = 0; k < agens.size(); ++k)
            s += u[k] * agens[k];
        gens.push_back(std::move(s));
    }
    return Ideal(ring, std::move(gens));
}

std::optional<Polynomial> containment_witness(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    for (const auto& g : b.groebner_basis())
        if (!a.contains(g))
            return g;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subset

Subset Subset::of(std::initializer_list<unsigned> elements)
{
    std::uint32_t mask = 0;
    for (auto e : elements) {
        if (e == 0 || e > 32)
            throw DomainError("subset elements are 1-based and at most 32");
        mask |= 1u << (e - 1);
    }
    return Subset(mask);
}

std::vector<unsigned> Subset::elements() const
{
    std::vector<unsigned> out;
    for (unsigned i = 0; i < 32; ++i)
        if ((mask_ >> i) & 1u)
            out.push_back(i + 1);
    return out;
}

unsigned Subset::position(unsigned element) const
{
    if (!contains(element))
        throw DomainError("element " + std::to_string(element) + " is not in " + to_string());
    std::uint32_t below = mask_ & ((1u << (element - 1)) - 1);
    return static_cast<unsigned>(__builtin_popcount(below)) + 1;
}

std::string Subset::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (auto e : elements()) {
        if (!first)
            out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::vector<Subset> subsets_of_size(unsigned c, unsigned k)
{
    std::vector<Subset> out;
    const std::uint32_t limit = c >= 32 ? ~0u : (1u << c);
    for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (static_cast<unsigned>(__builtin_popcount(mask)) == k)
            out.emplace_back(mask);
    return out;
}

std::vector<Subset> all_subsets(unsigned c)
{
    std::vector<Subset> out;
    for (unsigned k = 0; k <= c; ++k) {
        auto part = subsets_of_size(c, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutability

std::string PermutabilityCertificate::to_string() const
{
    if (permutable)
        return "permutable";
    std::string out;
    for (const auto& f : failures) {
        if (!out.empty())
            out += "; ";
        if (f.j == 0)
            out += "the sequence generates the unit ideal";
        else
            out += "T=" + f.t.to_string() + ", j=" + std::to_string(f.j);
    }
    return out.empty() ? "empty sequence" : out;
}

PermutabilityCertificate is_permutable_regular(const std::vector<Polynomial>& f)
{
    PermutabilityCertificate cert;
    const auto c = static_cast<unsigned>(f.size());
    if (c == 0)
        return cert;
    if (c > 20)
        throw DomainError("permutability check supports at most 20 elements");
    const auto& ring = f.front().ring_ptr();
    for (const auto& g : f)
        require_same_ring(*ring, g.ring());

    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        Subset t(mask);
        std::vector<Polynomial> gens;
        for (auto i : t.elements())
            gens.push_back(f[i - 1]);
        Ideal ft(ring, gens);
        for (unsigned j = 1; j <= c; ++j) {
            if (t.contains(j))
                continue;
            bool ok;
            if (t.empty())
                ok = !f[j - 1].is_zero();
            else
                ok = !f[j - 1].is_zero() && colon(ft, f[j - 1]) == ft;
            if (!ok)
                cert.failures.push_back({t, j});
        }
    }
    if (Ideal(ring, f).is_unit())
        cert.failures.push_back({Subset::full(c), 0});
    cert.permutable = cert.failures.empty();
    return cert;
}

// ---------------------------------------------------------------------------
// RegularSequence

RegularSequence::RegularSequence(RingPtr ring, std::vector<Polynomial> f)
    : ring_(std::move(ring)), f_(std::move(f)), product_(Polynomial::constant(ring_, 1))
{
    for (const auto& g : f_)
        product_ *= g;
}

std::shared_ptr<const RegularSequence> RegularSequence::create(RingPtr ring, std::vector<Polynomial> f)
{
    for (const auto& g : f)
        require_same_ring(*ring, g.ring());
    auto cert = is_permutable_regular(f);
    if (!cert.permutable)
        throw NotPermutable(std::move(cert));
    return std::shared_ptr<const RegularSequence>(new RegularSequence(std::move(ring), std::move(f)));
}

Polynomial RegularSequence::product_over(Subset t, std::uint64_t e) const
{
    Polynomial out = Polynomial::constant(ring_, 1);
    for (auto i : t.elements())
        out *= element(i);
    return e == 1 ? out : out.pow(e);
}

Ideal RegularSequence::ideal_of(Subset t) const
{
    std::vector<Polynomial> gens;
    for (auto i : t.elements())
        gens.push_back(element(i));
    return Ideal(ring_, std::move(gens));
}

const Ideal& RegularSequence::bracket_power(std::uint64_t a) const
{
    if (a == 0)
        throw DomainError("bracket power exponent must be at least 1");
    std::lock_guard lock(cache_mutex_);
    auto it = bracket_cache_.find(a);
    if (it == bracket_cache_.end()) {
        it = bracket_cache_.emplace(a, std::make_unique<Ideal>(bracket_power(a, Subset::full(length())))).first;
    }
    return *it->second;
}

Ideal RegularSequence::bracket_power(std::uint64_t a, Subset t) const
{
    if (a == 0)
        throw DomainError("bracket power exponent must be at least 1");
    std::vector<Polynomial> gens;
    for (auto i : t.elements())
        gens.push_back(element(i).pow(a));
    return Ideal(ring_, std::move(gens));
}

std::string RegularSequence::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (i)
            out += ", ";
        out += f_[i].to_string();
    }
    return out + ")";
}

}  // namespace ddelta
