#include "ddelta/cech.hpp"

#include <algorithm>

#include "ddelta/error.hpp"
#include "ddelta/module_gb.hpp"

namespace ddelta {

CechClass::CechClass(RegSeqPtr rs, const Polynomial& numerator, std::uint64_t level)
    : rs_(std::move(rs)), numerator_(numerator), level_(level)
{
    if (!rs_)
        throw DomainError("Cech class needs a sequence");
    if (level_ == 0)
        throw DomainError("Cech class level must be at least 1");
    require_same_ring(rs_->ring(), numerator.ring());
    numerator_ = rs_->bracket_power(level_).normal_form(numerator);
}

std::string CechClass::to_string() const
{
    return "{{" + numerator_.to_string() + "/f^" + std::to_string(level_) + "}}";
}

bool cech_is_zero(const CechClass& xi)
{
    return xi.numerator().is_zero();
}

CechClass raise_level(const CechClass& xi, std::uint64_t b)
{
    if (b < xi.level())
        throw DomainError("cannot lower the level of a Cech class");
    if (b == xi.level())
        return xi;
    const auto& rs = xi.sequence();
    return CechClass(rs, rs->product().pow(b - xi.level()) * xi.numerator(), b);
}

bool cech_equal(const CechClass& xi, const CechClass& eta)
{
    if (xi.sequence() != eta.sequence() && xi.sequence()->elements() != eta.sequence()->elements())
        throw ContextMismatch("Cech classes over different sequences");
    const auto b = std::max(xi.level(), eta.level());
    return raise_level(xi, b).numerator() == raise_level(eta, b).numerator();
}

CechClass cech_add(const CechClass& xi, const CechClass& eta)
{
    const auto b = std::max(xi.level(), eta.level());
    return CechClass(xi.sequence(), raise_level(xi, b).numerator() + raise_level(eta, b).numerator(), b);
}

CechClass scalar_action(const Polynomial& s, const CechClass& xi)
{
    return CechClass(xi.sequence(), s * xi.numerator(), xi.level());
}

CechClass f_nat(const CechClass& xi)
{
    const auto p = xi.sequence()->characteristic();
    return CechClass(xi.sequence(), frobenius(xi.numerator()), xi.level() * p);
}

CechClass f_fed(const CechClass& xi)
{
    const auto& rs = xi.sequence();
    const auto p = rs->characteristic();
    return CechClass(rs, rs->product().pow(p - 1) * frobenius(xi.numerator()), xi.level() * p);
}

CechClass f_fed_power(const CechClass& xi, unsigned e)
{
    CechClass out = xi;
    for (unsigned k = 0; k < e; ++k)
        out = f_fed(out);
    return out;
}

bool annihilated_by(const CechClass& xi, Subset t)
{
    const auto& rs = *xi.sequence();
    const auto& fa = rs.bracket_power(xi.level());
    for (auto j : t.elements())
        if (!fa.contains(rs.element(j) * xi.numerator()))
            return false;
    return true;
}

Ideal annihilator_quotient_ideal(const RegularSequence& rs, Subset g_seq, std::uint64_t a)
{
    std::vector<Polynomial> gens;
    for (unsigned i = 1; i <= rs.length(); ++i)
        gens.push_back(g_seq.contains(i) ? rs.element(i) : rs.element(i).pow(a));
    return Ideal(rs.ring_ptr(), std::move(gens));
}

CechClass phi_embed(const RegSeqPtr& rs, const Polynomial& r, std::uint64_t a, Subset g_seq)
{
    if (!g_seq.is_subset_of(Subset::full(rs->length())))
        throw DomainError("subsequence index out of range");
    return CechClass(rs, rs->product_over(g_seq, a - 1) * r, a);
}

Polynomial phi_section(const CechClass& xi, Subset g_seq)
{
    if (!annihilated_by(xi, g_seq))
        throw NotInAnnihilator(xi.to_string() + " is not annihilated by f_" + g_seq.to_string());
    const auto& rs = *xi.sequence();
    const auto a = xi.level();
    std::vector<Polynomial> gens{rs.product_over(g_seq, a - 1)};
    for (const auto& f : rs.elements())
        gens.push_back(f.pow(a));
    auto cof = gb::lift(xi.numerator(), gens);
    if (!cof)
        throw Error("annihilator section failed to lift " + xi.to_string());
    return annihilator_quotient_ideal(rs, g_seq, a).normal_form(cof->front());
}

Polynomial fedder_on_quotient(const RegularSequence& rs, const Polynomial& r, std::uint64_t a, Subset g_seq)
{
    const auto p = rs.characteristic();
    const auto t = g_seq.complement(rs.length());
    auto image = rs.product_over(t, p - 1) * frobenius(r);
    return annihilator_quotient_ideal(rs, g_seq, a * p).normal_form(image);
}

}  // namespace ddelta
