#include <gtest/gtest.h>

#include "ddelta/cech.hpp"

using namespace ddelta;

namespace {

struct XY : ::testing::Test {
    RingPtr r = make_ring(2, {"x", "y"});
    RegSeqPtr rs = RegularSequence::create(r, {parse_polynomial("x", r), parse_polynomial("y", r)});
    Polynomial P(const std::string& s) const { return parse_polynomial(s, r); }
    CechClass C(const std::string& s, std::uint64_t a) const { return CechClass(rs, P(s), a); }
};

}  // namespace

TEST_F(XY, IsZero)
{
    EXPECT_TRUE(cech_is_zero(C("x^2", 2)));
    EXPECT_FALSE(cech_is_zero(C("1", 1)));
    EXPECT_FALSE(cech_is_zero(C("x*y", 2)));
    EXPECT_THROW(C("1", 0), DomainError);
}

TEST_F(XY, Equal)
{
    EXPECT_TRUE(cech_equal(C("1", 1), C("x*y", 2)));
    EXPECT_FALSE(cech_equal(C("1", 1), C("x", 2)));
    EXPECT_TRUE(cech_equal(C("x+y", 3), C("x+y", 3)));
}

TEST_F(XY, ScalarAction)
{
    auto xi = C("x+y^2", 3);
    EXPECT_TRUE(cech_equal(scalar_action(P("1"), xi), xi));
    EXPECT_TRUE(cech_is_zero(scalar_action(rs->product(), C("1", 1))));
    EXPECT_TRUE(cech_equal(scalar_action(P("x"), C("y", 2)), C("x*y", 2)));
    EXPECT_TRUE(cech_equal(scalar_action(P("x"), C("y", 2)), C("1", 1)));
}

TEST_F(XY, NaturalAction)
{
    auto a = f_nat(C("1", 1));
    EXPECT_EQ(a.level(), 2u);
    EXPECT_TRUE(cech_equal(a, C("1", 2)));
    EXPECT_TRUE(cech_is_zero(f_nat(C("0", 3))));
    auto b = f_nat(C("x*y", 2));
    EXPECT_EQ(b.numerator(), P("x^2*y^2"));
    EXPECT_EQ(b.level(), 4u);
    EXPECT_TRUE(cech_equal(b, C("1", 2)));
}

TEST(Fedder, FormulasForSeveralPrimes)
{
    for (std::uint64_t p : {2, 3, 5}) {
        auto r = make_ring(p, {"x", "y"});
        auto rs = RegularSequence::create(r, {parse_polynomial("x+y", r), parse_polynomial("x*y", r)});
        auto s = parse_polynomial("x+2*y^2+1", r);
        EXPECT_TRUE(cech_equal(f_fed(CechClass(rs, s, 1)), CechClass(rs, s.pow(p), 1)));
        EXPECT_TRUE(cech_equal(f_fed(CechClass(rs, Polynomial::constant(r, 1), 2)),
                               CechClass(rs, Polynomial::constant(r, 1), p + 1)));
        EXPECT_TRUE(cech_is_zero(f_fed(CechClass(rs, Polynomial(r), 2))));
        std::uint64_t q = 1;
        for (unsigned e = 1; e <= 3; ++e) {
            q *= p;
            EXPECT_TRUE(cech_equal(f_fed_power(CechClass(rs, Polynomial::constant(r, 1), 2), e),
                                   CechClass(rs, Polynomial::constant(r, 1), q + 1)));
        }
    }
}

TEST_F(XY, AnnihilatedBy)
{
    EXPECT_TRUE(annihilated_by(C("1", 1), Subset::of({1, 2})));
    EXPECT_TRUE(annihilated_by(C("x", 2), Subset::of({1})));
    EXPECT_FALSE(annihilated_by(C("x", 2), Subset::of({2})));
    EXPECT_FALSE(annihilated_by(C("1", 2), Subset::of({1})));
    EXPECT_FALSE(annihilated_by(C("1", 2), Subset::of({2})));
}

TEST_F(XY, PhiEmbed)
{
    auto g = Subset::of({1});
    auto e = phi_embed(rs, P("1"), 2, g);
    EXPECT_EQ(e.numerator(), P("x"));
    EXPECT_EQ(e.level(), 2u);
    EXPECT_TRUE(annihilated_by(e, g));
    EXPECT_TRUE(cech_equal(phi_embed(rs, P("x+y"), 1, g), C("x+y", 1)));
}

TEST_F(XY, PhiEmbedFrobeniusStability)
{
    // f_fed(phi(1)) and phi(fedder_on_quotient(1)) at a = 2, p = 2: both {{x^3 y / f^4}}.
    auto g = Subset::of({1});
    auto lhs = f_fed(phi_embed(rs, P("1"), 2, g));
    auto rhs = phi_embed(rs, fedder_on_quotient(*rs, P("1"), 2, g), 4, g);
    EXPECT_EQ(lhs.level(), 4u);
    EXPECT_TRUE(cech_equal(lhs, rhs));
    EXPECT_TRUE(cech_equal(lhs, C("x^3*y", 4)));
    EXPECT_FALSE(cech_equal(lhs, C("x^3", 4)));
}

TEST_F(XY, PhiSection)
{
    auto g = Subset::of({1});
    auto quotient = annihilator_quotient_ideal(*rs, g, 2);
    EXPECT_EQ(quotient, Ideal(r, {P("x"), P("y^2")}));
    auto s = phi_section(C("x", 2), g);
    EXPECT_EQ(quotient.normal_form(s), P("1"));
    auto z = phi_section(C("x^2", 2), g);
    EXPECT_TRUE(quotient.contains(z));
    EXPECT_THROW(phi_section(C("1", 2), g), NotInAnnihilator);
}

TEST_F(XY, PhiInjectiveAndTransitionsInjective)
{
    auto g = Subset::of({2});
    for (const char* s : {"1", "x", "y", "x*y", "x+y", "x^2+y", "x^3*y"}) {
        auto quotient = annihilator_quotient_ideal(*rs, g, 3);
        EXPECT_EQ(cech_is_zero(phi_embed(rs, P(s), 3, g)), quotient.contains(P(s))) << s;
        for (std::uint64_t b = 3; b <= 6; ++b)
            EXPECT_EQ(cech_is_zero(C(s, 3)), cech_is_zero(raise_level(C(s, 3), b))) << s << " " << b;
    }
}

TEST_F(XY, Semilinearity)
{
    auto xi = C("x+y", 3);
    auto s = P("x*y+1");
    EXPECT_TRUE(cech_equal(f_nat(scalar_action(s, xi)), scalar_action(s.pow(2), f_nat(xi))));
    EXPECT_TRUE(cech_equal(f_fed(scalar_action(s, xi)), scalar_action(s.pow(2), f_fed(xi))));
}

TEST_F(XY, FixedImageAndAugmentationAction)
{
    for (const char* s : {"1", "x", "x+y^3", "x*y+y"}) {
        auto one = C("1", 1);
        EXPECT_TRUE(cech_equal(f_fed(scalar_action(P(s), one)), scalar_action(P(s).pow(2), one)));
        auto xi = C(s, 3);
        EXPECT_TRUE(cech_equal(scalar_action(rs->product(), f_fed(xi)), f_nat(scalar_action(rs->product(), xi))));
    }
}
