#include <gtest/gtest.h>

#include "ddelta/ddelta_complex.hpp"
#include "ddelta/verify.hpp"
#include "graded_oracle.hpp"
#include "monomial_oracle.hpp"

using namespace ddelta;

namespace {

struct Instance {
    std::uint64_t p;
    std::vector<std::int64_t> e;  // f_i = x_i^{e_i}
};

RegSeqPtr monomial_sequence(const Instance& in)
{
    std::vector<std::string> names{"x", "y", "z", "w"};
    std::vector<std::string> vars(names.begin(), names.begin() + static_cast<long>(in.e.size()));
    auto r = make_ring(in.p, vars);
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < in.e.size(); ++i)
        f.push_back(Polynomial::variable(r, i).pow(static_cast<std::uint64_t>(in.e[i])));
    return RegularSequence::create(r, f);
}

std::vector<Instance> instances()
{
    std::vector<Instance> out;
    for (std::uint64_t p : {2, 3}) {
        out.push_back({p, {1}});
        out.push_back({p, {1, 1}});
        out.push_back({p, {1, 1, 1}});
        out.push_back({p, {2, 1}});
    }
    return out;
}

std::string name(const Instance& in, std::uint64_t a)
{
    std::string s = "p=" + std::to_string(in.p) + " e=(";
    for (auto x : in.e)
        s += std::to_string(x) + ",";
    return s + ") a=" + std::to_string(a);
}

}  // namespace

TEST(MonomialOracle, CohomologyAndKernelsAgree)
{
    for (const auto& in : instances()) {
        auto rs = monomial_sequence(in);
        oracle::MonomialOracle o(in.p, in.e);
        const unsigned c = rs->length();
        for (std::uint64_t a = 1; a <= 4; ++a) {
            auto level = build_level(rs, a);
            for (unsigned i = 0; i <= c; ++i) {
                EXPECT_EQ(level.complex.terms[i].dimension(), std::optional<std::uint64_t>(o.term_dimension(i, a)))
                    << name(in, a) << " i=" << i;
                EXPECT_EQ(cohomology(level.complex, i).dimension(),
                          std::optional<std::uint64_t>(o.cohomology_dimension(i, a)))
                    << name(in, a) << " i=" << i;
                if (i < c)
                    EXPECT_EQ(kernel(level.complex.maps[i]).module.dimension(),
                              std::optional<std::uint64_t>(o.kernel_dimension(i, a)))
                        << name(in, a) << " i=" << i;
            }
        }
    }
}

TEST(MonomialOracle, SummandMembershipAgrees)
{
    for (const auto& in : instances()) {
        auto rs = monomial_sequence(in);
        oracle::MonomialOracle o(in.p, in.e);
        const unsigned c = rs->length();
        for (std::uint64_t a = 1; a <= 3; ++a)
            for (auto s : all_subsets(c)) {
                auto J = summand_ideal(*rs, s, a);
                // Exponent box reaching one past every generator.
                std::vector<std::int64_t> u(c, 0);
                while (true) {
                    std::vector<std::uint64_t> ue(u.begin(), u.end());
                    auto m = Polynomial::term(rs->ring_ptr(), Monomial(ue));
                    ASSERT_EQ(J.contains(m), o.in_summand_ideal(u, s.mask(), a)) << name(in, a);
                    std::size_t k = 0;
                    while (k < c && ++u[k] > static_cast<std::int64_t>(a) * in.e[k] + 1)
                        u[k++] = 0;
                    if (k == c)
                        break;
                }
            }
    }
}

TEST(MonomialOracle, DeathLevelsAgree)
{
    for (const auto& in : instances()) {
        auto rs = monomial_sequence(in);
        oracle::MonomialOracle o(in.p, in.e);
        const unsigned c = rs->length();
        for (std::uint64_t a = 1; a <= 4; ++a) {
            for (unsigned i = 0; i < c; ++i) {
                auto bound = a * in.p * in.p;
                auto rep = verify_vanishing(rs, i, a, bound);
                EXPECT_EQ(rep.max_death_level(), o.death_level(i, a, bound)) << name(in, a) << " i=" << i;
            }
            for (std::uint64_t b = a; b <= a + 3; ++b)
                EXPECT_EQ(top_class_persists(rs, a, b), o.top_class_alive(a, b)) << name(in, a) << " b=" << b;
        }
    }
}

TEST(MonomialOracle, SmallHandCounts)
{
    // (x, y) at level 2: terms of dimension 1, 2 + 2, 4; H^2 has dimension 1.
    oracle::MonomialOracle o(2, {1, 1});
    EXPECT_EQ(o.term_dimension(0, 2), 1u);
    EXPECT_EQ(o.term_dimension(1, 2), 4u);
    EXPECT_EQ(o.term_dimension(2, 2), 4u);
    EXPECT_EQ(o.cohomology_dimension(0, 2), 0u);
    EXPECT_EQ(o.cohomology_dimension(1, 2), 0u);
    EXPECT_EQ(o.cohomology_dimension(2, 2), 1u);
    EXPECT_FALSE(o.top_class_alive(1, 1));
    EXPECT_TRUE(o.top_class_alive(2, 5));
}

TEST(GradedOracle, MatchesMonomialOracle)
{
    auto r = make_ring(3, {"x", "y"});
    auto g = oracle::GradedOracle::from({parse_polynomial("x^2", r), parse_polynomial("y", r)});
    oracle::MonomialOracle o(3, {2, 1});
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (unsigned i = 0; i <= 2; ++i)
            EXPECT_EQ(g.cohomology_dimension(i, a), o.cohomology_dimension(i, a));
    EXPECT_EQ(g.death_level(1, 2, 18), o.death_level(1, 2, 18));
}

TEST(GradedOracle, NonMonomialAgreesWithEngine)
{
    for (std::uint64_t p : {2, 3}) {
        auto r = make_ring(p, {"x", "y"});
        std::vector<Polynomial> f{parse_polynomial("x+y", r), parse_polynomial("x*y", r)};
        auto rs = RegularSequence::create(r, f);
        auto g = oracle::GradedOracle::from(f);
        for (std::uint64_t a = 1; a <= 3; ++a) {
            auto level = build_level(rs, a);
            for (unsigned i = 0; i <= 2; ++i)
                EXPECT_EQ(cohomology(level.complex, i).dimension(), std::optional<std::uint64_t>(g.cohomology_dimension(i, a)))
                    << "p=" << p << " a=" << a << " i=" << i;
            EXPECT_EQ(level.complex.terms[2].dimension(), std::optional<std::uint64_t>(g.quotient_dimension(3, a)));
        }
    }
}
