#include <dslice/dslice.hpp>

#include <gtest/gtest.h>

using namespace dslice;

namespace {

LaurentPolynomial P(const std::string& text) { return parse_laurent(text); }

const Relator& relator(const Presentation& pres, const std::string& name) {
    for (const auto& r : pres.relators())
        if (r.name == name) return r;
    throw Error("no relator " + name);
}

TEST(Pretzel, ParamsValidated) {
    EXPECT_THROW(PretzelParams(0, 1), Error);
    EXPECT_THROW(PretzelParams(1, 0), Error);
    EXPECT_NO_THROW(PretzelParams(1, 1));
}

TEST(Pretzel, PresentationShape) {
    auto pres = pretzel_presentation({1, 1});
    EXPECT_EQ(pres.generators(), (std::vector<std::string>{"a", "b", "c", "d"}));
    EXPECT_EQ(*relator(pres, "r1").word, parse_word("a b^-1 a b a^-1 b a^-1 a d^-1 a d^-1 a^-1 d a^-1"));
    EXPECT_EQ(*relator(pres, "r1").word, parse_word("a b^-1 a b a^-1 b d^-1 a d^-1 a^-1 d a^-1"));
    EXPECT_FALSE(relator(pres, "r3").word.has_value());
    EXPECT_TRUE(relator(pres, "r3").omitted_generators.count("b"));
    EXPECT_EQ(*pres.longitude(), parse_word("b d^-1"));
    EXPECT_EQ(*pres.distinguished_generator(), "b");
    for (const auto& name : {"r1", "r2"})
        EXPECT_EQ(abelianize(*relator(pres, name).word, pres.abelianization()), LaurentPolynomial(1));
}

TEST(Pretzel, RelatorDerivativesSmallCases) {
    auto pres = pretzel_presentation({1, 1});
    const auto& m = pres.abelianization();
    EXPECT_EQ(fox_derivative(relator(pres, "r1"), "b", m), P("s^-3 - s^-2 + s^-1"));
    EXPECT_EQ(fox_derivative(relator(pres, "r2"), "b", m), P("s^-3 - s^-2 + s^-1 + t^-1 - 1"));
    EXPECT_TRUE(fox_derivative(relator(pres, "r3"), "b", m).is_zero());

    EXPECT_EQ(relator_derivative_closed_form({1, 1}).first, P("s^-3*(1 - s + s^2)"));
    EXPECT_EQ(relator_derivative_closed_form({2, 1}).first, P("s^-5*(1 - s + s^2 - s^3 + s^4)"));
    EXPECT_EQ(relator_derivative_closed_form({1, 2}).second, P("s^-3*(1 - s + s^2) + (t^-1 - 1)*(1 + s*t^-1)"));
    EXPECT_EQ(specialize(fox_derivative(relator(pres, "r2"), "b", m), {{"t", 1}}), P("s^-3*(1 - s + s^2)"));
}

TEST(Pretzel, ObstructionExamples) {
    auto r = longitude_obstruction(pretzel_presentation({1, 1}));
    EXPECT_EQ(r.verdict, Verdict::Obstructed);
    EXPECT_EQ(r.target, LaurentPolynomial(1));
    EXPECT_EQ(r.gcd, P("1 - s + s^2"));
    ASSERT_EQ(r.generators_specialized.size(), 3u);
    EXPECT_EQ(r.generators_specialized[0], P("s^-3 - s^-2 + s^-1"));
    EXPECT_TRUE(r.witness.has_value());

    EXPECT_EQ(longitude_obstruction(pretzel_presentation({1, 6})).verdict, Verdict::Inconclusive);
    EXPECT_TRUE(is_pretzel_boundary_obstructed({1, 1}));
    EXPECT_FALSE(is_pretzel_boundary_obstructed({2, 10}));
    EXPECT_TRUE(is_pretzel_boundary_obstructed({2, 5}));
}

TEST(Pretzel, TrivialLongitudeIsInconclusive) {
    auto base = pretzel_presentation({1, 1});
    Presentation pres(base.generators(), base.relators(), base.abelianization(), GroupWord(), "b");
    auto r = longitude_obstruction(pres);
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_TRUE(r.target.is_zero());
}

TEST(Pretzel, MissingLongitudeRejected) {
    auto base = pretzel_presentation({1, 1});
    EXPECT_THROW(longitude_obstruction(Presentation(base.generators(), base.relators(), base.abelianization())), Error);
    EXPECT_THROW(
        longitude_obstruction(Presentation(base.generators(), base.relators(), base.abelianization(), *base.longitude())),
        Error);
}

// Properties over the grid 1 <= p <= 6, 1 <= n <= 40.

TEST(PretzelProperty, DerivativesMatchClosedForms) {
    for (long p = 1; p <= 6; ++p)
        for (long n = 1; n <= 40; ++n) {
            auto pres = pretzel_presentation({p, n});
            const auto& m = pres.abelianization();
            auto [c1, c2] = relator_derivative_closed_form({p, n});
            auto d1 = fox_derivative(relator(pres, "r1"), "b", m);
            auto d2 = fox_derivative(relator(pres, "r2"), "b", m);
            ASSERT_EQ(d1, c1) << p << "," << n;
            ASSERT_EQ(d2, c2) << p << "," << n;
            ASSERT_EQ(specialize(d2, {{"t", 1}}), d1) << p << "," << n;
        }
}

TEST(PretzelProperty, PipelineMatchesClosedForm) {
    for (const auto& row : pretzel_scan(6, 40)) {
        EXPECT_EQ(row.closed_form_obstructed, row.n % (2 * (2 * row.p + 1)) != 0);
        EXPECT_TRUE(row.agree()) << row.p << "," << row.n;
    }
}

TEST(PretzelProperty, VerdictReproducibleFromReport) {
    for (long p = 1; p <= 3; ++p)
        for (long n = 1; n <= 20; ++n) {
            auto r = longitude_obstruction(pretzel_presentation({p, n}));
            EXPECT_EQ(recheck_verdict(r), r.verdict);
        }
}

}  // namespace
