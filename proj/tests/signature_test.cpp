#include "random_inputs.hpp"

#include <gtest/gtest.h>

using namespace dslice;
using dslice::testing::Rng;

namespace {

const SeifertMatrix& named(const std::string& n) { return builtin_matrix(n); }

TEST(RootOfUnity, Normalization) {
    RootOfUnity w(2, 12);
    EXPECT_EQ(w.k(), 1);
    EXPECT_EQ(w.m(), 6);
    EXPECT_EQ(RootOfUnity(-1, 6), RootOfUnity(5, 6));
    EXPECT_EQ(w.conjugate(), RootOfUnity(5, 6));
    EXPECT_THROW(RootOfUnity(0, 5), Error);
    EXPECT_THROW(RootOfUnity(6, 6), Error);
    EXPECT_THROW(parse_root_of_unity("0/1"), Error);
    EXPECT_THROW(parse_root_of_unity("abc"), Error);
    EXPECT_EQ(parse_root_of_unity("3/9"), RootOfUnity(1, 3));
}

TEST(Cyclotomic, FieldArithmetic) {
    auto f = CyclotomicField::make(6);
    auto z = CyclotomicElement::zeta_power(f, 1);
    // zeta_6 satisfies z^2 - z + 1 = 0
    EXPECT_TRUE((z * z - z + CyclotomicElement(1)).is_zero());
    EXPECT_EQ(z * z.conjugate(), CyclotomicElement(1));
    EXPECT_EQ(z.inverse(), z.conjugate());
    auto re = z + z.conjugate();  // 2 cos(pi/3) = 1
    EXPECT_TRUE(re.is_real());
    EXPECT_EQ(re, CyclotomicElement(1));

    auto g = CyclotomicField::make(7);
    auto c = CyclotomicElement::zeta_power(g, 3) + CyclotomicElement::zeta_power(g, -3);  // 2 cos(6 pi / 7) < 0
    EXPECT_EQ(c.sign(), -1);
    auto d = CyclotomicElement::zeta_power(g, 1) + CyclotomicElement::zeta_power(g, -1);  // 2 cos(2 pi / 7) > 0
    EXPECT_EQ(d.sign(), 1);
    // 4cos^2(2pi/7) = 1.554958...
    EXPECT_EQ((d * d - CyclotomicElement(Rational(15549, 10000))).sign(), 1);
    EXPECT_EQ((d * d - CyclotomicElement(Rational(15550, 10000))).sign(), -1);
}

TEST(Signature, HermitianMatrixExample) {
    auto h = hermitian_matrix(named("trefoil"), {1, 2});
    EXPECT_TRUE(h.is_hermitian());
    EXPECT_EQ(h.entries(0, 0), CyclotomicElement(-4));
    EXPECT_EQ(h.entries(0, 1), CyclotomicElement(2));
    EXPECT_EQ(h.entries(1, 0), CyclotomicElement(2));
    EXPECT_EQ(h.entries(1, 1), CyclotomicElement(-4));
}

TEST(Signature, EvenQCharacteristicPolynomial) {
    auto h = hermitian_matrix(named("evenq_example"), {1, 3});
    EXPECT_EQ(rational_characteristic_polynomial(h), RationalPoly({0, 36, -3, -6, 1}));
    EXPECT_EQ(signature(h), 1);
}

TEST(Signature, Examples) {
    EXPECT_EQ(signature_at(named("8_20"), {1, 6}), 1);
    EXPECT_EQ(signature_at(named("evenq_example"), {1, 3}), 1);
    EXPECT_EQ(signature_at(named("unknot"), {1, 3}), 0);
    EXPECT_EQ(signature_at(named("trefoil"), {1, 2}), -2);
    EXPECT_EQ(signature_at(reverse_sum(named("8_20")), {1, 6}), 2);
    auto sum = connected_sum(named("8_20"), connected_sum(named("8_20"), named("8_20")));
    EXPECT_EQ(signature_at(sum, {1, 6}), 3);
}

TEST(Signature, Profiles) {
    auto unknot = signature_profile(named("unknot"));
    ASSERT_EQ(unknot.arcs.size(), 1u);
    EXPECT_EQ(unknot.arcs[0].value, 0);
    EXPECT_TRUE(unknot.jumps.empty());

    auto trefoil = signature_profile(named("trefoil"));
    ASSERT_EQ(trefoil.arcs.size(), 3u);
    EXPECT_EQ(trefoil.arcs[0].value, 0);
    EXPECT_EQ(trefoil.arcs[1].from, Rational(1, 6));
    EXPECT_EQ(trefoil.arcs[1].to, Rational(5, 6));
    EXPECT_EQ(trefoil.arcs[1].value, -2);
    EXPECT_EQ(trefoil.arcs[2].value, 0);

    auto k = signature_profile(named("8_20"));
    for (const auto& arc : k.arcs) EXPECT_EQ(arc.value, 0);
    ASSERT_EQ(k.jumps.size(), 2u);
    for (const auto& j : k.jumps) {
        EXPECT_TRUE(j.exact);
        EXPECT_EQ(*j.value, 1);
    }
    EXPECT_EQ(*k.jumps[0].point, RootOfUnity(1, 6));
    EXPECT_EQ(*k.jumps[1].point, RootOfUnity(5, 6));
}

TEST(Signature, ProfileWithNonCyclotomicRoots) {
    // Alexander polynomial 2t^2 - 3t + 2 has roots on the unit circle that are not roots of unity.
    SeifertMatrix m(IntMatrix{{-2, 1}, {0, -2}}, -1);
    auto prof = signature_profile(m);
    ASSERT_EQ(prof.jumps.size(), 2u);
    for (const auto& j : prof.jumps) {
        EXPECT_FALSE(j.exact);
        EXPECT_LT(j.bracket_lo, j.bracket_hi);
        EXPECT_GE(j.approx_turn, to_double(j.bracket_lo));
        EXPECT_LE(j.approx_turn, to_double(j.bracket_hi));
    }
    // Arc values agree with numeric evaluation at the arc samples.
    for (const auto& arc : prof.arcs) EXPECT_EQ(arc.value, numeric_signature(m, arc.sample));
}

TEST(Signature, Obstructions) {
    auto tests = auto_test_set(named("evenq_example"));
    auto cert = hyperbolic_obstruction(named("evenq_example"), tests);
    EXPECT_EQ(cert.verdict, HyperbolicVerdict::Violated);
    ASSERT_TRUE(cert.witness);
    EXPECT_EQ(cert.witness->first, RootOfUnity(1, 3));
    EXPECT_EQ(cert.witness->second, 1);
    EXPECT_EQ(signature_at(named("evenq_example"), cert.witness->first), cert.witness->second);

    auto rs = reverse_sum(named("8_20"));
    auto c2 = hyperbolic_obstruction(rs, auto_test_set(rs));
    EXPECT_EQ(c2.verdict, HyperbolicVerdict::Violated);
    EXPECT_EQ(c2.witness->first, RootOfUnity(1, 6));
    EXPECT_EQ(c2.witness->second, 2);

    SeifertMatrix hyp(IntMatrix{{0, 1}, {0, 0}}, -1);
    EXPECT_EQ(hyperbolic_obstruction(hyp, auto_test_set(hyp)).verdict, HyperbolicVerdict::VanishesOnTestSet);
    EXPECT_THROW(hyperbolic_obstruction(hyp, {}), Error);

    EXPECT_EQ(bing_double_ds_bound(named("8_20"), auto_test_set(named("8_20"))).bound, 2);
    auto three = connected_sum(named("8_20"), connected_sum(named("8_20"), named("8_20")));
    auto b3 = bing_double_ds_bound(three, auto_test_set(three));
    EXPECT_EQ(b3.bound, 6);
    EXPECT_EQ(*b3.witness, RootOfUnity(1, 6));
    EXPECT_EQ(bing_double_ds_bound(named("unknot"), {{1, 2}}).bound, 0);
}

TEST(Signature, NumericMode) {
    EXPECT_EQ(numeric_signature(named("evenq_example"), RootOfUnity(1, 4)), signature_at(named("evenq_example"), {1, 4}));
    // 8_20 has a zero eigenvalue at 1/6: only the exact path can give the value there.
    EXPECT_THROW(numeric_signature(named("8_20"), RootOfUnity(1, 6)), UncertifiableSign);
    EXPECT_EQ(numeric_signature(named("trefoil"), 0.5), -2);
    EXPECT_EQ(numeric_signature(named("trefoil"), 0.05), 0);
    // A turn very close to a jump point: the zero eigenvalue cannot be separated at 12 digits.
    EXPECT_THROW(numeric_signature(named("trefoil"), 1.0 / 6.0 + 1e-14, 12), UncertifiableSign);
}

// Properties

TEST(SignatureProperty, Symmetries) {
    Rng rng(41);
    for (int i = 0; i < 150; ++i) {
        auto n = static_cast<std::size_t>(dslice::testing::uniform(rng, 1, 4));
        SeifertMatrix a(dslice::testing::random_matrix(rng, n, n, 3), -1);
        SeifertMatrix b(dslice::testing::random_matrix(rng, 2, 2, 3), -1);
        auto w = dslice::testing::random_root(rng);
        int sa = signature_at(a, w);
        EXPECT_EQ(sa, signature_at(a, w.conjugate()));
        EXPECT_EQ(sa, signature_at(a.transposed(), w));
        EXPECT_EQ(signature_at(connected_sum(a, b), w), sa + signature_at(b, w));
        EXPECT_EQ(signature_at(reverse_sum(a), w), 2 * sa);
        EXPECT_LE(std::abs(sa), static_cast<int>(n));
    }
}

TEST(SignatureProperty, HyperbolicBlocksVanish) {
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        auto g = static_cast<std::size_t>(dslice::testing::uniform(rng, 1, 3));
        IntMatrix p = dslice::testing::random_matrix(rng, g, g, 5), q = dslice::testing::random_matrix(rng, g, g, 5);
        IntMatrix psi(2 * g, 2 * g);
        for (std::size_t r = 0; r < g; ++r)
            for (std::size_t c = 0; c < g; ++c) {
                psi(r, g + c) = p(r, c);
                psi(g + r, c) = q(r, c);
            }
        SeifertMatrix m(psi, -1);
        for (int k = 0; k < 10; ++k) EXPECT_EQ(signature_at(m, dslice::testing::random_root(rng)), 0);
    }
}

TEST(SignatureProperty, ExactAgreesWithNumeric) {
    Rng rng(43);
    int compared = 0;
    for (int i = 0; i < 80; ++i) {
        auto n = static_cast<std::size_t>(dslice::testing::uniform(rng, 1, 5));
        SeifertMatrix m(dslice::testing::random_matrix(rng, n, n, 4), dslice::testing::uniform(rng, 0, 1) ? 1 : -1);
        auto w = dslice::testing::random_root(rng, 30);
        try {
            EXPECT_EQ(signature_at(m, w), numeric_signature(m, w));
            ++compared;
        } catch (const UncertifiableSign&) {
        }
    }
    EXPECT_GT(compared, 40);
}

TEST(SignatureProperty, CharacteristicPolynomialMatchesEigenvalues) {
    Rng rng(44);
    for (int i = 0; i < 40; ++i) {
        auto n = static_cast<std::size_t>(dslice::testing::uniform(rng, 1, 4));
        SeifertMatrix m(dslice::testing::random_matrix(rng, n, n, 3), -1);
        auto w = dslice::testing::random_root(rng, 12);
        auto cp = characteristic_polynomial(hermitian_matrix(m, w));
        ASSERT_EQ(cp.size(), n + 1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(numeric_hermitian_matrix(m, w.value()));
        for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
            std::complex<double> acc = 0, x = solver.eigenvalues()(e);
            for (std::size_t k = cp.size(); k-- > 0;) acc = acc * x + cp[k].embed();
            double scale = 1 + std::pow(std::abs(x), static_cast<double>(n));
            EXPECT_LT(std::abs(acc) / scale, 1e-6);
        }
    }
}

}  // namespace

namespace {

TEST(SignatureProperty, DescartesAgreesWithCongruence) {
    Rng rng(45);
    for (int i = 0; i < 120; ++i) {
        auto n = static_cast<std::size_t>(dslice::testing::uniform(rng, 1, 4));
        IntMatrix psi = dslice::testing::random_matrix(rng, n, n, 3);
        if (i % 3 == 0) psi = psi + psi.transpose();  // forces zero pivots at 1/2 more often
        SeifertMatrix m(psi, -1);
        auto h = hermitian_matrix(m, dslice::testing::random_root(rng, 12));
        EXPECT_EQ(signature(h), signature_by_congruence(h));
    }
}

}  // namespace
