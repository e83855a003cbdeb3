#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "numrad/ensembles.hpp"
#include "numrad/errors.hpp"
#include "numrad/matrix.hpp"
#include "numrad/rng.hpp"

using namespace numrad;

namespace {
const cplx I1{0.0, 1.0};
const double kPi = std::numbers::pi;
}  // namespace

TEST(Matrix, ConstructionValidatesShapeAndFiniteness) {
    EXPECT_THROW(CMat(2, 2, std::vector<cplx>(3)), ShapeMismatch);
    EXPECT_THROW(CMat(1, 1, {cplx(NAN, 0.0)}), NonFiniteValue);
    EXPECT_THROW(CMat(1, 1, {cplx(0.0, INFINITY)}), NonFiniteValue);
    const CMat z(2, 3);
    EXPECT_EQ(z.rows(), 2u);
    EXPECT_EQ(z.cols(), 3u);
    EXPECT_FALSE(z.is_square());
}

TEST(Matrix, AdjointExamples) {
    EXPECT_EQ(adjoint(CMat::from_rows({{0, 1}, {0, 0}})), CMat::from_rows({{0, 0}, {1, 0}}));
    EXPECT_EQ(adjoint(CMat::from_rows({{I1}})), CMat::from_rows({{-I1}}));
    SplitMix64 rng(7);
    const CMat a = ginibre(rng, 3);
    EXPECT_EQ(adjoint(adjoint(a)), a);
    const CMat rect(2, 3, {1, 2, 3, I1, 5, 6});
    EXPECT_EQ(adjoint(rect).rows(), 3u);
}

TEST(Matrix, CartesianParts) {
    const CMat t = CMat::from_rows({{1, 1}, {0, 0}});
    EXPECT_EQ(re_part(t), CMat::from_rows({{1, 0.5}, {0.5, 0}}));
    EXPECT_EQ(im_part(t), CMat::from_rows({{0, cplx(0, -0.5)}, {cplx(0, 0.5), 0}}));

    SplitMix64 rng(8);
    const CMat h = re_part(ginibre(rng, 4));
    EXPECT_EQ(re_part(h), h);
    EXPECT_EQ(im_part(h), CMat::zeros(4));

    for (int trial = 0; trial < 20; ++trial) {
        const CMat a = ginibre(rng, 1 + trial % 6);
        EXPECT_TRUE(is_exactly_hermitian(re_part(a)));
        EXPECT_TRUE(is_exactly_hermitian(im_part(a)));
        EXPECT_LE(max_abs_diff(add(re_part(a), scale(im_part(a), I1)), a), 1e-14);
    }
    EXPECT_THROW(re_part(CMat(2, 3)), NotSquare);
}

TEST(Matrix, RotationMatchesAlphaBetaExpansion) {
    SplitMix64 rng(9);
    const CMat a = ginibre(rng, 3);
    EXPECT_EQ(rotate(a, 0.0), a);
    EXPECT_LE(max_abs_diff(rotate(CMat::identity(3), kPi), scale(CMat::identity(3), -1.0)), 1e-15);
    const CMat re = re_part(a);
    const CMat im = im_part(a);
    for (int k = 0; k < 32; ++k) {
        const double theta = 2.0 * kPi * rng.uniform();
        const CMat expanded = sub(scale(re, std::cos(theta)), scale(im, std::sin(theta)));
        EXPECT_LE(max_abs_diff(re_part(rotate(a, theta)), expanded), 1e-13);
        EXPECT_LE(max_abs_diff(rotated_re_part(re, im, theta), expanded), 1e-13);
        EXPECT_TRUE(is_exactly_hermitian(rotated_re_part(re, im, theta)));
    }
}

TEST(Matrix, TraceFrobeniusAndProducts) {
    const CMat z = CMat::from_rows({{1, 0}, {0, -1}});
    EXPECT_EQ(trace(matmul(z, z)), cplx(2, 0));
    EXPECT_EQ(frobenius_norm(CMat::from_rows({{0, 1}, {0, 0}})), 1.0);

    SplitMix64 rng(10);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 6;
        const CMat a = ginibre(rng, n);
        const CMat b = ginibre(rng, n);
        EXPECT_NEAR(frobenius_norm(adjoint(a)), frobenius_norm(a), 1e-15 * frobenius_norm(a));
        EXPECT_LE(frobenius_norm(matmul(a, b)), frobenius_norm(a) * frobenius_norm(b) * (1 + 1e-15));
    }
    EXPECT_THROW(add(CMat(2, 2), CMat(3, 3)), ShapeMismatch);
    EXPECT_THROW(matmul(CMat(2, 3), CMat(2, 3)), ShapeMismatch);
    const CMat p = matmul(CMat(2, 3), CMat(3, 4));
    EXPECT_EQ(p.rows(), 2u);
    EXPECT_EQ(p.cols(), 4u);
}

TEST(Matrix, CartesianIdentityAtRandomAngles) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const CMat a = ginibre(rng, 2 + trial % 5);
        const CMat rhs = scale(add(matmul(a, adjoint(a)), matmul(adjoint(a), a)), 0.5);
        for (int k = 0; k < 16; ++k) {
            const double phi = 2.0 * kPi * rng.uniform();
            const CMat rr = re_part(rotate(a, phi));
            const CMat ii = im_part(rotate(a, phi));
            EXPECT_LE(max_abs_diff(add(matmul(rr, rr), matmul(ii, ii)), rhs),
                      1e-12 * frobenius_norm_sq(a));
        }
    }
}

TEST(Matrix, DotAndDigest) {
    const std::vector<cplx> x{{1, 1}, {0, 2}};
    const std::vector<cplx> y{{2, 0}, {1, 1}};
    EXPECT_EQ(dotc(x, y), cplx(4, -4));
    EXPECT_DOUBLE_EQ(vec_norm(x), std::sqrt(6.0));

    const CMat a = CMat::from_rows({{1, 2}, {3, 4}});
    CMat b = a;
    EXPECT_EQ(digest(a), digest(b));
    b(1, 1) = cplx(4.0, -0.0);
    EXPECT_NE(digest(a), digest(b));  // sign of zero is part of the bit pattern
    EXPECT_EQ(digest(a).size(), 16u);
}

TEST(Matrix, HermitianDefect) {
    EXPECT_EQ(hermitian_defect(CMat::from_rows({{1, I1}, {-I1, 2}})), 0.0);
    EXPECT_GT(hermitian_defect(CMat::from_rows({{0, 1}, {0, 0}})), 0.5);
}
