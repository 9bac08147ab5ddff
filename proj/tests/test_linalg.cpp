#include <weakmonads/errors.hpp>
#include <weakmonads/linalg.hpp>
#include <weakmonads/sample.hpp>

#include <gtest/gtest.h>

#include "support/oracle.hpp"

using namespace weakmonads;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);
const Field F7 = Field::prime(7);

LinMap diag(const Field& f, const std::vector<long>& d) {
    LinMap m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, Scalar(f, d[i]));
    return m;
}

}  // namespace

TEST(Field, PrimeArithmetic) {
    Scalar a(F5, 2), b(F5, 3);
    EXPECT_EQ((a * b).residue(), 1u);
    EXPECT_EQ((a - b).residue(), 4u);
    EXPECT_EQ((a / b).residue(), 4u);  // 3^{-1} = 2
    EXPECT_EQ(Scalar(F5, -1).residue(), 4u);
    EXPECT_THROW(Field::prime(6), Error);
}

TEST(Field, RationalCanonicalForm) {
    EXPECT_EQ(Scalar::parse(Q, "2/4").str(), "1/2");
    EXPECT_EQ(Scalar::parse(Q, "-6/3").str(), "-2");
    EXPECT_EQ(Scalar::parse(F5, "7").str(), "2");
    EXPECT_EQ(Scalar::parse(F5, "1/2").str(), "3");
    EXPECT_EQ(Field::parse("F7"), F7);
    EXPECT_EQ(Field::parse("Q"), Q);
}

TEST(Compose, IdentityAndZero) {
    Rng rng(3);
    LinMap f = random_matrix(Q, 3, 2, rng);
    EXPECT_EQ(compose(LinMap::identity(Q, 3), f), f);
    EXPECT_EQ(compose(f, LinMap::zero(Q, 2, 4)), LinMap::zero(Q, 3, 4));
    EXPECT_EQ(compose(LinMap::from_ints(F5, 1, 1, {2}), LinMap::from_ints(F5, 1, 1, {3})),
              LinMap::from_ints(F5, 1, 1, {1}));
}

TEST(Compose, Errors) {
    EXPECT_THROW(compose(LinMap::zero(Q, 2, 3), LinMap::zero(Q, 2, 2)), DimensionMismatch);
    EXPECT_THROW(compose(LinMap::zero(F5, 2, 2), LinMap::zero(F7, 2, 2)), FieldMismatch);
    EXPECT_THROW(kron(LinMap::zero(F5, 1, 1), LinMap::zero(Q, 1, 1)), FieldMismatch);
}

TEST(Kron, UnitsAndIndexConvention) {
    EXPECT_EQ(kron(LinMap::identity(Q, 2), LinMap::identity(Q, 3)), LinMap::identity(Q, 6));
    Rng rng(5);
    LinMap f = random_matrix(F7, 2, 3, rng);
    EXPECT_EQ(kron(f, LinMap::identity(F7, 1)), f);
    EXPECT_EQ(kron(LinMap::identity(F7, 1), f), f);
    LinMap g = random_matrix(F7, 3, 2, rng);
    EXPECT_TRUE(oracle::equal(oracle::of(kron(f, g)), oracle::tensor(oracle::of(f), oracle::of(g))));
}

TEST(Kron, InterchangeAgainstOracle) {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        LinMap a = random_matrix(F7, 2, 2, rng), b = random_matrix(F7, 2, 2, rng);
        LinMap c = random_matrix(F7, 2, 2, rng), d = random_matrix(F7, 2, 2, rng);
        LinMap lhs = compose(kron(a, b), kron(c, d));
        EXPECT_EQ(lhs, kron(compose(a, c), compose(b, d)));
        auto o = oracle::mul(oracle::tensor(oracle::of(a), oracle::of(b)), oracle::tensor(oracle::of(c), oracle::of(d)));
        EXPECT_TRUE(oracle::equal(oracle::of(lhs), o));
    }
}

TEST(Kron, AssociativeBitwise) {
    Rng rng(2);
    for (const Field& f : {Q, F7}) {
        LinMap a = random_matrix(f, 2, 1, rng), b = random_matrix(f, 3, 2, rng), c = random_matrix(f, 1, 2, rng);
        EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    }
}

TEST(Permutation, SwapMatchesOracle) {
    LinMap s = swap_map(Q, 2, 3);
    // swap(x ⊗ y) = y ⊗ x on basis vectors
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            LinMap v = kron(LinMap::basis_vector(Q, 2, i), LinMap::basis_vector(Q, 3, j));
            LinMap w = kron(LinMap::basis_vector(Q, 3, j), LinMap::basis_vector(Q, 2, i));
            EXPECT_EQ(compose(s, v), w);
        }
    EXPECT_EQ(permute_factors(Q, {2, 3}, {1, 0}), s);
    EXPECT_EQ(permute_factors(Q, {2, 3, 2}, {0, 1, 2}), LinMap::identity(Q, 12));
}

TEST(Rank, AgreesWithOracle) {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Field& f = trial % 2 ? F5 : Q;
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        // low rank products are the interesting cases
        LinMap m = compose(random_matrix(f, r, 2, rng), random_matrix(f, 2, c, rng));
        EXPECT_EQ(rank(m), oracle::rank(oracle::of(m)));
        LinMap k = kernel_basis(m);
        EXPECT_EQ(k.cols(), c - rank(m));
        EXPECT_TRUE(compose(m, k).is_zero());
    }
}

TEST(Rank, KernelSizeByEnumeration) {
    // over F5 the kernel has exactly 5^(n - rank) elements
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        LinMap m = random_matrix(F5, 2, 3, rng);
        std::size_t count = 0;
        for (int x = 0; x < 125; ++x) {
            LinMap v = LinMap::from_ints(F5, 3, 1, {x % 5, (x / 5) % 5, x / 25});
            if (compose(m, v).is_zero()) ++count;
        }
        std::size_t expect = 1;
        for (std::size_t i = rank(m); i < 3; ++i) expect *= 5;
        EXPECT_EQ(count, expect);
    }
}

TEST(Inverse, RoundTrip) {
    Rng rng(4);
    LinMap g = random_invertible(Q, 3, rng);
    auto h = inverse(g);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(compose(*h, g), LinMap::identity(Q, 3));
    EXPECT_FALSE(inverse(LinMap::zero(Q, 2, 2)).has_value());
}

TEST(Split, IdentityAndZero) {
    Splitting s = split_idempotent(LinMap::identity(Q, 3));
    EXPECT_EQ(s.retract_dim, 3u);
    EXPECT_EQ(s.iota, LinMap::identity(Q, 3));
    EXPECT_EQ(s.pi, LinMap::identity(Q, 3));
    EXPECT_EQ(split_idempotent(LinMap::zero(Q, 3, 3)).retract_dim, 0u);
}

TEST(Split, DiagonalIdempotent) {
    LinMap e = diag(Q, {1, 0, 0, 1});
    Splitting s = split_idempotent(e);
    EXPECT_EQ(s.retract_dim, 2u);
    EXPECT_TRUE(oracle::equal(oracle::mul(oracle::of(s.iota), oracle::of(s.pi)), oracle::of(e)));
    EXPECT_TRUE(oracle::equal(oracle::mul(oracle::of(s.pi), oracle::of(s.iota)), oracle::eye(0, 2)));
}

TEST(Split, Errors) {
    EXPECT_THROW(split_idempotent(LinMap::zero(Q, 2, 3)), NotSquare);
    EXPECT_THROW(split_idempotent(diag(Q, {2, 1})), NotIdempotent);
}

TEST(Split, RandomIdempotentsAndDeterminism) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Field& f = trial % 2 ? F7 : Q;
        std::size_t n = 2 + trial % 3, k = trial % (n + 1);
        LinMap g = random_invertible(f, n, rng);
        std::vector<long> d(n, 0);
        for (std::size_t i = 0; i < k; ++i) d[i] = 1;
        LinMap e = compose_all({g, diag(f, d), *inverse(g)});
        Splitting s = split_idempotent(e);
        EXPECT_EQ(s.retract_dim, k);
        EXPECT_EQ(compose(s.pi, s.iota), LinMap::identity(f, k));
        EXPECT_EQ(compose(s.iota, s.pi), e);
        Splitting again = split_idempotent(e);
        EXPECT_EQ(again.iota, s.iota);
        EXPECT_EQ(again.pi, s.pi);
        Splitting c = split_idempotent_by_columns(e);
        EXPECT_EQ(compose(c.pi, c.iota), LinMap::identity(f, k));
        EXPECT_EQ(compose(c.iota, c.pi), e);
    }
}

TEST(Cokernel, Examples) {
    EXPECT_EQ(cokernel(LinMap::identity(Q, 3)).dim, 0u);
    Cokernel z = cokernel(LinMap::zero(Q, 3, 2));
    EXPECT_EQ(z.dim, 3u);
    EXPECT_EQ(z.proj, LinMap::identity(Q, 3));
    LinMap f = LinMap::from_ints(Q, 3, 2, {1, 2, -1, -2, 3, 6});
    ASSERT_EQ(oracle::rank(oracle::of(f)), 1u);
    Cokernel c = cokernel(f);
    EXPECT_EQ(c.dim, 2u);
    EXPECT_TRUE(compose(c.proj, f).is_zero());
    EXPECT_EQ(rank(c.proj), 2u);
    EXPECT_EQ(compose(c.proj, c.section), LinMap::identity(Q, 2));
}

TEST(Solve, ConsistentAndInconsistent) {
    LinMap a = LinMap::from_ints(Q, 2, 2, {1, 1, 2, 2});
    auto x = solve(a, LinMap::from_ints(Q, 2, 1, {3, 6}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(compose(a, *x), LinMap::from_ints(Q, 2, 1, {3, 6}));
    EXPECT_FALSE(solve(a, LinMap::from_ints(Q, 2, 1, {1, 0})).has_value());
}
