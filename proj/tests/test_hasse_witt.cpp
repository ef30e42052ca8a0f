#include <gtest/gtest.h>

#include "support.hpp"

using namespace hwmt;
using namespace hwmt::test;

namespace {

LaurentPolynomial random_laurent(Rng& rng, std::size_t nvars, int terms) {
    LaurentPolynomial f(nvars);
    for (int t = 0; t < terms; ++t) {
        IntVector e;
        for (std::size_t i = 0; i < nvars; ++i) e.push_back(uniform(rng, -2, 2));
        f.add_term(e, Rational(uniform(rng, -3, 3), uniform(rng, 1, 2)));
    }
    return f;
}

} // namespace

TEST(ConstantTermPower, MatchesNaiveExpansion) {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_laurent(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), static_cast<int>(uniform(rng, 2, 6)));
        const std::uint64_t p = random_prime(rng, 5, 11);
        const PrimeField field(p);
        const auto e = uniform(rng, 0, static_cast<std::int64_t>(p) - 1);
        const Rational exact = f.pow(static_cast<unsigned>(e)).constant_term();
        EXPECT_EQ(constant_term_power(f, e, field), field.from_rational(exact)) << f.to_string() << " ^" << e;
    }
}

TEST(ConstantTermPower, ExponentGuard) {
    const auto f = LaurentPolynomial::monomial({1}) + LaurentPolynomial::monomial({-1});
    try {
        constant_term_power(f, 7, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ExponentTooLarge);
    }
    EXPECT_EQ(constant_term_power(f, 6, 7), 20u % 7);
}

TEST(ExponentSolver, EnumeratesAllSolutions) {
    // x + 1/x + y + 1/y: solutions of a0 - a1 = 0, a2 - a3 = 0, sum = 4
    const ExponentSolver s({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    std::size_t n = 0;
    s.for_each(4, [&](const std::vector<std::int64_t>& a) {
        EXPECT_EQ(a[0], a[1]);
        EXPECT_EQ(a[2], a[3]);
        ++n;
    });
    EXPECT_EQ(n, 3u);
    n = 0;
    s.for_each(3, [&](const std::vector<std::int64_t>&) { ++n; });
    EXPECT_EQ(n, 0u);
}

TEST(HasseWitt, EllipticClosedForm) {
    // constant term of (x + 1/x + y + 1/y + psi)^(p-1) = sum_n binom(p-1, 2n) binom(2n, n)^2 psi^(p-1-2n)
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
        const PrimeField f(p);
        for (long psi = 1; psi < 6; ++psi) {
            Integer s = 0;
            auto binom = [](long n, long k) {
                Integer r = 1;
                for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
                return r;
            };
            for (long n = 0; 2 * n <= static_cast<long>(p) - 1; ++n) {
                Integer t = binom(static_cast<long>(p) - 1, 2 * n) * binom(2 * n, n) * binom(2 * n, n);
                for (long k = 0; k < static_cast<long>(p) - 1 - 2 * n; ++k) t *= psi;
                s += t;
            }
            EXPECT_EQ(hasse_witt(family(FamilyId::EllipticP1xP1).pencil(), q(psi), f).value, f.from_integer(s));
        }
    }
}

TEST(HasseWitt, SymbolicPolynomialAgreesWithPointwise) {
    for (const auto& fam : all_families())
        for (std::uint64_t p : {5ULL, 7ULL, 11ULL}) {
            const PrimeField f(p);
            const auto poly = hasse_witt_polynomial(fam.pencil(), f);
            ASSERT_EQ(poly.size(), p);
            for (Residue x = 0; x < p; ++x)
                EXPECT_EQ(evaluate_mod_p(poly, x, f), hasse_witt(fam.pencil(), Rational(static_cast<long>(x)), f).value);
            // the psi^(p-1) coefficient is 1: only the psi term raised to p-1 contributes
            EXPECT_EQ(poly[p - 1], 1u);
        }
}

TEST(HasseWitt, KatzCoefficientEqualsConstantTerm) {
    Rng rng(29);
    for (const auto& fam : all_families())
        for (std::uint64_t p : {5ULL, 7ULL}) {
            const PrimeField f(p);
            const Rational psi = random_rational(rng, 6, 3);
            if (f.from_integer(denominator(psi)) == 0) continue;
            const auto h = homogeneous_form(fam.delta(), fam.pencil(), psi, VariableSet::Vertices);
            EXPECT_EQ(katz_coefficient(h.polynomial(), f), hasse_witt(fam.pencil(), psi, f).value) << fam.name;
        }
}

TEST(HasseWitt, BinomialPeriodIdentity) {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto& rec = tables3d()[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(tables3d().size()) - 1))];
        if (rec.polytope.num_vertices() > 6) continue;
        const std::uint64_t p = random_prime(rng, 5, 13);
        const Rational psi(uniform(rng, 1, 20));
        const auto r = truncation_relation_check(rec.polytope, psi, p);
        EXPECT_TRUE(r.holds) << rec.id << " p=" << p << " psi=" << psi;
    }
}

TEST(PeriodCoefficients, EllipticCentralBinomialSquares) {
    const auto b = period_coefficients(family(FamilyId::EllipticP1xP1).pencil(), 8).values;
    const std::vector<long> expected{1, 0, 4, 0, 36, 0, 400, 0, 4900};
    ASSERT_EQ(b.size(), expected.size());
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], Integer(expected[i]));
}

TEST(PeriodCoefficients, QuarticMultinomials) {
    // b_{4n} = (4n)! / n!^4
    const auto b = period_coefficients(family(FamilyId::Quartic).pencil(), 8).values;
    EXPECT_EQ(b[4], Integer(24));
    EXPECT_EQ(b[8], Integer(2520));
    EXPECT_EQ(b[3], Integer(0));
}

TEST(KeyLemma, GroupMembersShareHasseWitt) {
    for (auto [a, b] : {std::pair{3L, 4283L}, {753L, 754L}, {10L, 4314L}, {433L, 3316L}, {0L, 4311L}, {2L, 4317L}})
        for (std::uint64_t p : {5ULL, 7ULL})
            for (long psi : {1L, 2L, 3L}) {
                const auto r = key_lemma_check(by_id(tables3d(), a), by_id(tables3d(), b), q(psi), p);
                EXPECT_TRUE(r.equal) << a << "," << b << " p=" << p << " psi=" << psi;
            }
}

TEST(KeyLemma, RequiresDualKernelPair) {
    try {
        key_lemma_check(by_id(tables3d(), 3), by_id(tables3d(), 10), q(1), 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotKernelPair);
    }
}

TEST(HasseWitt, GroupTwoNonresiduesModThirteen) {
    const auto& fam = family(FamilyId::GroupII);
    for (long psi : {1L, 5L, 8L, 12L}) {
        const auto v = hasse_witt(fam, q(psi), 13).value;
        EXPECT_EQ(quadratic_residue_check(v, 13), QuadraticCharacter::Nonresidue) << psi;
    }
}

TEST(HasseWitt, SingularMembersRejectedAtFamilyLevel) {
    try {
        hasse_witt(family(FamilyId::Quartic), q(0), 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SingularMember);
    }
    EXPECT_FALSE(is_smooth_member(family(FamilyId::EllipticP1xP1), q(4)));
    EXPECT_FALSE(is_smooth_member(family(FamilyId::GroupII), q(4)));
    EXPECT_TRUE(is_smooth_member(family(FamilyId::GroupII), q(3)));
}
