#include <random>

#include "doctest.h"
#include "numberwall/laurent.hpp"
#include "numberwall/wall.hpp"
#include "oracles.hpp"

using namespace nwall;

TEST_CASE("polynomial arithmetic") {
    const Modulus m3(3);
    const Poly a(m3, {1, 2, 1}), b(m3, {2, 1});
    CHECK((a + b) == Poly(m3, {0, 0, 1}));
    CHECK((a * b).degree() == 3);
    const auto [q, r] = divmod(a, b);
    CHECK((q * b + r) == a);
    CHECK(r.degree() < b.degree());
    CHECK(Poly(m3, {0, 0}).is_zero());
    CHECK(Poly(m3).degree() == kNegInfDegree);
    CHECK_THROWS_AS(divmod(a, Poly(m3)), DivisionByZero);
    CHECK(Poly::monomial(m3, 4, 2).leading() == 2);
}

TEST_CASE("continued fraction examples") {
    const Modulus m3(3);
    // t^{-1}: 1/(t^{-1}) = t, one partial quotient of degree 1
    const auto one = continued_fraction({m3, {1}});
    REQUIRE(!one.degrees.empty());
    CHECK(one.degrees[0] == 1);
    // theta_1..theta_3 = 0 puts the leading term at t^{-4}
    const auto four = continued_fraction({m3, {0, 0, 0, 1, 2, 0, 1, 1, 2, 0, 1, 2}});
    REQUIRE(!four.degrees.empty());
    CHECK(four.degrees[0] == 4);
    CHECK(four.certified >= 1);
    CHECK(continued_fraction({m3, {0, 0, 0}}).degrees.empty());
}

TEST_CASE("certification rule 2h + d < N") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = oracle::random_residues(rng, 5, 30);
        const auto cf = continued_fraction({Modulus(5), c});
        std::int64_t h = 0;
        for (std::size_t j = 0; j < cf.certified; ++j) {
            CHECK(2 * h + cf.degrees[j] < 30);
            h += cf.degrees[j];
        }
        CHECK(cf.quotients.size() == cf.degrees.size());
        for (std::size_t j = 0; j < cf.degrees.size(); ++j) CHECK(cf.quotients[j].degree() == cf.degrees[j]);
    }
}

TEST_CASE("Euclid expansion agrees with series inversion") {
    std::mt19937_64 rng(29);
    for (int p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 100; ++trial) {
            const auto c = oracle::random_residues(rng, p, 48);
            const auto cf = continued_fraction({Modulus(p), c});
            const auto ref = oracle::cf_by_inversion(c, p);
            REQUIRE(cf.certified <= ref.size());
            for (std::size_t j = 0; j < cf.certified; ++j) CHECK(cf.degrees[j] == ref[j]);
        }
    }
}

TEST_CASE("convergents approximate the series") {
    std::mt19937_64 rng(31);
    const Modulus mod(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_residues(rng, 3, 60);
        const auto cf = continued_fraction({mod, c});
        const auto conv = convergents(cf, mod);
        REQUIRE(conv.denominators.size() == cf.quotients.size());
        std::int64_t D = 0;
        for (std::size_t j = 0; j + 1 < cf.certified; ++j) {
            D += cf.degrees[j];
            const Poly& q = conv.denominators[j];
            const Poly& pn = conv.numerators[j];
            CHECK(q.degree() == D);
            auto theta = [&](std::int64_t i) { return i >= 1 && i <= 60 ? c[static_cast<std::size_t>(i - 1)] : 0; };
            // polynomial part of q * Theta is p
            for (std::int64_t e = 0; e <= D; ++e) {
                int acc = 0;
                for (std::int64_t k = 0; k <= D; ++k) acc += q.coeff(k) * theta(k - e);
                CHECK(acc % 3 == pn.coeff(e));
            }
            // q * Theta - p vanishes down to t^{-(D + d_{j+1} - 1)}, then is nonzero
            const std::int64_t stop = D + cf.degrees[j + 1];
            for (std::int64_t i = 1; i <= stop; ++i) {
                int acc = 0;
                for (std::int64_t k = 0; k <= D; ++k) acc += q.coeff(k) * theta(k + i);
                CHECK(((acc % 3 == 0) == (i < stop)));
            }
        }
    }
}

TEST_CASE("deficiency through continued fractions") {
    CHECK(deficiency_via_cf(SequenceSource::paper_folding(Modulus(3)), 256, 512) == 4);
    CHECK(deficiency_via_cf(SequenceSource::pagoda(Modulus(3)), 256, 512) == 2);
    // x_n = 2^n mod 5: Theta is rational with denominator of degree 1
    std::vector<int> geo;
    for (int n = 0, v = 1; n < 300; ++n, v = v * 2 % 5) geo.push_back(v);
    const auto g = SequenceSource::from_values(Modulus(5), 1, geo);
    CHECK(deficiency_via_cf(g, 200, 64) == 1);
    CHECK_THROWS_AS(deficiency_via_cf(g, -1, 10), DomainError);
}

TEST_CASE("quadratic identities over F2") {
    const Modulus m2(2);
    CHECK(check_quadratic_f2(Quadratic::Phi, 1024, m2));
    CHECK(check_quadratic_f2(Quadratic::Pi, 1024, m2));
    CHECK_THROWS_AS(check_quadratic_f2(Quadratic::Phi, 16, Modulus(3)), DomainError);
    std::vector<int> f, pi;
    for (std::int64_t n = 1; n <= 129; ++n) {
        f.push_back(paper_folding_bit(n));
        pi.push_back(static_cast<int>(pagoda(n, m2).value()));
    }
    CHECK(phi_identity_holds(f, 128));
    CHECK(pi_identity_holds(pi, 128));
    for (std::size_t flip : {0u, 9u, 77u}) {
        auto f2 = f, pi2 = pi;
        f2[flip] ^= 1;
        pi2[flip] ^= 1;
        CHECK_FALSE(phi_identity_holds(f2, 128));
        CHECK_FALSE(pi_identity_holds(pi2, 128));
    }
}

TEST_CASE("Hankel determinants match signed wall entries") {
    const auto pf = SequenceSource::paper_folding(Modulus(3));
    CHECK(hankel_det(pf, 3, 0).value() == pf.residue(3));
    // [[f1 f2] [f2 f3]] = [[0 0] [0 1]]
    CHECK(hankel_det(pf, 1, 1).value() == 0);
    CHECK_THROWS_AS(hankel_det(pf, 0, -1), DomainError);
    for (int p : {3, 5}) {
        const auto s = SequenceSource::paper_folding(Modulus(p));
        const auto w = build(s, 12, -40, 60);
        for (std::int64_t l = 0; l <= 12; ++l)
            for (std::int64_t n = -40; n + l <= 60; ++n) {
                const int sign = ((l * (l + 1) / 2) % 2) ? p - 1 : 1;
                CHECK(hankel_det(s, n, l).value() == (sign * w.at(l, n + l)) % p);
            }
    }
}

TEST_CASE("continued fractions and the wall agree on random F3 data") {
    std::mt19937_64 rng(37);
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto theta = oracle::random_residues(rng, 3, 96);
        const auto rep = oracle::cf_wall_agreement(theta, Modulus(3));
        INFO("trial " << trial << ": " << rep.why);
        CHECK(rep.ok);
        ok += rep.ok;
    }
    CHECK(ok == 100);
}

TEST_CASE("continued fractions and the wall agree on paper-folding prefixes") {
    for (int p : {3, 7}) {
        const auto theta = SequenceSource::paper_folding(Modulus(p)).residues(1, 160);
        const auto rep = oracle::cf_wall_agreement(theta, Modulus(p));
        INFO(rep.why);
        CHECK(rep.ok);
        CHECK(rep.wall_max == 4);
    }
}
