#include <random>
#include <sstream>

#include "doctest.h"
#include "numberwall/wall.hpp"
#include "oracles.hpp"

using namespace nwall;

namespace {

// every valid entry of `w` against the independent determinant
void check_against_oracle(const WallSegment& w, const std::vector<int>& theta, std::int64_t lo) {
    const int p = w.p();
    auto th = [&](std::int64_t n) {
        const std::int64_t i = n - lo;
        REQUIRE(i >= 0);
        REQUIRE(i < static_cast<std::int64_t>(theta.size()));
        return theta[static_cast<std::size_t>(i)];
    };
    for (std::int64_t m = std::max<std::int64_t>(w.m_lo(), -2); m <= w.m_hi(); ++m)
        for (std::int64_t n = w.n_lo(); n <= w.n_hi(); ++n) {
            if (!w.valid(m, n)) continue;
            INFO("entry (" << m << ", " << n << ")");
            CHECK(w.at(m, n) == oracle::toeplitz(th, m, n, p));
        }
}

}  // namespace

TEST_CASE("sentinel rows") {
    const auto pf = SequenceSource::paper_folding(Modulus(3));
    const auto w = build(pf, 3, -5, 5);
    for (std::int64_t n = -5; n <= 5; ++n) {
        CHECK(w.at(-2, n) == 0);
        CHECK(w.at(-1, n) == 1);
        CHECK(w.at(0, n) == pf.residue(n));
    }
    CHECK(w.raw(-7, 1000) == 0);
    CHECK(w.raw(-1, -1000) == 1);
}

TEST_CASE("oracle examples") {
    const Modulus m3(3);
    const auto pf = SequenceSource::paper_folding(m3);
    CHECK(oracle_entry(pf, -1, 7).value() == 1);
    CHECK(oracle_entry(pf, -2, 7).value() == 0);
    // S_{1,n} = theta_n^2 - theta_{n-1} theta_{n+1}
    for (std::int64_t n = -20; n <= 20; ++n) {
        const int t = pf.residue(n), a = pf.residue(n - 1), b = pf.residue(n + 1);
        CHECK(oracle_entry(pf, 1, n).value() == m3.reduce(t * t - a * b));
    }
    const auto col = oracle_column(pf, 3, 6);
    for (std::int64_t m = 0; m <= 6; ++m) CHECK(col[static_cast<std::size_t>(m)] == oracle_entry(pf, m, 3).value());
}

TEST_CASE("constant sequence: rows from 1 on vanish") {
    const auto c = SequenceSource::constant(Modulus(3), 1);
    const auto w = build(c, 5, 0, 10);
    for (std::int64_t n = 0; n <= 10; ++n) {
        CHECK(w.at(0, n) == 1);
        for (std::int64_t m = 1; m <= 5; ++m) CHECK(w.at(m, n) == 0);
    }
}

TEST_CASE("paper-folding wall, value region of the certificate, against determinants") {
    const auto pf = SequenceSource::paper_folding(Modulus(3));
    const auto w = build(pf, 44, -46, 46);
    CHECK(w.all_valid());
    const auto theta = pf.residues(-46 - 50, 46 + 50);
    check_against_oracle(w, theta, -96);
}

TEST_CASE("random finite data against determinants, unknown entries marked") {
    std::mt19937_64 rng(5);
    for (int p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto theta = oracle::random_residues(rng, p, 40);
            const auto w = build_from_values(Modulus(p), 0, theta, -2, 19, 0, 39);
            check_against_oracle(w, theta, 0);
            // row m, column n is fully determined when n - m >= 0 and n + m <= 39
            for (std::int64_t m = 0; m <= 19; ++m)
                for (std::int64_t n = m; n <= 39 - m; ++n) CHECK(w.valid(m, n));
            CHECK_FALSE(w.valid(19, 0));
        }
    }
}

TEST_CASE("bounded sources refuse undeterminable entries unless partial") {
    const auto s = SequenceSource::from_values(Modulus(3), 0, {1, 2, 0, 1, 1, 2, 0, 0, 1, 2});
    CHECK_THROWS_AS(build(s, 8, 0, 9), DomainError);
    BuildOptions o;
    o.allow_partial = true;
    const auto w = build(s, 8, 0, 9, -2, o);
    CHECK(w.invalid_count() > 0);
    CHECK_THROWS_AS(w.at(8, 0), DomainError);
}

TEST_CASE("cross identity on random sequences") {
    std::mt19937_64 rng(11);
    for (int p : {3, 5, 11}) {
        const auto theta = oracle::random_residues(rng, p, 200);
        const auto w = build_from_values(Modulus(p), 0, theta, -2, 60, 0, 199);
        const SmallField f{Modulus(p)};
        for (std::int64_t m = -1; m < 60; ++m)
            for (std::int64_t n = 1; n < 199; ++n) {
                if (!w.valid(m - 1, n) || !w.valid(m + 1, n) || !w.valid(m, n - 1) || !w.valid(m, n + 1)) continue;
                const int lhs = f.mul(w.at(m - 1, n), w.at(m + 1, n));
                const int rhs = f.sub(f.mul(w.at(m, n), w.at(m, n)), f.mul(w.at(m, n - 1), w.at(m, n + 1)));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("thread count does not change the result") {
    const auto pf = SequenceSource::paper_folding(Modulus(5));
    BuildOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto a = build(pf, 80, -300, 300, -2, one);
    const auto b = build(pf, 80, -300, 300, -2, four);
    CHECK(a.data() == b.data());
}

TEST_CASE("CSV round trip keeps unknown markers") {
    const auto theta = std::vector<int>{1, 0, 2, 2, 1, 0, 0, 1, 2, 1, 1, 0};
    const auto w = build_from_values(Modulus(3), 0, theta, -2, 5, 0, 11);
    std::stringstream ss;
    write_csv(ss, w);
    const auto back = read_csv(ss);
    CHECK(back.m_lo() == w.m_lo());
    CHECK(back.n_hi() == w.n_hi());
    CHECK(back.data() == w.data());
    std::istringstream bad("matrix p=3\n");
    CHECK_THROWS_AS(read_csv(bad), DomainError);
}

TEST_CASE("PGM rendering") {
    const auto pf = SequenceSource::paper_folding(Modulus(3));
    const auto w = build(pf, 3, 0, 4);
    const std::string pgm = render_pgm(w, default_palette(3));
    CHECK(pgm.rfind("P2\n5 6\n255\n", 0) == 0);
    CHECK_THROWS_AS(render_pgm(w, Palette{{0, 0}}), DomainError);
    const auto part = build_from_values(Modulus(3), 0, {1, 2, 1}, -2, 2, 0, 2);
    CHECK_THROWS_AS(render_pgm(part, default_palette(3)), DomainError);
}

TEST_CASE("crop and bounds") {
    const auto pf = SequenceSource::paper_folding(Modulus(3));
    const auto w = build(pf, 10, -10, 10);
    const auto c = w.crop(0, 5, -3, 3);
    for (std::int64_t m = 0; m <= 5; ++m)
        for (std::int64_t n = -3; n <= 3; ++n) CHECK(c.at(m, n) == w.at(m, n));
    CHECK_THROWS_AS(w.at(11, 0), DomainError);
    CHECK_THROWS_AS(w.crop(0, 20, 0, 0), DomainError);
}
