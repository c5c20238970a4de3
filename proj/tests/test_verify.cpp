#include <random>

#include "doctest.h"
#include "numberwall/verify.hpp"
#include "paper_run.hpp"

using namespace nwall;

namespace {

const Certificate& paper_certificate() {
    static const Certificate c =
        certify(fixture::paper_run().result, fixture::paper_run().source, paper_folding_options());
    return c;
}

}  // namespace

TEST_CASE("the paper-folding certificate passes every obligation") {
    const auto& c = paper_certificate();
    for (const auto& o : c.obligations) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.pass);
    }
    CHECK(c.pass());
    CHECK(c.obligations.size() == 8);
    for (const char* name : {"coding-zero-structure", "substitution-structure", "row-structure", "consistency",
                             "closure", "frame-constraints", "bounded-deficiency", "zeroth-row"})
        CHECK_NOTHROW(c.get(name));
    CHECK_THROWS_AS(c.get("no-such-obligation"), std::out_of_range);
    CHECK(c.tiles == 2353);
    CHECK(c.tetrads == 6721);
    CHECK(c.max_side == 3);
    CHECK(c.to_json().find("\"overall\": \"PASS\"") != std::string::npos);
}

TEST_CASE("the special tile sets are recovered by scanning the coding") {
    const auto& sys = fixture::paper_run().result.system;
    CHECK(scan_special_tiles(sys.tau, 3) == SpecialTileSets::reference());
    CHECK(zeroth_cell_row(sys) == 11);
    const auto& z = sys.tau.image(5);
    for (auto v : z) CHECK(v == 0);
    CHECK(sys.phi.image(5) == std::vector<int>{5, 5, 5, 5});
}

TEST_CASE("a corrupted coding row breaks the zero structure") {
    TilingSystem sys = fixture::paper_run().result.system;
    const auto sets = SpecialTileSets::reference();
    CHECK(verify_coding_structure(sys, sets, 3).pass);
    // row z-1 = 10 of tile 7 should be all ones
    sys.tau.images[6][static_cast<std::size_t>(9 * 13 + 4)] = 0;
    const auto o = verify_coding_structure(sys, sets, 3);
    CHECK_FALSE(o.pass);
    CHECK(!o.detail.empty());
}

TEST_CASE("a corrupted substitution image breaks the substitution structure") {
    Substitution phi = fixture::paper_run().result.system.phi;
    const auto sets = SpecialTileSets::reference();
    CHECK(verify_substitution_structure(phi, sets).pass);
    phi.images[4][2] = 6;  // phi(5) must be all zero tiles
    CHECK_FALSE(verify_substitution_structure(phi, sets).pass);
    Substitution phi2 = fixture::paper_run().result.system.phi;
    phi2.images[0][0] = 5;  // s in S must map to [zero zero; s1 s2]
    phi2.images[0][2] = 5;
    CHECK_FALSE(verify_substitution_structure(phi2, sets).pass);
}

TEST_CASE("tile rows -1 and below hold only the zero tile") {
    const auto& sys = fixture::paper_run().result.system;
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::int64_t> col(-1000000, 1000000);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::int64_t j = col(rng);
        const auto g = expand(sys, {-2, 1, j, j});
        CHECK(g(-2, j) == 5);
        CHECK(g(-1, j) == 5);
        CHECK(SpecialTileSets::reference().S.count(g(0, j)) == 1);
        CHECK(SpecialTileSets::reference().S_prime.count(g(1, j)) == 0);
    }
}

TEST_CASE("a corrupted seed fails the row structure") {
    TilingSystem sys = fixture::paper_run().result.system;
    const auto sets = SpecialTileSets::reference();
    CHECK(verify_row_structure(sys, sets, {-3, 20, -40, 40}).pass);
    sys.seeds[0] = 5;  // prolongable everywhere, but row 0 needs a tile of S
    const auto o = verify_row_structure(sys, sets, {-3, 20, -40, 40});
    CHECK_FALSE(o.pass);
    REQUIRE(o.at.has_value());
    CHECK((*o.at)[0] == 0);
    sys.seeds[0] = 1;
    sys.seeds[2] = 1;  // bottom orthant seeded from S: not prolongable there
    CHECK_THROWS_AS(verify_row_structure(sys, sets, {-3, 20, -40, 40}), DomainError);
}

TEST_CASE("frame checker pinpoints a flipped entry") {
    const auto& sys = fixture::paper_run().result.system;
    const Modulus m3(3);
    ValueGrid g = decode(sys, {-4, 44, -46, 46});
    const auto clean = check_frame_constraints(g, m3);
    CHECK(clean.ok);
    CHECK(clean.entries_checked > 0);
    CHECK(clean.windows_checked > 0);
    for (const auto [m0, n0] : {std::pair<std::int64_t, std::int64_t>{20, 3}, {7, -30}, {40, 40}}) {
        ValueGrid bad = g;
        bad(m0, n0) = static_cast<std::uint8_t>((bad(m0, n0) + 1) % 3);
        const auto r = check_frame_constraints(bad, m3);
        REQUIRE_FALSE(r.ok);
        REQUIRE(r.first.has_value());
        INFO("flip at (" << m0 << ", " << n0 << "), flagged (" << r.first->m << ", " << r.first->n << ") by "
                         << r.first->rule);
        CHECK(std::abs(r.first->m - m0) + std::abs(r.first->n - n0) <= 1);
    }
}

TEST_CASE("frame checker rejects a non-square zero block") {
    ValueGrid g(0, 6, 0, 6, 1);
    g(2, 2) = g(2, 3) = 0;
    const auto r = check_frame_constraints(g, Modulus(3));
    CHECK_FALSE(r.ok);
}

TEST_CASE("bounded deficiency needs the structural obligations") {
    const auto& sys = fixture::paper_run().result.system;
    const ValueGrid d = decode(sys, {-4, 44, -46, 46});
    CHECK(verify_bounded_deficiency(d, Modulus(3), 3, true, 1).pass);
    CHECK_FALSE(verify_bounded_deficiency(d, Modulus(3), 3, false, 1).pass);
    CHECK_FALSE(verify_bounded_deficiency(d, Modulus(3), 3, true, 2).pass);
    // side 3 windows are present, so claiming side 2 fails
    CHECK_FALSE(verify_bounded_deficiency(d, Modulus(3), 2, true, 1).pass);
}

TEST_CASE("zeroth row against the wrong sequence fails") {
    const auto& run = fixture::paper_run();
    ZerothRowOptions o;
    o.compare_width = 2000;
    CHECK(verify_zeroth_row(run.result.system, SpecialTileSets::reference(), run.source, o).pass);
    const auto pagoda = SequenceSource::pagoda(Modulus(3));
    o.paper_folding_tables = false;
    const auto bad = verify_zeroth_row(run.result.system, SpecialTileSets::reference(), pagoda, o);
    CHECK_FALSE(bad.pass);
    CHECK(bad.at.has_value());
}

TEST_CASE("pagoda over F3: discovery and certificate at side 1") {
    DiscoveryParams P;
    P.tel = 10;
    P.cid = 8;
    P.a = P.padding_bound();
    P.b = 800;
    P.c = -1600;
    P.d = 1600;
    CHECK(P.a == -45);
    PipelineOptions o;
    o.max_side = 1;
    o.zeroth.paper_folding_tables = false;
    DiscoveryResult r;
    const auto cert = full_pipeline(SequenceSource::pagoda(Modulus(3)), P, o, &r);
    for (const auto& ob : cert.obligations) {
        INFO(ob.name << ": " << ob.detail);
        CHECK(ob.pass);
    }
    CHECK(cert.pass());
    CHECK(r.size() == 505);
    CHECK(r.tetrads.size() == 1997);
}

TEST_CASE("paper-folding over F5 is not certified") {
    // over F5 windows of side 83 appear within 400 rows, so discovery or some obligation must fail
    DiscoveryParams P;
    P.b = 600;
    P.c = -1200;
    P.d = 1200;
    PipelineOptions o;
    o.zeroth.paper_folding_tables = false;
    bool certified = false;
    try {
        certified = full_pipeline(SequenceSource::paper_folding(Modulus(5)), P, o).pass();
    } catch (const DiscoveryFailure&) {
        certified = false;
    }
    CHECK_FALSE(certified);
}
