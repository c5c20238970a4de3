// Claims about the tiling restricted to the region R = [-3,149] x [-325,325] and the pair
// m = (-4,-326), M = (149,325). These assert the stated values as given.
#include "doctest.h"
#include "numberwall/tiling.hpp"
#include "paper_run.hpp"

using namespace nwall;

namespace {
const Region kR{-3, 149, -325, 325};
}

TEST_CASE("the tiling on R contains 6721 distinct 2-patterns") {
    const auto& sys = fixture::paper_run().result.system;
    const auto patterns = enumerate_patterns(expand(sys, kR), 2);
    CHECK(patterns.size() == 6721);
}

TEST_CASE("every 2-pattern of the k-fold region already occurs on (m, M]") {
    const auto& sys = fixture::paper_run().result.system;
    const auto rep = two_pattern_closure(sys, {-4, -326}, {149, 325});
    INFO(rep.small_patterns << " patterns on (m, M], " << rep.large_patterns << " on k(m, M]");
    CHECK(rep.ok);
}

TEST_CASE("the discovered parent region is R and the tiling is 5-consistent there") {
    const auto& r = fixture::paper_run().result;
    CHECK(r.parents.m_lo == kR.m_lo);
    CHECK(r.parents.m_hi == kR.m_hi);
    CHECK(r.parents.n_lo == kR.n_lo);
    CHECK(r.parents.n_hi == kR.n_hi);
    CHECK_FALSE(check_consistency(r.system, kR).has_value());
}
