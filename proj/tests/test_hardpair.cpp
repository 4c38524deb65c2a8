#include <catch2/catch_amalgamated.hpp>

#include <gridspan/hardpair.hpp>

#include <algorithm>
#include <string>

using namespace gridspan;

namespace {

OrientedLine line(long a, long b, long c) {
    return OrientedLine::from_coeffs(Rat(a), Rat(b), Rat(c));
}

bool mentions(const HardPairReport& rep, const std::string& needle) {
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("near pattern lists the cells around the central quadrilateral") {
    const std::set<SignVector> expect = {
        {-1, -1, -1, -1},
        {1, -1, -1, -1},
        {-1, 1, -1, -1},
        {-1, -1, 1, -1},
        {-1, -1, -1, 1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
        {-1, 1, 1, -1},
        {-1, 1, -1, 1}};
    CHECK(block_near_pattern() == expect);
}

TEST_CASE("reference block realizes the chamber pattern") {
    QPoint p{Rat(0), Rat(0)};
    QPoint u1{Rat(-2), Rat(0)}, u2{Rat(0), Rat(-2)};
    auto l1 = OrientedLine::through_with_negative(u1, QPoint{Rat(2), Rat(1)}, p);
    auto l2 = OrientedLine::through_with_negative(u1, QPoint{Rat(2), Rat(-1)}, p);
    auto l3 = OrientedLine::through_with_negative(u2, QPoint{Rat(1), Rat(2)}, p);
    auto l4 = OrientedLine::through_with_negative(u2, QPoint{Rat(-1), Rat(2)}, p);
    Arrangement block({l1, l2, l3, l4});
    CHECK(is_simple(block));
    auto ch = enumerate_chambers(block);
    CHECK(ch.size() == 11);
    CHECK(block_pattern_ok(ch));
    for (const SignVector& v : block_near_pattern()) CHECK(ch.count(v) == 1);
    std::set<SignVector> extras;
    for (const SignVector& v : ch)
        if (!block_near_pattern().count(v)) extras.insert(v);
    const std::set<SignVector> expect_far = {{1, 1, -1, 1}, {-1, 1, 1, 1}};
    CHECK(extras == expect_far);
}

TEST_CASE("mirrored anchors still realize the pattern") {
    QPoint p{Rat(0), Rat(0)};
    QPoint u1{Rat(2), Rat(0)}, u2{Rat(0), Rat(2)};
    auto l1 = OrientedLine::through_with_negative(u1, QPoint{Rat(-2), Rat(1)}, p);
    auto l2 = OrientedLine::through_with_negative(u1, QPoint{Rat(-2), Rat(-1)}, p);
    auto l3 = OrientedLine::through_with_negative(u2, QPoint{Rat(1), Rat(-2)}, p);
    auto l4 = OrientedLine::through_with_negative(u2, QPoint{Rat(-1), Rat(-2)}, p);
    Arrangement block({l1, l2, l3, l4});
    CHECK(is_simple(block));
    CHECK(block_pattern_ok(enumerate_chambers(block)));
}

TEST_CASE("generic simple arrangements need not realize the pattern") {
    Arrangement g({line(1, 0, 0), line(0, 1, 0), line(1, 1, 1), line(1, -1, 5)});
    REQUIRE(is_simple(g));
    CHECK_FALSE(block_pattern_ok(enumerate_chambers(g)));
}

TEST_CASE("hard pair construction rejects zero") {
    CHECK_THROWS_AS(build_hard_pair(0), std::invalid_argument);
}

TEST_CASE("hard pair for the smallest parameter", "[slow]") {
    HardPair hp = build_hard_pair(1);
    const std::size_t n = hp.points.size();
    CHECK(n == 14);
    CHECK(hp.L.size() == 4 * n + 1);
    CHECK(hp.Q.size() == 11 * n + 4);
    CHECK(hp.aux.size() == 16);
    CHECK(hp.quadruples.size() == n);

    HardPairReport rep = verify_hard_pair(hp);
    for (const auto& v : rep.violations) UNSCOPED_INFO(v);
    CHECK(rep.ok);

    // doubly exponential spread: squared span at least 2^(2^(k+1))
    CHECK(span_squared(hp.L) >= Rat(pow2(1u << 2)));

    // construction is deterministic
    HardPair again = build_hard_pair(1);
    CHECK(again.L.lines() == hp.L.lines());
    CHECK(again.Q == hp.Q);
    CHECK(again.epsilons == hp.epsilons);

    // the verifier flags doctored instances
    {
        // blow the first ball up beyond the next point; no line of that
        // point's block can clear it any more
        HardPair bad = hp;
        bad.epsilons[0] = Rat(4) * (Rat(1) + dist_squared(hp.points[0], hp.points[1]));
        HardPairReport r = verify_hard_pair(bad);
        CHECK_FALSE(r.ok);
        CHECK(mentions(r, "no cleared line"));
    }
    {
        HardPair bad = hp;
        bad.epsilons[5] /= Rat(pow2(40));
        HardPairReport r = verify_hard_pair(bad);
        CHECK_FALSE(r.ok);
        CHECK(mentions(r, "reference ball"));
    }
    {
        HardPair bad = hp;
        std::swap(bad.Q[0], bad.Q[11]);
        HardPairReport r = verify_hard_pair(bad);
        CHECK_FALSE(r.ok);
        CHECK(mentions(r, "cover the cells"));
    }
    {
        HardPair bad = hp;
        bad.Q[11 * n] = bad.Q[11 * n + 1];
        HardPairReport r = verify_hard_pair(bad);
        CHECK_FALSE(r.ok);
        CHECK(mentions(r, "straddle"));
    }
    {
        HardPair bad = hp;
        bad.k = 2;
        HardPairReport r = verify_hard_pair(bad);
        CHECK_FALSE(r.ok);
        CHECK(mentions(r, "cross ratio"));
    }
}
