#include <gridspan/projective.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gridspan;

namespace {

HomPoint hp(long x, long y, long z) { return HomPoint(Int(x), Int(y), Int(z)); }

std::mt19937& rng() {
    static std::mt19937 r(424242);
    return r;
}

Rat random_rat(int lo, int hi) {
    std::uniform_int_distribution<int> num(lo, hi), den(1, hi);
    return make_rat(Int(num(rng())), Int(den(rng())));
}

ProjectiveMap random_map() {
    std::uniform_int_distribution<int> d(-9, 9);
    for (;;) {
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = Rat(d(rng()));
        try {
            return ProjectiveMap(std::move(m));
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace

TEST_CASE("homogeneous points canonicalize") {
    CHECK(hp(2, 4, 6) == hp(1, 2, 3));
    CHECK(hp(-2, 0, 4) == hp(1, 0, -2));
    CHECK(hp(0, -3, -6) == hp(0, 1, 2));
    CHECK(HomPoint(Rat(3, 2), Rat(5, 3), Rat(1)) == hp(9, 10, 6));
    CHECK(HomPoint::from_affine(Rat(3, 2), Rat(5, 3)) == hp(9, 10, 6));
    CHECK_THROWS_AS(hp(0, 0, 0), std::invalid_argument);
    CHECK(hp(1, 0, 0).at_infinity());
    CHECK_FALSE(hp(1, 0, 1).at_infinity());
    auto [x, y] = hp(9, 10, -6).affine();
    CHECK(x == Rat(-3, 2));
    CHECK(y == Rat(-5, 3));
    CHECK_THROWS_AS(hp(1, 2, 0).affine(), std::domain_error);
}

TEST_CASE("det3 bracket") {
    CHECK(det3(hp(1, 0, 0), hp(0, 1, 0), hp(0, 0, 1)) == Rat(1));
    CHECK(det3(hp(1, 1, 1), hp(2, 0, 1), hp(5, 0, 1)) == Rat(3));
    CHECK(det3(hp(1, 2, 3), hp(1, 2, 3), hp(5, 0, 1)) == Rat(0));
}

TEST_CASE("join and meet") {
    ProjLine xaxis = join(hp(0, 0, 1), hp(1, 0, 1));
    CHECK(xaxis == ProjLine(Int(0), Int(1), Int(0)));
    ProjLine yaxis = join(hp(0, 0, 1), hp(0, 1, 1));
    CHECK(meet(xaxis, yaxis) == hp(0, 0, 1));
    // parallel euclidean lines y=0 and y=1 meet at horizontal infinity
    ProjLine y1 = join(hp(0, 1, 1), hp(1, 1, 1));
    CHECK(meet(xaxis, y1) == hp(1, 0, 0));
    CHECK_THROWS_AS(join(hp(1, 2, 3), hp(2, 4, 6)), std::invalid_argument);
    CHECK_THROWS_AS(meet(xaxis, ProjLine(Int(0), Int(2), Int(0))), std::invalid_argument);

    std::uniform_int_distribution<int> d(-20, 20);
    for (int t = 0; t < 200; ++t) {
        HomPoint p(Int(d(rng())), Int(d(rng())), Int(d(rng()) == 0 ? 1 : d(rng())));
        HomPoint q(Int(d(rng())), Int(d(rng())), Int(1));
        if (p == q) continue;
        ProjLine l = join(p, q);
        CHECK(incident(l, p));
        CHECK(incident(l, q));
    }
}

TEST_CASE("cross ratio on the axis") {
    auto P = [](const Rat& a) { return HomPoint(a, Rat(0), Rat(1)); };
    HomPoint pinf = hp(1, 0, 0);
    CHECK(cross_ratio(P(Rat(1)), P(Rat(2)), pinf, P(Rat(0))) == Rat(2));
    for (int t = 0; t < 100; ++t) {
        Rat x = random_rat(-1000, 1000);
        CHECK(cross_ratio(P(Rat(1)), P(x), pinf, P(Rat(0))) == x);
    }
    // distances 0,1,2,3: (|a-c|·|b-d|)/(|a-d|·|b-c|) = 4/3
    ExtRat v = cross_ratio(P(Rat(0)), P(Rat(1)), P(Rat(2)), P(Rat(3)));
    CHECK(v == Rat(4, 3));
}

TEST_CASE("cross ratio degenerate and infinite cases") {
    auto P = [](long a) { return hp(a, 0, 1); };
    CHECK(cross_ratio(P(5), P(1), P(5), P(2)) == Rat(0));  // a == c
    ExtRat inf = cross_ratio(P(0), P(1), P(2), P(0));      // a == d
    CHECK(inf.is_infinite());
    CHECK_THROWS_AS(cross_ratio(P(1), P(2), hp(0, 1, 1), P(0)), std::invalid_argument);
    CHECK_THROWS_AS(cross_ratio(P(1), P(1), P(1), P(1)), std::invalid_argument);
    CHECK(cross_ratio(P(1), P(2), P(2), P(1)).is_infinite());  // a==d, numerator nonzero
    CHECK_THROWS_AS(cross_ratio(P(1), P(2), P(1), P(1)), std::domain_error);  // 0/0
}

TEST_CASE("cross ratio does not depend on the reference point") {
    // recompute with every valid candidate reference and compare
    auto bracket = [](const HomPoint& p, const HomPoint& u, const HomPoint& v) {
        return det3(p, u, v);
    };
    std::uniform_int_distribution<int> d(-8, 8);
    int done = 0;
    while (done < 50) {
        HomPoint a(Int(d(rng())), Int(d(rng())), Int(1));
        HomPoint dir(Int(d(rng())), Int(d(rng())), Int(0 * d(rng())));
        std::uniform_int_distribution<int> t(1, 7);
        try {
            if (dir.x() == 0 && dir.y() == 0) continue;
            Rat t1(t(rng())), t2(t(rng()) + 7), t3(t(rng()) + 14);
            auto at = [&](const Rat& s) {
                return HomPoint(Rat(a.x()) + s * Rat(dir.x()), Rat(a.y()) + s * Rat(dir.y()),
                                Rat(1));
            };
            HomPoint b = at(t1), c = at(t2), e = at(t3);
            ExtRat direct = cross_ratio(a, b, c, e);
            ProjLine l = join(a, b);
            const std::array<HomPoint, 4> cands = {hp(1, 0, 0), hp(0, 1, 0), hp(0, 0, 1),
                                                   hp(1, 1, 1)};
            for (const auto& p : cands) {
                if (incident(l, p)) continue;
                Rat num = bracket(p, a, c) * bracket(p, b, e);
                Rat den = bracket(p, a, e) * bracket(p, b, c);
                REQUIRE(den != 0);
                CHECK(ExtRat(num / den) == direct);
            }
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_CASE("projective maps act on points and lines") {
    ProjectiveMap id = ProjectiveMap::identity();
    CHECK(id.apply(hp(3, 4, 5)) == hp(3, 4, 5));

    Mat3 twice{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) twice[i][j] = Rat(i == j ? 2 : 0);
    CHECK(ProjectiveMap(twice).apply(hp(3, 4, 5)) == hp(3, 4, 5));

    Mat3 sing{};
    CHECK_THROWS_AS(ProjectiveMap(sing), std::invalid_argument);

    for (int t = 0; t < 50; ++t) {
        ProjectiveMap T = random_map();
        std::uniform_int_distribution<int> d(-9, 9);
        HomPoint p(Int(d(rng())), Int(d(rng())), Int(1));
        HomPoint q(Int(d(rng())), Int(d(rng())), Int(1));
        if (p == q) continue;
        // line images agree with images of spanning points
        CHECK(T.apply(join(p, q)) == join(T.apply(p), T.apply(q)));
        // inverse undoes the action
        CHECK(T.inverse().apply(T.apply(p)) == p);
        // composition acts as successive application
        ProjectiveMap U = random_map();
        CHECK((U * T).apply(p) == U.apply(T.apply(p)));
    }
}

TEST_CASE("cross ratio is a projective invariant") {
    auto P = [](const Rat& a) { return HomPoint(a, Rat(0), Rat(1)); };
    for (int t = 0; t < 50; ++t) {
        ProjectiveMap T = random_map();
        Rat x = random_rat(-50, 50);
        if (x == 0 || x == 1) continue;
        std::array<HomPoint, 4> pts = {P(Rat(1)), P(x), hp(1, 0, 0), P(Rat(0))};
        ExtRat before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
        ExtRat after = cross_ratio(T.apply(pts[0]), T.apply(pts[1]), T.apply(pts[2]),
                                   T.apply(pts[3]));
        CHECK(before == after);
    }
}

TEST_CASE("map from four points") {
    std::array<HomPoint, 4> frame = {hp(1, 0, 0), hp(0, 1, 0), hp(0, 0, 1), hp(1, 1, 1)};
    ProjectiveMap id = map_from_4_points(frame, frame);
    CHECK(id.apply(hp(3, -2, 7)) == hp(3, -2, 7));

    std::array<HomPoint, 4> dst = {hp(1, 0, 1), hp(0, 1, 1), hp(1, 1, 1), hp(2, 3, 1)};
    ProjectiveMap T = map_from_4_points(frame, dst);
    for (int i = 0; i < 4; ++i) CHECK(T.apply(frame[i]) == dst[i]);

    std::array<HomPoint, 4> bad = {hp(0, 0, 1), hp(1, 0, 1), hp(2, 0, 1), hp(1, 1, 1)};
    CHECK_THROWS_WITH(map_from_4_points(bad, frame),
                      Catch::Matchers::ContainsSubstring("(0,1,2)"));
    std::array<HomPoint, 4> bad2 = {hp(0, 0, 1), hp(1, 0, 1), hp(1, 1, 1), hp(2, 0, 1)};
    CHECK_THROWS_WITH(map_from_4_points(frame, bad2),
                      Catch::Matchers::ContainsSubstring("(0,1,3)"));

    std::uniform_int_distribution<int> d(-6, 6);
    int done = 0;
    while (done < 25) {
        std::array<HomPoint, 4> a = frame, b = frame;
        try {
            for (int i = 0; i < 4; ++i) {
                a[i] = HomPoint(Int(d(rng())), Int(d(rng())), Int(1));
                b[i] = HomPoint(Int(d(rng())), Int(d(rng())), Int(1));
            }
            ProjectiveMap M = map_from_4_points(a, b);
            for (int i = 0; i < 4; ++i) CHECK(M.apply(a[i]) == b[i]);
            ++done;
        } catch (const std::invalid_argument&) {
        }
    }
}
