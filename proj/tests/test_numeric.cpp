#include <gridspan/numeric.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gridspan;

TEST_CASE("bit_size of integers") {
    CHECK(bit_size(Int(0)) == 1);
    CHECK(bit_size(Int(1)) == 2);
    CHECK(bit_size(Int(-1)) == 2);
    CHECK(bit_size(Int(3)) == 3);
    CHECK(bit_size(Int(7)) == 4);
    CHECK(bit_size(Int(8)) == 5);
    CHECK(bit_size(Int(-8)) == 5);
    CHECK(bit_size(pow2(100)) == 102);
    CHECK(bit_size(pow2(100) - 1) == 101);
}

TEST_CASE("bit_size of rationals adds the two parts") {
    CHECK(bit_size(Rat(3, 2)) == 6);
    CHECK(bit_size(Rat(0)) == 1 + 2);  // 0/1
    CHECK(bit_size(Rat(-3, 2)) == 6);
    CHECK(bit_size(Rat(4, 6)) == bit_size(Rat(2, 3)));
}

TEST_CASE("bit_size is submultiplicative and subadditive-ish") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 500; ++i) {
        Int a(d(rng)), b(d(rng));
        CHECK(bit_size(a * b) <= bit_size(a) + bit_size(b));
        CHECK(bit_size(a + b) <= std::max(bit_size(a), bit_size(b)) + 1);
    }
}

TEST_CASE("cmp_sqrt fixed cases") {
    CHECK(cmp_sqrt(Rat(5, 2), Rat(6)) == 1);   // (5/2)^2 = 25/4 > 6
    CHECK(cmp_sqrt(Rat(2), Rat(4)) == 0);
    CHECK(cmp_sqrt(Rat(2), Rat(5)) == -1);
    CHECK(cmp_sqrt(Rat(-3), Rat(2)) == -1);
    CHECK(cmp_sqrt(Rat(0), Rat(0)) == 0);
    CHECK(cmp_sqrt(Rat(-1), Rat(0)) == -1);
    CHECK(cmp_sqrt(Rat(1, 3), Rat(1, 9)) == 0);
    CHECK(cmp_sqrt(Rat(7, 5), Rat(2)) == -1);  // 49/25 < 2
    CHECK_THROWS_AS(cmp_sqrt(Rat(1), Rat(-1)), std::domain_error);
}

TEST_CASE("cmp_sqrt agrees with exact squaring on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50), dp(1, 50);
    for (int i = 0; i < 2000; ++i) {
        Rat a(d(rng), dp(rng));
        Rat q(dp(rng) - 1, dp(rng));
        int c = cmp_sqrt(a, q);
        if (a >= 0) {
            Rat diff = a * a - q;
            CHECK(c == diff.sign());
        } else {
            CHECK(c == -1);
        }
    }
}

TEST_CASE("isqrt floors") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(1)) == 1);
    CHECK(isqrt(Int(2)) == 1);
    CHECK(isqrt(Int(15)) == 3);
    CHECK(isqrt(Int(16)) == 4);
    Int big = (pow2(200) + 12345) * (pow2(200) + 12345);
    CHECK(isqrt(big) == pow2(200) + 12345);
    CHECK(isqrt(big - 1) == pow2(200) + 12344);
    CHECK_THROWS_AS(isqrt(Int(-4)), std::domain_error);
}

TEST_CASE("sqrt_bounds encloses tightly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dn(0, 10000), dd(1, 10000);
    for (unsigned m : {0u, 1u, 8u, 32u}) {
        for (int i = 0; i < 200; ++i) {
            Rat q(dn(rng), dd(rng));
            auto [lo, hi] = sqrt_bounds(q, m);
            CHECK(lo * lo <= q);
            CHECK(hi * hi > q);
            CHECK(lo >= 0);
            CHECK(hi - lo <= Rat(1, denominator(q) * pow2(m)));
        }
    }
    auto [lo, hi] = sqrt_bounds(Rat(4), 5);
    CHECK(lo == 2);
    CHECK(hi == Rat(65, 32));
    CHECK_THROWS_AS(sqrt_bounds(Rat(-2), 4), std::domain_error);
}

TEST_CASE("rationals canonicalize") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> d(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
        long long n = d(rng), den = d(rng);
        if (den == 0) continue;
        Rat q = make_rat(Int(n), Int(den));
        CHECK(denominator(q) > 0);
        CHECK(gcd(abs(numerator(q)), denominator(q)) == 1);
        // value preserved
        CHECK(numerator(q) * Int(den) == Int(n) * denominator(q));
    }
}

TEST_CASE("field behavior spot checks") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> d(-40, 40), dp(1, 40);
    for (int i = 0; i < 500; ++i) {
        Rat a(d(rng), dp(rng)), b(d(rng), dp(rng)), c(d(rng), dp(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (b != 0) CHECK((a / b) * b == a);
    }
}

TEST_CASE("serialization round trip") {
    CHECK(to_string(Rat(3, 2)) == "3/2");
    CHECK(to_string(Rat(-3, 2)) == "-3/2");
    CHECK(to_string(Rat(7)) == "7");
    CHECK(to_string(Rat(0)) == "0");
    CHECK(to_string(Rat(4, 6)) == "2/3");
    CHECK(parse_rat("3/2") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("0") == Rat(0));
    CHECK(parse_rat("4/6") == Rat(2, 3));
    CHECK(parse_rat("2/-4") == Rat(-1, 2));
    CHECK(to_string(parse_rat("2/-4")) == "-1/2");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);

    std::mt19937 rng(404);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 300; ++i) {
        long long den = d(rng);
        if (den == 0) den = 1;
        Rat q = make_rat(Int(d(rng)), Int(den));
        CHECK(parse_rat(to_string(q)) == q);
    }
}

TEST_CASE("to_double approximates") {
    CHECK(to_double(Rat(1, 2)) == 0.5);
    CHECK(std::abs(to_double(Rat(1, 3)) - 1.0 / 3.0) < 1e-15);
}
