#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hcn/hurwitz.hpp"

using namespace hcn;

namespace {

// Independent oracle: enumerate signed b and apply the textbook reduction
// conditions literally, one form at a time.
Rational hurwitz_oracle(std::int64_t N) {
    if (N == 0) return Rational(-1, 12);
    if (N % 4 == 1 || N % 4 == 2) return Rational(0);
    Rational total;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((N + b * b) % (4 * a) != 0) continue;
            std::int64_t c = (N + b * b) / (4 * a);
            if (c < a) continue;                                 // need a <= c
            if (b < 0 && (-b == a || a == c)) continue;          // b >= 0 when |b|=a or a=c
            if (b == 0 && a == c)
                total += Rational(1, 2);                         // multiple of x^2+y^2
            else if (a == b && b == c)
                total += Rational(1, 3);                         // multiple of x^2+xy+y^2
            else
                total += Rational(1);
        }
    }
    return total;
}

std::string temp_path(const char* tag) {
    return std::string("hcn_test_") + tag + "_" + std::to_string(::getpid()) + ".tbl";
}

}  // namespace

TEST_CASE("hurwitz_single frozen values") {
    CHECK(hurwitz_single(0) == Rational(-1, 12));
    CHECK(hurwitz_single(1) == Rational(0));
    CHECK(hurwitz_single(2) == Rational(0));
    CHECK(hurwitz_single(3) == Rational(1, 3));   // sole form (1,1,1)
    CHECK(hurwitz_single(4) == Rational(1, 2));   // (1,0,1)
    CHECK(hurwitz_single(7) == Rational(1));      // (1,1,2)
    CHECK(hurwitz_single(8) == Rational(1));      // (1,0,2)
    CHECK(hurwitz_single(11) == Rational(1));     // (1,1,3)
    CHECK(hurwitz_single(12) == Rational(4, 3));  // (1,0,3),(2,2,2)
    CHECK(hurwitz_single(16) == Rational(3, 2));  // (1,0,4),(2,0,2)
    CHECK(hurwitz_single(19) == Rational(1));     // (1,1,5)
    CHECK(hurwitz_single(20) == Rational(2));     // (1,0,5),(2,2,3)
    CHECK(hurwitz_single(23) == Rational(3));     // (1,1,6),(2,+-1,3)
    CHECK(hurwitz_single(27) == Rational(4, 3));  // (1,1,7),(3,3,3)
}

TEST_CASE("hurwitz_single matches the reduced-form oracle") {
    for (std::int64_t N = 0; N <= 600; ++N) CHECK(hurwitz_single(N) == hurwitz_oracle(N));
}

TEST_CASE("table agrees with single evaluation") {
    HurwitzTable t = hurwitz_table(2000);
    CHECK(t.n_max == 2000);
    CHECK((std::int64_t)t.values12.size() == 2001);
    for (std::int64_t N = 0; N <= 2000; ++N) CHECK(t.h(N) == hurwitz_single(N));
    CHECK(t.values12[12] == 16);
    CHECK(t.values12[27] == 16);
}

TEST_CASE("table invariants") {
    HurwitzTable t = hurwitz_table(5000);
    CHECK(t.values12[0] == -1);
    for (std::int64_t N = 1; N <= 5000; ++N) {
        if (N % 4 == 1 || N % 4 == 2) CHECK(t.values12[(std::size_t)N] == 0);
        CHECK(t.values12[(std::size_t)N] >= 0);
    }
    CHECK_THROWS_AS(t.twelve_h(5001), std::out_of_range);
    CHECK_THROWS_AS(t.twelve_h(-1), std::out_of_range);
}

TEST_CASE("full-sum identity for primes up to 3000") {
    HurwitzTable t = hurwitz_table(12000);
    for (std::int64_t p : sieve_primes(3000).primes) {
        std::int64_t sum12 = 0;
        for (std::int64_t r = -isqrt(4 * p - 1); r * r < 4 * p; ++r)
            sum12 += t.twelve_h(4 * p - r * r);
        CHECK(sum12 == 24 * p);  // sum H(4p - r^2) = 2p
    }
}

TEST_CASE("worker count does not change the table") {
    HurwitzTable t1 = hurwitz_table(3000, 1);
    HurwitzTable t3 = hurwitz_table(3000, 3);
    HurwitzTable t8 = hurwitz_table(3000, 8);
    CHECK(t1.values12 == t3.values12);
    CHECK(t1.values12 == t8.values12);
}

TEST_CASE("save/load round-trip") {
    std::string path = temp_path("roundtrip");
    HurwitzTable t = hurwitz_table(1000);
    save_table(t, path);
    HurwitzTable back = load_table(path);
    CHECK(back.n_max == t.n_max);
    CHECK(back.values12 == t.values12);
    std::remove(path.c_str());
}

TEST_CASE("load rejects malformed input") {
    std::string path = temp_path("malformed");

    {
        std::ofstream out(path);
    }
    CHECK_THROWS_WITH_AS(load_table(path), doctest::Contains(":1:"), std::runtime_error);

    {
        std::ofstream out(path);
        out << "HURWITZ12 1 2\n0 -1\n1 zero\n2 0\n";
    }
    CHECK_THROWS_WITH_AS(load_table(path), doctest::Contains(":3:"), std::runtime_error);

    {
        std::ofstream out(path);
        out << "HURWITZ12 1 5\n0 -1\n1 0\n";
    }
    CHECK_THROWS_AS(load_table(path), std::runtime_error);  // truncated body

    {
        std::ofstream out(path);
        out << "NOTATABLE 1 5\n";
    }
    CHECK_THROWS_WITH_AS(load_table(path), doctest::Contains("magic"), std::runtime_error);

    {
        std::ofstream out(path);
        out << "HURWITZ12 1 2\n0 -1\n2 0\n1 0\n";
    }
    CHECK_THROWS_AS(load_table(path), std::runtime_error);  // out-of-order N

    std::remove(path.c_str());
}
