#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcn/arith.hpp"

using namespace hcn;

namespace {

// independent oracle: trial division
bool oracle_is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// independent oracle: the set of squares mod p
int oracle_legendre(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    for (std::int64_t z = 1; z < p; ++z)
        if (z * z % p == a) return 1;
    return -1;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(-1, 12).str() == "-1/12");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 3) < Rational(-1, 3));
    CHECK(Rational(7, 3).den() > 0);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational(9, 3).is_integer());
    CHECK(Rational(9, 3).to_int64() == 3);
    CHECK_THROWS_AS(Rational(1, 2).to_int64(), std::domain_error);
}

TEST_CASE("rational round-trips on random operands") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rational overflow aborts loudly") {
    Rational big(INT64_MAX);
    Rational x = big * big;  // fits in 128 bits
    CHECK_THROWS_AS(x * x, std::overflow_error);
}

TEST_CASE("prime sieve") {
    CHECK(sieve_primes(10).primes == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(1).primes.empty());
    CHECK(sieve_primes(0).primes.empty());
    CHECK(sieve_primes(2).primes == std::vector<std::int64_t>{2});

    PrimeList pl = sieve_primes(100000);
    std::int64_t oracle_count = 0;
    for (std::int64_t n = 2; n <= 100000; ++n)
        if (oracle_is_prime(n)) ++oracle_count;
    CHECK(oracle_count == 9592);
    CHECK((std::int64_t)pl.primes.size() == oracle_count);
    for (std::int64_t p : sieve_primes(2000).primes) CHECK(oracle_is_prime(p));
    for (std::size_t i = 1; i < pl.primes.size(); ++i) CHECK(pl.primes[i - 1] < pl.primes[i]);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(0, 5) == 0);
    CHECK(legendre(2, 7) == 1);   // squares mod 7 are {1,2,4}
    CHECK(legendre(3, 7) == -1);
    CHECK_THROWS_AS(legendre(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);

    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97})
        for (std::int64_t a = -3; a < 2 * p; ++a) CHECK(legendre(a, p) == oracle_legendre(a, p));
}

TEST_CASE("legendre multiplicativity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(1, 100000);
    for (std::int64_t p : {3, 7, 31, 101, 997}) {
        for (int i = 0; i < 300; ++i) {
            std::int64_t a = dist(rng), b = dist(rng);
            CHECK(legendre(a, p) * legendre(b, p) == legendre(a * b, p));
        }
    }
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(20) == 4);
    CHECK(isqrt(1000000000000LL) == 1000000);
    CHECK(isqrt(999999999999LL) == 999999);
    for (std::int64_t n = 0; n <= 1000000; ++n) {
        std::int64_t t = isqrt(n);
        CHECK(t * t <= n);
        CHECK((t + 1) * (t + 1) > n);
    }
    CHECK(is_square(49));
    CHECK(!is_square(48));
    CHECK(is_square(0));
}

TEST_CASE("divisor functions") {
    DivisorFunctions f4 = divisor_functions(4);  // divisors 1,2,4
    CHECK(f4.sigma == 7);
    CHECK(f4.mu1 == 1);
    CHECK(f4.mu2 == 7);
    CHECK(f4.mu3 == 7);
    CHECK(f4.lambda == Rational(2));
    CHECK(f4.phi == 2);

    CHECK(divisor_functions(2).mu3 == -3);  // (2|3) = -1, sigma(2) = 3
    CHECK(divisor_functions(1).lambda == Rational(1, 2));
    CHECK(divisor_functions(6).mu3 == 0);

    CHECK(mu_at(1, Rational(4, 3)) == 0);  // mu_i vanishes off the integers
    CHECK(mu_at(1, Rational(4)) == 1);
    CHECK(mu_at(3, Rational(2)) == -3);
    CHECK_THROWS_AS(divisor_functions(0), std::invalid_argument);
}

TEST_CASE("odd and even divisors split sigma") {
    for (std::int64_t n = 1; n <= 10000; ++n) {
        DivisorFunctions f = divisor_functions(n);
        std::int64_t even_sum = 0;
        for (std::int64_t d : divisors(n))
            if (d % 2 == 0) even_sum += d;
        CHECK(f.mu1 + even_sum == f.sigma);
    }
}

TEST_CASE("euler phi against gcd count") {
    for (std::int64_t n = 1; n <= 500; ++n) {
        std::int64_t count = 0;
        for (std::int64_t a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
    CHECK(euler_phi(1) == 1);
}
