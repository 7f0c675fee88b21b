#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcn {

using int128 = __int128;

std::string to_string_i128(int128 v);

// Exact rational number, always in lowest terms with positive denominator.
// Arithmetic is overflow-checked (128-bit) and throws std::overflow_error
// rather than wrapping; nothing in this project gets anywhere near 2^127.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    static Rational make(int128 num, int128 den);

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    std::int64_t to_int64() const;  // throws unless integral and in range

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string str() const;  // "a/b", or "a" when integral

private:
    int128 num_;
    int128 den_;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Ascending list of all primes <= limit.
struct PrimeList {
    std::int64_t limit = 0;
    std::vector<std::int64_t> primes;
};

PrimeList sieve_primes(std::int64_t limit);

bool is_prime(std::int64_t n);  // trial division; fine at desk scale

// Legendre symbol (a/p) for odd prime p; rejects other p.
int legendre(std::int64_t a, std::int64_t p);

// Largest t >= 0 with t^2 <= n.
std::int64_t isqrt(std::int64_t n);

// true iff n = t^2 for some integer t >= 0
bool is_square(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);  // ascending, n >= 1

// The multiplicative bookkeeping needed by the class-number identities:
//   sigma  = sum of divisors
//   mu1    = sum of odd divisors
//   mu2    = sum of divisors not divisible by 3
//   mu3    = (n|3) * sigma(n), Legendre symbol mod 3
//   lambda = (1/2) * sum over d|n of min(d, n/d)
//   phi    = Euler totient
struct DivisorFunctions {
    std::int64_t sigma = 0;
    std::int64_t mu1 = 0;
    std::int64_t mu2 = 0;
    std::int64_t mu3 = 0;
    Rational lambda;
    std::int64_t phi = 0;
};

DivisorFunctions divisor_functions(std::int64_t n);  // n >= 1

std::int64_t euler_phi(std::int64_t n);

// mu_i extended to Q: zero off the integers. i in {1,2,3}.
std::int64_t mu_at(int i, const Rational& r);

}  // namespace hcn
