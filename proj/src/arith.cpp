#include "hcn/arith.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hcn {

namespace {

int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow (add)");
    return r;
}

int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow (mul)");
    return r;
}

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string to_string_i128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    reduce();
}

Rational Rational::make(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.reduce();
    return r;
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    int128 g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

std::int64_t Rational::to_int64() const {
    if (den_ != 1) throw std::domain_error("rational is not an integer: " + str());
    if (num_ > INT64_MAX || num_ < INT64_MIN) throw std::overflow_error("rational exceeds int64");
    return (std::int64_t)num_;
}

Rational Rational::operator-() const { return make(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)), g = gcd(b,d)
    int128 g = gcd128(den_, o.den_);
    int128 lhs = checked_mul(num_, o.den_ / g);
    int128 rhs = checked_mul(o.num_, den_ / g);
    return make(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    return make(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return make(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Rational::operator<(const Rational& o) const {
    return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::string Rational::str() const {
    std::string s = to_string_i128(num_);
    if (den_ != 1) s += "/" + to_string_i128(den_);
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

PrimeList sieve_primes(std::int64_t limit) {
    if (limit < 0) throw std::invalid_argument("sieve limit must be >= 0");
    PrimeList out;
    out.limit = limit;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::int64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::int64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.primes.push_back(i);
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    int128 r = 1;
    int128 b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        exp >>= 1;
    }
    return (std::int64_t)r;
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre symbol requires an odd prime modulus");
    std::int64_t r = ((a % p) + p) % p;
    if (r == 0) return 0;
    std::int64_t e = mod_pow(r, (p - 1) / 2, p);  // Euler's criterion
    return e == 1 ? 1 : -1;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative number");
    if (n == 0) return 0;
    std::int64_t t = (std::int64_t)std::sqrt((double)n);
    while (t > 0 && t * t > n) --t;
    while ((t + 1) * (t + 1) <= n) ++t;
    return t;
}

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    std::int64_t t = isqrt(n);
    return t * t == n;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors of n >= 1 only");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("phi of n >= 1 only");
    std::int64_t result = n, m = n;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

DivisorFunctions divisor_functions(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisor functions need n >= 1");
    DivisorFunctions f;
    std::int64_t min_sum = 0;
    for (std::int64_t d : divisors(n)) {
        f.sigma += d;
        if (d % 2 != 0) f.mu1 += d;
        if (d % 3 != 0) f.mu2 += d;
        min_sum += std::min(d, n / d);
    }
    int chi3 = (n % 3 == 0) ? 0 : (n % 3 == 1 ? 1 : -1);
    f.mu3 = chi3 * f.sigma;
    f.lambda = Rational(min_sum, 2);
    f.phi = euler_phi(n);
    return f;
}

std::int64_t mu_at(int i, const Rational& r) {
    if (i < 1 || i > 3) throw std::invalid_argument("mu index must be 1, 2 or 3");
    if (!r.is_integer()) return 0;  // mu_i(Q \ Z) = 0
    std::int64_t n = r.to_int64();
    if (n < 1) throw std::invalid_argument("mu at non-positive integer");
    DivisorFunctions f = divisor_functions(n);
    return i == 1 ? f.mu1 : i == 2 ? f.mu2 : f.mu3;
}

}  // namespace hcn
