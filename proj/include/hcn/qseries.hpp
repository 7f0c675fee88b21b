#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcn/arith.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/report.hpp"

namespace hcn {

// Truncated q-expansion with exact rational coefficients; coeffs[n] is
// the coefficient of q^n, length truncation+1.
struct QSeries {
    std::int64_t truncation = 0;
    std::vector<Rational> coeffs;

    explicit QSeries(std::int64_t T = 0) : truncation(T), coeffs((std::size_t)T + 1) {}
    const Rational& operator[](std::int64_t n) const { return coeffs[(std::size_t)n]; }
    Rational& operator[](std::int64_t n) { return coeffs[(std::size_t)n]; }
};

QSeries series_add(const QSeries& f, const QSeries& g);      // same truncation
QSeries series_scale(const QSeries& f, const Rational& c);
QSeries series_mul(const QSeries& f, const QSeries& g);      // Cauchy product, truncated
QSeries series_stretch(const QSeries& f, std::int64_t d);    // z -> dz: coeff n -> dn

// theta(z) = 1 + 2 sum_{s>=1} q^{s^2}
QSeries theta(std::int64_t T);

// Real Dirichlet character: value table over Z/M with entries in {-1,0,1},
// zero exactly on non-units, completely multiplicative on units.
struct DirichletCharacter {
    std::int64_t modulus = 1;
    std::vector<int> values;

    DirichletCharacter(std::int64_t M, std::vector<int> vals);
    int operator()(std::int64_t a) const;
    bool is_trivial() const;  // the principal character of its modulus

    static DirichletCharacter principal(std::int64_t M);
    static DirichletCharacter legendre3();  // (./3)

    // pointwise product, declared modulus M1*M2
    DirichletCharacter times(const DirichletCharacter& other) const;
};

// Generalized Bernoulli number B_{k,chi}: k! times the t^k coefficient of
// sum_{a=1}^m chi(a) t e^{at} / (e^{mt}-1), by exact power-series division.
Rational gen_bernoulli(int k, const DirichletCharacter& chi);

// Weight-2 Eisenstein series E_2(z; psi1, psi2): a_n = sum_{d|n} psi1(n/d) psi2(d) d,
// with a_0 = (M-1)/24 (both characters trivial, M = M1*M2), 0 (psi1 non-trivial),
// or -B_{2, psi1 psi2}/4 otherwise.
QSeries eisenstein_E2(const DirichletCharacter& psi1, const DirichletCharacter& psi2,
                      std::int64_t T);

// Slice generating series sum_{N = b mod a} H(N) q^N. Requires -b to be a
// quadratic non-residue mod a.
QSeries hurwitz_slice(std::int64_t a, std::int64_t b, const HurwitzTable& table, std::int64_t T);

// Coefficients a(n) of the cusp form attached to y^2 = x^3 + 1: a(1) = 1,
// a(n) = 0 when gcd(n,6) > 1, a(p) = p + 1 - #E(F_p), Hecke recursion at
// prime powers, multiplicative across coprime factors. Index n, size n_max+1.
std::vector<std::int64_t> cuspform_aN(std::int64_t n_max);

// floor((k/12) N prod_{p|N} (1 + 1/p)), computed in exact rationals.
std::int64_t sturm_bound(int k, std::int64_t N);

// The 11 weight-2 Eisenstein series spanning E_2(36), in fixed order,
// followed by the cusp form; 12 series of truncation T.
std::vector<QSeries> build_basis_36(std::int64_t T);

// Exact coefficients c with target = sum c_i basis_i, solved on the first
// fit_terms coefficients by rational Gaussian elimination and checked to
// zero residual through the full truncation. Throws "basis dependent" on a
// singular system and "not in span" naming the first failing index.
std::vector<Rational> solve_combination(const QSeries& target, const std::vector<QSeries>& basis,
                                        std::int64_t fit_terms);

// For n <= T with n = 1,2 (mod 3): the starred sum of H(n - s^2) over
// |s| < sqrt(n) (s = 0 mod 3 when n = 1 mod 3, s = +-1 mod 3 when n = 2)
// equals the twelve-term mu/a(n) combination, exactly.
VerificationReport verify_techprop(const HurwitzTable& table, std::int64_t T, int workers = 1);

}  // namespace hcn
