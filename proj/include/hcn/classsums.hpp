#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcn/arith.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/report.hpp"

namespace hcn {

// Restricted class-number sum: r runs over all integers (negative, zero,
// positive) with r = c (mod m) inside the strict radius.
enum class SumRadius {
    FourN,   // r^2 < 4n, summing H(4n - r^2)
    PlainN,  // r^2 < n,  summing H(n - r^2)
};

struct SumQuery {
    std::int64_t n = 0;
    std::int64_t modulus = 1;
    std::int64_t residue = 0;
    SumRadius radius = SumRadius::FourN;
};

Rational restricted_sum(const SumQuery& query, const HurwitzTable& table);

// c_{r,p}: 1/2 when 4p - r^2 = 4 a^2, 2/3 when 4p - r^2 = 3 a^2, else 0.
// The two cases exclude each other for r^2 < 4p.
Rational correction_term(std::int64_t r, std::int64_t p);

// sum of c_{r,p} over |r| < 2 sqrt p with r = c (mod m)
Rational correction_sum(std::int64_t p, std::int64_t m, std::int64_t c);

enum class TheoremId { T1, T2, T3, T4, T6, P42 };

// Sweeps all primes <= pmax and checks every applicable case row of the
// named theorem exactly. p = 2 contributes no rows; primes outside a
// theorem's residue hypotheses are skipped the same way.
VerificationReport verify_theorem(TheoremId id, std::int64_t pmax, const HurwitzTable& table,
                                  int workers = 1);

// sum over |r| < 2 sqrt p of H(4p - r^2) = 2p, all primes <= pmax
VerificationReport verify_fullsum(std::int64_t pmax, const HurwitzTable& table, int workers = 1);

// sum over r^2 <= 4N of H(4N - r^2) = 2 sigma(N) - 2 lambda(N) for all
// N <= n_max; the boundary terms r = +-2 sqrt(N) contribute H(0).
VerificationReport verify_hurwitz_kronecker(std::int64_t n_max, const HurwitzTable& table,
                                            int workers = 1);

// For n <= n_max with (n,6) = 1 admitting a prime p = 2 (mod 3) at odd
// valuation: the PlainN sum with c_n equals sigma(n)/12; both c = 1 and
// c = 2 are checked when n = 2 (mod 3).
VerificationReport verify_theorem5(std::int64_t n_max, const HurwitzTable& table, int workers = 1);

// One cell of the conjecture tables: sums over primes p = p_residue (mod m)
// with r = +-c (mod m), fitted to (alpha p + beta)/gamma.
struct FitResult {
    std::int64_t p_residue = 0;
    std::int64_t c = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 1;
    enum class Status { Fitted, NoPattern } status = Status::NoPattern;

    std::string formula() const;  // "(5p-7)/12", or "NO_PATTERN"
};

// Scans every cell (p mod m, c) for m in {5,7} over primes in
// [min_fit_prime, pmax]; a cell is Fitted only if the formula implied by
// the first two samples matches every sample and a holdout prime beyond
// pmax. Cells are emitted for c = 0..floor(m/2); the mirror residue m - c
// has the same sums by symmetry.
std::vector<FitResult> scan_conjectures(std::int64_t m, std::int64_t pmax,
                                        const HurwitzTable& table,
                                        std::int64_t min_fit_prime = 11);

// Table size (n_max) needed by scan_conjectures, holdout primes included.
std::int64_t scan_table_requirement(std::int64_t m, std::int64_t pmax);

}  // namespace hcn
