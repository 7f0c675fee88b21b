#include "hcn/classsums.hpp"

#include <numeric>
#include <stdexcept>

#include "sweep_util.hpp"

namespace hcn {

namespace {

std::int64_t norm_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// out[c] = 12 * (restricted sum with residue c), one radius pass
std::vector<std::int64_t> residue_sums12(std::int64_t n, std::int64_t m, SumRadius radius,
                                         const HurwitzTable& table) {
    std::int64_t base = radius == SumRadius::FourN ? 4 * n : n;
    if (base < 1) throw std::invalid_argument("restricted sum needs n >= 1");
    if (table.n_max < base) throw std::invalid_argument("restricted sum: table too small");
    std::vector<std::int64_t> out((std::size_t)m, 0);
    std::int64_t r_max = isqrt(base - 1);  // strict |r| < sqrt(base)
    const std::int64_t* v = table.values12.data();
    for (std::int64_t r = -r_max; r <= r_max; ++r)
        out[(std::size_t)norm_mod(r, m)] += v[base - r * r];
    return out;
}

}  // namespace

Rational restricted_sum(const SumQuery& query, const HurwitzTable& table) {
    if (query.modulus < 1) throw std::invalid_argument("restricted_sum: modulus >= 1 required");
    std::int64_t base = query.radius == SumRadius::FourN ? 4 * query.n : query.n;
    if (base < 1) throw std::invalid_argument("restricted_sum: n >= 1 required");
    if (table.n_max < base) throw std::invalid_argument("restricted_sum: table too small");
    std::int64_t c = norm_mod(query.residue, query.modulus);
    std::int64_t sum12 = 0;
    std::int64_t r_max = isqrt(base - 1);
    for (std::int64_t r = -r_max; r <= r_max; ++r)
        if (norm_mod(r, query.modulus) == c) sum12 += table.values12[(std::size_t)(base - r * r)];
    return Rational(sum12, 12);
}

Rational correction_term(std::int64_t r, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("correction_term: p must be prime");
    std::int64_t D = 4 * p - r * r;
    if (D <= 0) throw std::invalid_argument("correction_term: need r^2 < 4p");
    bool four_case = D % 4 == 0 && is_square(D / 4);
    bool three_case = D % 3 == 0 && is_square(D / 3);
    if (four_case && three_case)
        throw std::logic_error("correction_term: cases not exclusive at r=" + std::to_string(r) +
                               " p=" + std::to_string(p));
    if (four_case) return Rational(1, 2);
    if (three_case) return Rational(2, 3);
    return Rational(0);
}

Rational correction_sum(std::int64_t p, std::int64_t m, std::int64_t c) {
    if (p < 3) throw std::invalid_argument("correction_sum: p >= 3 required");
    if (m < 1) throw std::invalid_argument("correction_sum: m >= 1 required");
    c = norm_mod(c, m);
    Rational total;
    std::int64_t r_max = isqrt(4 * p - 1);
    for (std::int64_t r = -r_max; r <= r_max; ++r)
        if (norm_mod(r, m) == c) total += correction_term(r, p);
    return total;
}

namespace {

struct CaseRow {
    std::vector<std::int64_t> residues;  // summed buckets mod the theorem modulus
    Rational expected;
    std::string label;
};

std::int64_t theorem_modulus(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return 2;
        case TheoremId::T2: return 4;
        case TheoremId::T3: return 3;
        case TheoremId::T4: return 5;
        case TheoremId::T6: return 7;
        case TheoremId::P42: return 7;
    }
    throw std::logic_error("unreachable");
}

// The case rows a theorem states for this prime; empty when its
// hypotheses exclude p. p = 2 never contributes.
std::vector<CaseRow> theorem_cases(TheoremId id, std::int64_t p) {
    std::vector<CaseRow> rows;
    if (p < 3) return rows;
    auto row = [&rows](std::vector<std::int64_t> cs, Rational expected, std::string label) {
        rows.push_back(CaseRow{std::move(cs), expected, std::move(label)});
    };
    switch (id) {
        case TheoremId::T1:
            row({0}, Rational(4 * p - 2, 3), "c=0");
            row({1}, Rational(2 * p + 2, 3), "c=1");
            break;
        case TheoremId::T2:
            row({1}, Rational(p + 1, 3), "c=1");
            row({3}, Rational(p + 1, 3), "c=3");
            row({norm_mod(p + 1, 4)}, Rational(5 * p - 7, 6), "c=p+1");
            row({norm_mod(p - 1, 4)}, Rational(p + 1, 2), "c=p-1");
            break;
        case TheoremId::T3:
            if (p % 3 == 1) {
                row({0}, Rational(p + 1, 2), "c=0");
                row({1}, Rational(3 * p - 1, 4), "c=1");
                row({2}, Rational(3 * p - 1, 4), "c=2");
            } else if (p % 3 == 2) {
                row({0}, Rational(p - 1), "c=0");
                row({1}, Rational(p + 1, 2), "c=1");
                row({2}, Rational(p + 1, 2), "c=2");
            }
            break;
        case TheoremId::T4:
            if (p % 5 == 2 || p % 5 == 3) {
                std::int64_t c = norm_mod(p + 1, 5);
                row({c}, Rational(p - 1, 2), "c=p+1");
                row({5 - c}, Rational(p - 1, 2), "c=-(p+1)");
            } else if (p % 5 == 4) {
                row({0}, Rational(p - 3, 2), "c=0");
            }
            break;
        case TheoremId::T6:
            if (p % 7 == 3 || p % 7 == 5) row({0}, Rational(p + 1, 3), "c=0");
            if (p % 7 == 6) {
                row({0}, Rational(p - 5, 3), "c=0");
                row({2}, Rational(p + 1, 3), "c=2");
                row({5}, Rational(p + 1, 3), "c=-2");
            }
            if (p % 7 >= 2 && p % 7 <= 5) {
                std::int64_t c = norm_mod(p + 1, 7);
                row({c}, Rational(p - 2, 3), "c=p+1");
                row({7 - c}, Rational(p - 2, 3), "c=-(p+1)");
            }
            break;
        case TheoremId::P42:
            if (p % 7 == 3) row({0, 3, 4}, Rational(p - 1), "s=0,+-3");
            if (p % 7 == 5) row({0, 1, 6}, Rational(p - 1), "s=0,+-1");
            if (p % 7 == 6) row({0, 2, 5}, Rational(p - 1), "s=0,+-2");
            break;
    }
    return rows;
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "t1";
        case TheoremId::T2: return "t2";
        case TheoremId::T3: return "t3";
        case TheoremId::T4: return "t4";
        case TheoremId::T6: return "t6";
        case TheoremId::P42: return "p42";
    }
    throw std::logic_error("unreachable");
}

}  // namespace

VerificationReport verify_theorem(TheoremId id, std::int64_t pmax, const HurwitzTable& table,
                                  int workers) {
    if (table.n_max < 4 * pmax)
        throw std::invalid_argument("verify_theorem: table must cover 4*pmax");
    std::int64_t m = theorem_modulus(id);
    PrimeList pl = sieve_primes(pmax);
    const auto& primes = pl.primes;

    VerificationReport report = detail::sweep_ranges(
        0, (std::int64_t)primes.size() - 1, workers,
        [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t i = lo; i <= hi; ++i) {
                std::int64_t p = primes[(std::size_t)i];
                part.items += 1;
                std::vector<CaseRow> rows = theorem_cases(id, p);
                if (rows.empty()) continue;
                std::vector<std::int64_t> sums = residue_sums12(p, m, SumRadius::FourN, table);
                for (const CaseRow& r : rows) {
                    std::int64_t lhs12 = 0;
                    for (std::int64_t c : r.residues) lhs12 += sums[(std::size_t)c];
                    part.checks += 1;
                    if (Rational(lhs12, 12) != r.expected)
                        part.fail(std::string(theorem_name(id)) + " p=" + std::to_string(p) +
                                  " " + r.label + ": sum " + Rational(lhs12, 12).str() +
                                  " != " + r.expected.str());
                }
            }
        });
    report.target = theorem_name(id);
    return report;
}

VerificationReport verify_fullsum(std::int64_t pmax, const HurwitzTable& table, int workers) {
    if (table.n_max < 4 * pmax)
        throw std::invalid_argument("verify_fullsum: table must cover 4*pmax");
    PrimeList pl = sieve_primes(pmax);
    const auto& primes = pl.primes;

    VerificationReport report = detail::sweep_ranges(
        0, (std::int64_t)primes.size() - 1, workers,
        [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t i = lo; i <= hi; ++i) {
                std::int64_t p = primes[(std::size_t)i];
                part.items += 1;
                std::int64_t sum12 = 0;
                std::int64_t r_max = isqrt(4 * p - 1);
                const std::int64_t* v = table.values12.data();
                for (std::int64_t r = -r_max; r <= r_max; ++r) sum12 += v[4 * p - r * r];
                part.checks += 1;
                if (sum12 != 24 * p)
                    part.fail("fullsum p=" + std::to_string(p) + ": sum " +
                              Rational(sum12, 12).str() + " != " + std::to_string(2 * p));
            }
        });
    report.target = "fullsum";
    return report;
}

VerificationReport verify_hurwitz_kronecker(std::int64_t n_max, const HurwitzTable& table,
                                            int workers) {
    if (table.n_max < 4 * n_max)
        throw std::invalid_argument("verify_hurwitz_kronecker: table must cover 4*n_max");

    VerificationReport report = detail::sweep_ranges(
        1, n_max, workers, [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t N = lo; N <= hi; ++N) {
                part.items += 1;
                // boundary r^2 = 4N included: those terms contribute H(0)
                std::int64_t sum12 = 0;
                std::int64_t r_max = isqrt(4 * N);
                const std::int64_t* v = table.values12.data();
                for (std::int64_t r = -r_max; r <= r_max; ++r) sum12 += v[4 * N - r * r];
                DivisorFunctions f = divisor_functions(N);
                Rational rhs = Rational(2 * f.sigma) - f.lambda * Rational(2);
                part.checks += 1;
                if (Rational(sum12, 12) != rhs)
                    part.fail("hurwitz-kronecker N=" + std::to_string(N) + ": sum " +
                              Rational(sum12, 12).str() + " != " + rhs.str());
            }
        });
    report.target = "hurwitz-kronecker";
    return report;
}

VerificationReport verify_theorem5(std::int64_t n_max, const HurwitzTable& table, int workers) {
    if (table.n_max < n_max) throw std::invalid_argument("verify_theorem5: table too small");

    VerificationReport report = detail::sweep_ranges(
        1, n_max, workers, [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t n = lo; n <= hi; ++n) {
                if (std::gcd(n, (std::int64_t)6) != 1) continue;
                // hypothesis: some prime p = 2 (mod 3) divides n to an odd power
                bool qualifies = false;
                std::int64_t rest = n;
                for (std::int64_t q = 5; q * q <= rest && !qualifies; q += 2) {
                    if (rest % q != 0) continue;
                    int e = 0;
                    while (rest % q == 0) {
                        rest /= q;
                        ++e;
                    }
                    if (q % 3 == 2 && e % 2 == 1) qualifies = true;
                }
                if (!qualifies && rest > 1 && rest % 3 == 2) qualifies = true;  // rest is prime
                if (!qualifies) continue;

                part.items += 1;
                Rational expected = Rational(divisor_functions(n).sigma, 12);
                std::vector<std::int64_t> cs =
                    n % 3 == 1 ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{1, 2};
                std::vector<std::int64_t> sums = residue_sums12(n, 3, SumRadius::PlainN, table);
                for (std::int64_t c : cs) {
                    part.checks += 1;
                    if (Rational(sums[(std::size_t)c], 12) != expected)
                        part.fail("t5 n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                  ": sum " + Rational(sums[(std::size_t)c], 12).str() +
                                  " != " + expected.str());
                }
            }
        });
    report.target = "t5";
    return report;
}

std::string FitResult::formula() const {
    if (status == Status::NoPattern) return "NO_PATTERN";
    std::string num;
    if (alpha == 1)
        num = "p";
    else if (alpha == -1)
        num = "-p";
    else if (alpha != 0)
        num = std::to_string(alpha) + "p";
    if (beta > 0)
        num += (num.empty() ? "" : "+") + std::to_string(beta);
    else if (beta < 0)
        num += std::to_string(beta);
    if (num.empty()) num = "0";
    if (gamma == 1) return "(" + num + ")";
    return "(" + num + ")/" + std::to_string(gamma);
}

namespace {

// smallest prime > pmax with p = residue (mod m)
std::int64_t holdout_prime(std::int64_t m, std::int64_t residue, std::int64_t pmax) {
    for (std::int64_t p = pmax + 1;; ++p)
        if (p % m == residue && is_prime(p)) return p;
}

}  // namespace

std::int64_t scan_table_requirement(std::int64_t m, std::int64_t pmax) {
    std::int64_t worst = pmax;
    for (std::int64_t rho = 1; rho < m; ++rho) worst = std::max(worst, holdout_prime(m, rho, pmax));
    return 4 * worst;
}

std::vector<FitResult> scan_conjectures(std::int64_t m, std::int64_t pmax,
                                        const HurwitzTable& table, std::int64_t min_fit_prime) {
    if (m != 5 && m != 7) throw std::invalid_argument("scan_conjectures: m must be 5 or 7");
    if (table.n_max < scan_table_requirement(m, pmax))
        throw std::invalid_argument("scan_conjectures: table too small for holdout primes");

    PrimeList pl = sieve_primes(pmax);

    // sums by residue class of p, one radius pass per prime
    struct Sample {
        std::int64_t p;
        std::vector<std::int64_t> sums12;
    };
    std::vector<std::vector<Sample>> by_residue((std::size_t)m);
    for (std::int64_t p : pl.primes) {
        if (p < min_fit_prime) continue;
        by_residue[(std::size_t)(p % m)].push_back(
            Sample{p, residue_sums12(p, m, SumRadius::FourN, table)});
    }

    std::vector<FitResult> results;
    for (std::int64_t rho = 1; rho < m; ++rho) {
        const auto& samples = by_residue[(std::size_t)rho];
        if ((std::int64_t)samples.size() < 30)
            throw std::invalid_argument("scan_conjectures: fewer than 30 primes with p=" +
                                        std::to_string(rho) + " (mod " + std::to_string(m) + ")");
        Sample hold{holdout_prime(m, rho, pmax), {}};
        hold.sums12 = residue_sums12(hold.p, m, SumRadius::FourN, table);

        for (std::int64_t c = 0; c <= m / 2; ++c) {
            FitResult cell;
            cell.p_residue = rho;
            cell.c = c;
            cell.status = FitResult::Status::NoPattern;

            // candidate line through the first two samples
            Rational s1(samples[0].sums12[(std::size_t)c], 12);
            Rational s2(samples[1].sums12[(std::size_t)c], 12);
            Rational slope = (s2 - s1) / Rational(samples[1].p - samples[0].p);
            Rational intercept = s1 - slope * Rational(samples[0].p);
            std::int64_t den = (std::int64_t)std::lcm((std::int64_t)slope.den(),
                                                      (std::int64_t)intercept.den());
            if (den <= 12) {
                std::int64_t alpha = (slope * Rational(den)).to_int64();
                std::int64_t beta = (intercept * Rational(den)).to_int64();
                bool all_match = true;
                for (const Sample& s : samples) {
                    if (Rational(s.sums12[(std::size_t)c], 12) !=
                        Rational(alpha * s.p + beta, den)) {
                        all_match = false;
                        break;
                    }
                }
                if (all_match && Rational(hold.sums12[(std::size_t)c], 12) ==
                                     Rational(alpha * hold.p + beta, den)) {
                    cell.alpha = alpha;
                    cell.beta = beta;
                    cell.gamma = den;
                    cell.status = FitResult::Status::Fitted;
                }
            }
            results.push_back(cell);
        }
    }
    return results;
}

}  // namespace hcn
