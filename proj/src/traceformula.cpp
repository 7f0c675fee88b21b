#include "hcn/traceformula.hpp"

#include <stdexcept>

#include "sweep_util.hpp"

namespace hcn {

int trace7_c(std::int64_t p_mod7, std::int64_t s_mod7) {
    s_mod7 = ((s_mod7 % 7) + 7) % 7;
    switch (p_mod7) {
        case 3: return (s_mod7 == 0 || s_mod7 == 3 || s_mod7 == 4) ? 2 : 0;
        case 5: return (s_mod7 == 0 || s_mod7 == 1 || s_mod7 == 6) ? 2 : 0;
        case 6: return (s_mod7 == 0 || s_mod7 == 2 || s_mod7 == 5) ? 2 : 0;
        default: return 0;
    }
}

namespace {

void require_admissible(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("trace_level7: p must be prime");
    std::int64_t r = p % 7;
    if (r != 3 && r != 5 && r != 6)
        throw std::invalid_argument("trace_level7: unsupported case p = " + std::to_string(r) +
                                    " (mod 7); the c-table covers p = 3,5,6 only");
}

// 12 * (elliptic term): sum over s^2 < 4p of (1/2) c(s) H(4p - s^2), with
// c(s,f,7) constant in f and sum_{f|t} h/omega = H(4p - s^2).
std::int64_t elliptic_term12(std::int64_t p, const HurwitzTable& table) {
    std::int64_t sum12 = 0;
    std::int64_t s_max = isqrt(4 * p - 1);
    for (std::int64_t s = -s_max; s <= s_max; ++s) {
        int c = trace7_c(p % 7, s % 7);
        if (c != 0) sum12 += c * table.twelve_h(4 * p - s * s) / 2;  // c is 0 or 2, exact
    }
    return sum12;
}

}  // namespace

Rational trace_level7(std::int64_t p, const HurwitzTable& table) {
    require_admissible(p);
    if (table.n_max < 4 * p) throw std::invalid_argument("trace_level7: table must cover 4p");

    // Hyperbolic set: s^2 - 4p = t^2 means (s-t)(s+t) = 4p, and for prime p
    // the only balanced factorization is {2, 2p}, so s = +-(p+1), t = p-1.
    Rational hyperbolic;
    std::int64_t t = p - 1;
    std::int64_t phi_sum = 0;
    for (std::int64_t f : divisors(t)) phi_sum += euler_phi(t / f);
    if (phi_sum != t) throw std::logic_error("divisor-phi identity failed");  // sum phi(d) = t
    for (std::int64_t s : {p + 1, -(p + 1)}) {
        int c = trace7_c(p % 7, s % 7);
        if (c != 2)
            throw std::logic_error("hyperbolic s = +-(p+1) missed the c-table at p=" +
                                   std::to_string(p));
        hyperbolic += Rational(c) * Rational(phi_sum) / Rational(2 * (p - 1));
    }

    Rational elliptic = Rational(elliptic_term12(p, table), 12);
    return Rational(p + 1) - hyperbolic - elliptic;
}

VerificationReport verify_prop42(std::int64_t pmax, const HurwitzTable& table, int workers) {
    if (table.n_max < 4 * pmax)
        throw std::invalid_argument("verify_prop42: table must cover 4*pmax");
    PrimeList pl = sieve_primes(pmax);
    const auto& primes = pl.primes;

    VerificationReport report = detail::sweep_ranges(
        0, (std::int64_t)primes.size() - 1, workers,
        [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t i = lo; i <= hi; ++i) {
                std::int64_t p = primes[(std::size_t)i];
                part.items += 1;
                std::int64_t r = p % 7;
                if (r != 3 && r != 5 && r != 6) continue;

                // starred sum: s = 0 and the +- class from the c-table
                std::int64_t sum12 = 0;
                std::int64_t s_max = isqrt(4 * p - 1);
                for (std::int64_t s = -s_max; s <= s_max; ++s)
                    if (trace7_c(r, s % 7) != 0) sum12 += table.twelve_h(4 * p - s * s);

                part.checks += 1;
                if (Rational(sum12, 12) != Rational(p - 1))
                    part.fail("p42 p=" + std::to_string(p) + ": starred sum " +
                              Rational(sum12, 12).str() + " != " + std::to_string(p - 1));

                part.checks += 1;
                Rational tr = trace_level7(p, table);
                if (!tr.is_zero())
                    part.fail("trace7 p=" + std::to_string(p) + ": trace " + tr.str() + " != 0");
            }
        });
    report.target = "p42";
    return report;
}

}  // namespace hcn
