#include "hcn/qseries.hpp"

#include <numeric>
#include <stdexcept>

#include "hcn/ecfp.hpp"
#include "sweep_util.hpp"

namespace hcn {

namespace {

void require_same_truncation(const QSeries& f, const QSeries& g, const char* op) {
    if (f.truncation != g.truncation)
        throw std::invalid_argument(std::string(op) + ": truncation mismatch (" +
                                    std::to_string(f.truncation) + " vs " +
                                    std::to_string(g.truncation) + ")");
}

}  // namespace

QSeries series_add(const QSeries& f, const QSeries& g) {
    require_same_truncation(f, g, "series_add");
    QSeries out(f.truncation);
    for (std::int64_t n = 0; n <= f.truncation; ++n) out[n] = f[n] + g[n];
    return out;
}

QSeries series_scale(const QSeries& f, const Rational& c) {
    QSeries out(f.truncation);
    for (std::int64_t n = 0; n <= f.truncation; ++n) out[n] = f[n] * c;
    return out;
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
    require_same_truncation(f, g, "series_mul");
    QSeries out(f.truncation);
    for (std::int64_t i = 0; i <= f.truncation; ++i) {
        if (f[i].is_zero()) continue;
        for (std::int64_t j = 0; i + j <= f.truncation; ++j) {
            if (g[j].is_zero()) continue;
            out[i + j] += f[i] * g[j];
        }
    }
    return out;
}

QSeries series_stretch(const QSeries& f, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("series_stretch: d >= 1 required");
    QSeries out(f.truncation);
    for (std::int64_t n = 0; n <= f.truncation; n += d) out[n] = f[n / d];
    return out;
}

QSeries theta(std::int64_t T) {
    QSeries out(T);
    out[0] = Rational(1);
    for (std::int64_t s = 1; s * s <= T; ++s) out[s * s] = Rational(2);
    return out;
}

DirichletCharacter::DirichletCharacter(std::int64_t M, std::vector<int> vals)
    : modulus(M), values(std::move(vals)) {
    if (modulus < 1) throw std::invalid_argument("character modulus must be >= 1");
    if ((std::int64_t)values.size() != modulus)
        throw std::invalid_argument("character table must have one entry per residue");
    for (std::int64_t a = 0; a < modulus; ++a) {
        if (values[(std::size_t)a] < -1 || values[(std::size_t)a] > 1)
            throw std::invalid_argument("character values must lie in {-1,0,1}");
        bool unit = std::gcd(a, modulus) == 1;
        if (unit == (values[(std::size_t)a] == 0))
            throw std::invalid_argument("character must vanish exactly on non-units");
    }
    if ((*this)(1) != 1) throw std::invalid_argument("character must take value 1 at 1");
    for (std::int64_t a = 0; a < modulus; ++a) {
        if ((*this)(a) == 0) continue;
        for (std::int64_t b = a; b < modulus; ++b) {
            if ((*this)(b) == 0) continue;
            if ((*this)(a * b) != (*this)(a) * (*this)(b))
                throw std::invalid_argument("character not completely multiplicative");
        }
    }
}

int DirichletCharacter::operator()(std::int64_t a) const {
    std::int64_t r = a % modulus;
    if (r < 0) r += modulus;
    return values[(std::size_t)r];
}

bool DirichletCharacter::is_trivial() const {
    for (std::int64_t a = 0; a < modulus; ++a)
        if (values[(std::size_t)a] == -1) return false;
    return true;
}

DirichletCharacter DirichletCharacter::principal(std::int64_t M) {
    if (M < 1) throw std::invalid_argument("character modulus must be >= 1");
    std::vector<int> vals((std::size_t)M);
    for (std::int64_t a = 0; a < M; ++a) vals[(std::size_t)a] = std::gcd(a, M) == 1 ? 1 : 0;
    return DirichletCharacter(M, std::move(vals));
}

DirichletCharacter DirichletCharacter::legendre3() { return DirichletCharacter(3, {0, 1, -1}); }

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& other) const {
    std::int64_t M = modulus * other.modulus;
    std::vector<int> vals((std::size_t)M);
    for (std::int64_t a = 0; a < M; ++a) vals[(std::size_t)a] = (*this)(a)*other(a);
    return DirichletCharacter(M, std::move(vals));
}

Rational gen_bernoulli(int k, const DirichletCharacter& chi) {
    if (k < 0) throw std::invalid_argument("gen_bernoulli: k >= 0 required");
    std::int64_t m = chi.modulus;

    // factorials 0!..(k+1)! as rationals
    std::vector<Rational> fact((std::size_t)k + 2, Rational(1));
    for (std::int64_t j = 1; j <= k + 1; ++j) fact[(std::size_t)j] = fact[(std::size_t)j - 1] * Rational(j);

    // numer(t) = sum_{a=1}^{m} chi(a) e^{at}, truncated at t^k
    std::vector<Rational> numer((std::size_t)k + 1);
    for (std::int64_t a = 1; a <= m; ++a) {
        int va = chi(a);
        if (va == 0) continue;
        Rational apow(1);
        for (int j = 0; j <= k; ++j) {
            numer[(std::size_t)j] += Rational(va) * apow / fact[(std::size_t)j];
            apow *= Rational(a);
        }
    }

    // (e^{mt} - 1)/t = sum_j m^{j+1} t^j / (j+1)!, nonzero constant term m
    std::vector<Rational> denom((std::size_t)k + 1);
    Rational mpow(m);
    for (int j = 0; j <= k; ++j) {
        denom[(std::size_t)j] = mpow / fact[(std::size_t)j + 1];
        mpow *= Rational(m);
    }

    // series division h = numer/denom
    std::vector<Rational> h((std::size_t)k + 1);
    for (int j = 0; j <= k; ++j) {
        Rational acc = numer[(std::size_t)j];
        for (int i = 0; i < j; ++i) acc -= h[(std::size_t)i] * denom[(std::size_t)(j - i)];
        h[(std::size_t)j] = acc / denom[0];
    }
    return h[(std::size_t)k] * fact[(std::size_t)k];
}

QSeries eisenstein_E2(const DirichletCharacter& psi1, const DirichletCharacter& psi2,
                      std::int64_t T) {
    if (T < 0) throw std::invalid_argument("eisenstein_E2: T >= 0 required");
    QSeries out(T);
    if (!psi1.is_trivial()) {
        out[0] = Rational(0);
    } else if (psi2.is_trivial()) {
        out[0] = Rational(psi1.modulus * psi2.modulus - 1, 24);
    } else {
        out[0] = -gen_bernoulli(2, psi1.times(psi2)) / Rational(4);
    }
    for (std::int64_t n = 1; n <= T; ++n) {
        std::int64_t acc = 0;
        for (std::int64_t d : divisors(n)) acc += psi1(n / d) * psi2(d) * d;
        out[n] = Rational(acc);
    }
    return out;
}

QSeries hurwitz_slice(std::int64_t a, std::int64_t b, const HurwitzTable& table, std::int64_t T) {
    if (a < 1) throw std::invalid_argument("hurwitz_slice: modulus a >= 1 required");
    if (T > table.n_max) throw std::invalid_argument("hurwitz_slice: table too small for T");
    b = ((b % a) + a) % a;
    std::vector<bool> square_mod_a((std::size_t)a, false);
    for (std::int64_t z = 0; z < a; ++z) square_mod_a[(std::size_t)(z * z % a)] = true;
    if (square_mod_a[(std::size_t)((a - b) % a)])
        throw std::invalid_argument("hurwitz_slice: -b must be a quadratic non-residue mod a");
    QSeries out(T);
    for (std::int64_t N = b; N <= T; N += a) out[N] = table.h(N);  // b >= 1 here
    return out;
}

std::vector<std::int64_t> cuspform_aN(std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("cuspform_aN: n_max >= 1 required");
    std::vector<std::int64_t> a((std::size_t)n_max + 1, 0);
    a[1] = 1;
    if (n_max == 1) return a;

    // smallest prime factor sieve
    std::vector<std::int64_t> spf((std::size_t)n_max + 1, 0);
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (spf[(std::size_t)i] != 0) continue;
        for (std::int64_t j = i; j <= n_max; j += i)
            if (spf[(std::size_t)j] == 0) spf[(std::size_t)j] = i;
    }

    for (std::int64_t n = 2; n <= n_max; ++n) {
        if (n % 2 == 0 || n % 3 == 0) continue;  // a(n) = 0 off (n,6) = 1
        std::int64_t p = spf[(std::size_t)n];
        std::int64_t pe = p, m = n / p;
        while (m % p == 0) {
            pe *= p;
            m /= p;
        }
        if (m > 1) {
            a[(std::size_t)n] = a[(std::size_t)pe] * a[(std::size_t)m];  // coprime factors
        } else if (pe == p) {
            a[(std::size_t)n] = p + 1 - count_points(CurveWeierstrass{p, 0, 1});
        } else {
            // Hecke recursion a(p^{e+1}) = a(p) a(p^e) - p a(p^{e-1})
            a[(std::size_t)n] =
                a[(std::size_t)p] * a[(std::size_t)(n / p)] - p * a[(std::size_t)(n / p / p)];
        }
    }
    return a;
}

std::int64_t sturm_bound(int k, std::int64_t N) {
    if (k < 1 || N < 1) throw std::invalid_argument("sturm_bound: k >= 1, N >= 1 required");
    Rational m = Rational(k, 12) * Rational(N);
    std::int64_t rest = N;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        m *= Rational(p + 1, p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) m *= Rational(rest + 1, rest);
    return (std::int64_t)(m.num() / m.den());
}

std::vector<QSeries> build_basis_36(std::int64_t T) {
    if (T < 12) throw std::invalid_argument("build_basis_36: T >= 12 required");
    DirichletCharacter chi0 = DirichletCharacter::principal(1);
    DirichletCharacter chi02 = DirichletCharacter::principal(2);
    DirichletCharacter chi03 = DirichletCharacter::principal(3);
    DirichletCharacter leg3 = DirichletCharacter::legendre3();

    QSeries e_chi02 = eisenstein_E2(chi0, chi02, T);
    QSeries e_chi03 = eisenstein_E2(chi0, chi03, T);
    QSeries e_leg3 = eisenstein_E2(leg3, leg3, T);

    std::vector<QSeries> basis;
    basis.push_back(e_chi02);
    basis.push_back(e_chi03);
    basis.push_back(e_leg3);
    basis.push_back(series_stretch(e_chi02, 2));
    basis.push_back(series_stretch(e_chi02, 3));
    basis.push_back(series_stretch(e_chi02, 9));
    basis.push_back(series_stretch(e_chi02, 6));
    basis.push_back(series_stretch(e_chi02, 18));
    basis.push_back(series_stretch(e_chi03, 3));
    basis.push_back(series_stretch(e_leg3, 2));
    basis.push_back(series_stretch(e_leg3, 4));

    std::vector<std::int64_t> a = cuspform_aN(T);
    QSeries cusp(T);
    for (std::int64_t n = 1; n <= T; ++n) cusp[n] = Rational(a[(std::size_t)n]);
    basis.push_back(std::move(cusp));
    return basis;
}

std::vector<Rational> solve_combination(const QSeries& target, const std::vector<QSeries>& basis,
                                        std::int64_t fit_terms) {
    std::size_t k = basis.size();
    if (k == 0) throw std::invalid_argument("solve_combination: empty basis");
    if (fit_terms < (std::int64_t)k)
        throw std::invalid_argument("solve_combination: fit_terms must be >= basis size");
    if (fit_terms > target.truncation + 1)
        throw std::invalid_argument("solve_combination: fit_terms exceeds target truncation");
    for (const QSeries& f : basis) require_same_truncation(f, target, "solve_combination");

    // augmented matrix over Q: rows = coefficient indices 0..fit_terms-1
    std::vector<std::vector<Rational>> mat((std::size_t)fit_terms,
                                           std::vector<Rational>(k + 1));
    for (std::int64_t n = 0; n < fit_terms; ++n) {
        for (std::size_t j = 0; j < k; ++j) mat[(std::size_t)n][j] = basis[j][n];
        mat[(std::size_t)n][k] = target[n];
    }

    std::size_t row = 0;
    std::vector<std::size_t> pivot_row_of_col(k, SIZE_MAX);
    for (std::size_t col = 0; col < k && row < mat.size(); ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = row; r < mat.size(); ++r)
            if (!mat[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == SIZE_MAX) continue;
        std::swap(mat[row], mat[pivot]);
        for (std::size_t r = row + 1; r < mat.size(); ++r) {
            if (mat[r][col].is_zero()) continue;
            Rational factor = mat[r][col] / mat[row][col];
            for (std::size_t cc = col; cc <= k; ++cc) mat[r][cc] -= factor * mat[row][cc];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    for (std::size_t col = 0; col < k; ++col)
        if (pivot_row_of_col[col] == SIZE_MAX)
            throw std::runtime_error("solve_combination: basis dependent");

    std::vector<Rational> coeff(k);
    for (std::size_t col = k; col-- > 0;) {
        std::size_t r = pivot_row_of_col[col];
        Rational acc = mat[r][k];
        for (std::size_t cc = col + 1; cc < k; ++cc) acc -= mat[r][cc] * coeff[cc];
        coeff[col] = acc / mat[r][col];
    }

    // residual must vanish through the whole truncation, fit window included
    for (std::int64_t n = 0; n <= target.truncation; ++n) {
        Rational acc;
        for (std::size_t j = 0; j < k; ++j) acc += coeff[j] * basis[j][n];
        if (acc != target[n])
            throw std::runtime_error("solve_combination: not in span at coefficient " +
                                     std::to_string(n));
    }
    return coeff;
}

VerificationReport verify_techprop(const HurwitzTable& table, std::int64_t T, int workers) {
    if (T < 1) throw std::invalid_argument("verify_techprop: T >= 1 required");
    if (table.n_max < T) throw std::invalid_argument("verify_techprop: table too small");
    std::vector<std::int64_t> a = cuspform_aN(T);

    VerificationReport report = detail::sweep_ranges(
        1, T, workers, [&](std::int64_t lo, std::int64_t hi, VerificationReport& part) {
            for (std::int64_t n = lo; n <= hi; ++n) {
                int n_mod3 = (int)(n % 3);
                if (n_mod3 == 0) continue;
                part.items += 1;

                std::int64_t lhs12 = 0;  // 12 * starred sum
                for (std::int64_t s = -isqrt(n - 1); s * s < n; ++s) {
                    bool starred = n_mod3 == 1 ? s % 3 == 0 : s % 3 != 0;
                    if (starred) lhs12 += table.twelve_h(n - s * s);
                }
                Rational lhs = Rational(lhs12, 12);

                Rational rhs = Rational(-1, 16) * Rational(mu_at(1, Rational(n)))
                             + Rational(3, 16) * Rational(mu_at(2, Rational(n)))
                             + Rational(-1, 24) * Rational(mu_at(3, Rational(n)))
                             + Rational(-1, 2) * Rational(mu_at(1, Rational(n, 2)))
                             + Rational(1, 4) * Rational(mu_at(1, Rational(n, 3)))
                             + Rational(-3, 16) * Rational(mu_at(1, Rational(n, 9)))
                             + Rational(2) * Rational(mu_at(1, Rational(n, 6)))
                             + Rational(-3, 2) * Rational(mu_at(1, Rational(n, 18)))
                             + Rational(-3, 16) * Rational(mu_at(2, Rational(n, 3)))
                             + Rational(-1, 8) * Rational(mu_at(3, Rational(n, 2)))
                             + Rational(-1, 3) * Rational(mu_at(3, Rational(n, 4)))
                             + Rational(-1, 12) * Rational(a[(std::size_t)n]);

                part.checks += 1;
                if (lhs != rhs)
                    part.fail("techprop n=" + std::to_string(n) + ": starred sum " + lhs.str() +
                              " != mu expression " + rhs.str());
            }
        });
    report.target = "techprop";
    return report;
}

}  // namespace hcn
