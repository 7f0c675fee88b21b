#include "hcn/ecfp.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "hcn/arith.hpp"

namespace hcn {

namespace {

void require_census_prime(std::int64_t p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("ecfp: p must be a prime >= 5 (char 2,3 unsupported), got " +
                                    std::to_string(p));
}

// Arithmetic in F_p. Products go through 128-bit intermediates.
struct Fp {
    std::int64_t p;

    std::int64_t norm(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % p; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return norm(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        return (std::int64_t)((int128)a * b % p);
    }
    std::int64_t inv(std::int64_t a) const {
        // extended Euclid; a != 0 mod p
        std::int64_t t = 0, new_t = 1, r = p, new_r = norm(a);
        if (new_r == 0) throw std::domain_error("inverse of zero in F_p");
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return norm(t);
    }
    std::int64_t curve_rhs(std::int64_t A, std::int64_t B, std::int64_t x) const {
        return add(mul(mul(x, x), x), add(mul(A, x), B));
    }

    // qr[v] = 1 iff v is a nonzero square mod p (index 0 left false).
    std::vector<bool> square_table() const {
        std::vector<bool> qr((std::size_t)p, false);
        for (std::int64_t z = 1; z <= (p - 1) / 2; ++z) qr[(std::size_t)mul(z, z)] = true;
        return qr;
    }

    // some y with y^2 = v, for each square v; p entries, -1 where none
    std::vector<std::int64_t> sqrt_table() const {
        std::vector<std::int64_t> root((std::size_t)p, -1);
        for (std::int64_t z = 0; z <= (p - 1) / 2; ++z) root[(std::size_t)mul(z, z)] = z;
        return root;
    }
};

struct Point {
    std::int64_t x = 0, y = 0;
    bool inf = true;
};

Point ec_add(const Fp& f, std::int64_t A, const Point& P, const Point& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x && f.add(P.y, Q.y) == 0) return Point{};  // opposite points
    std::int64_t lambda;
    if (P.x == Q.x && P.y == Q.y) {
        lambda = f.mul(f.add(f.mul(3, f.mul(P.x, P.x)), A), f.inv(f.mul(2, P.y)));
    } else {
        lambda = f.mul(f.sub(Q.y, P.y), f.inv(f.sub(Q.x, P.x)));
    }
    std::int64_t x3 = f.sub(f.mul(lambda, lambda), f.add(P.x, Q.x));
    std::int64_t y3 = f.sub(f.mul(lambda, f.sub(P.x, x3)), P.y);
    return Point{x3, y3, false};
}

std::int64_t point_order(const Fp& f, std::int64_t A, const Point& P) {
    Point Q = P;
    std::int64_t o = 1;
    while (!Q.inf) {
        Q = ec_add(f, A, Q, P);
        ++o;
    }
    return o;
}

std::int64_t count_points_impl(const Fp& f, std::int64_t A, std::int64_t B,
                               const std::vector<bool>& qr) {
    std::int64_t n = f.p + 1;
    for (std::int64_t x = 0; x < f.p; ++x) {
        std::int64_t v = f.curve_rhs(A, B, x);
        if (v == 0) continue;          // one point (x, 0)
        n += qr[(std::size_t)v] ? 1 : -1;
    }
    std::int64_t r = f.p + 1 - n;
    if (r * r >= 4 * f.p) throw std::logic_error("Hasse bound violated at p=" + std::to_string(f.p));
    return n;
}

std::vector<Point> enumerate_points(const Fp& f, std::int64_t A, std::int64_t B,
                                    const std::vector<std::int64_t>& root) {
    std::vector<Point> pts;  // affine points only
    for (std::int64_t x = 0; x < f.p; ++x) {
        std::int64_t v = f.curve_rhs(A, B, x);
        std::int64_t y = root[(std::size_t)v];
        if (y < 0) continue;
        pts.push_back(Point{x, y, false});
        if (y != 0) pts.push_back(Point{x, f.p - y, false});
    }
    return pts;
}

GroupStructure group_structure_impl(const Fp& f, std::int64_t A, std::int64_t B,
                                    const std::vector<bool>& qr,
                                    const std::vector<std::int64_t>& root) {
    std::int64_t n = count_points_impl(f, A, B, qr);
    std::vector<Point> pts = enumerate_points(f, A, B, root);
    std::int64_t exponent = 1;
    for (const Point& P : pts) {
        exponent = std::lcm(exponent, point_order(f, A, P));
        if (exponent == n) break;  // cyclic; no larger exponent possible
    }
    GroupStructure g;
    g.d2 = exponent;
    g.d1 = n / exponent;
    if (g.d1 * g.d2 != n || g.d2 % g.d1 != 0)
        throw std::logic_error("group structure inconsistent at p=" + std::to_string(f.p));
    return g;
}

}  // namespace

bool CurveWeierstrass::singular() const {
    Fp f{p};
    std::int64_t a = f.norm(A), b = f.norm(B);
    std::int64_t disc = f.add(f.mul(4, f.mul(a, f.mul(a, a))), f.mul(27, f.mul(b, b)));
    return disc == 0;
}

std::int64_t count_points(const CurveWeierstrass& curve) {
    require_census_prime(curve.p);
    if (curve.singular())
        throw std::invalid_argument("count_points: singular curve A=" + std::to_string(curve.A) +
                                    " B=" + std::to_string(curve.B) + " over p=" +
                                    std::to_string(curve.p));
    Fp f{curve.p};
    return count_points_impl(f, f.norm(curve.A), f.norm(curve.B), f.square_table());
}

CurveWeierstrass canonical_class_representative(const CurveWeierstrass& curve) {
    require_census_prime(curve.p);
    Fp f{curve.p};
    std::int64_t bestA = f.norm(curve.A), bestB = f.norm(curve.B);
    for (std::int64_t u = 2; u < curve.p; ++u) {
        std::int64_t u2 = f.mul(u, u);
        std::int64_t u4 = f.mul(u2, u2);
        std::int64_t u6 = f.mul(u4, u2);
        std::int64_t A = f.mul(u4, f.norm(curve.A));
        std::int64_t B = f.mul(u6, f.norm(curve.B));
        if (A < bestA || (A == bestA && B < bestB)) {
            bestA = A;
            bestB = B;
        }
    }
    return CurveWeierstrass{curve.p, bestA, bestB};
}

std::vector<CurveWeierstrass> isomorphism_classes(std::int64_t p) {
    require_census_prime(p);
    if (p > 5000)
        throw std::invalid_argument("isomorphism_classes: brute-force census is for small p (<= 5000)");
    Fp f{p};
    std::vector<bool> seen((std::size_t)(p * p), false);
    std::vector<CurveWeierstrass> classes;
    for (std::int64_t A = 0; A < p; ++A) {
        for (std::int64_t B = 0; B < p; ++B) {
            if (seen[(std::size_t)(A * p + B)]) continue;
            CurveWeierstrass rep{p, A, B};
            if (rep.singular()) continue;
            // Lex iteration order makes the first unseen pair the orbit minimum.
            classes.push_back(rep);
            for (std::int64_t u = 1; u < p; ++u) {
                std::int64_t u2 = f.mul(u, u);
                std::int64_t u4 = f.mul(u2, u2);
                std::int64_t u6 = f.mul(u4, u2);
                seen[(std::size_t)(f.mul(u4, A) * p + f.mul(u6, B))] = true;
            }
        }
    }
    return classes;
}

CurveClassSummary trace_spectrum(std::int64_t p) {
    require_census_prime(p);
    Fp f{p};
    std::vector<bool> qr = f.square_table();
    CurveClassSummary summary;
    summary.p = p;
    std::int64_t r_max = isqrt(4 * p - 1);
    for (std::int64_t r = -r_max; r <= r_max; ++r) summary.trace_counts[r] = 0;
    for (const CurveWeierstrass& curve : isomorphism_classes(p)) {
        std::int64_t n = count_points_impl(f, curve.A, curve.B, qr);
        summary.trace_counts.at(p + 1 - n) += 1;
    }
    return summary;
}

std::string TorsionQuery::label() const {
    switch (kind) {
        case TorsionKind::HasPointOfOrder: return "order-" + std::to_string(m);
        case TorsionKind::FullTorsion: return "full-" + std::to_string(m);
        case TorsionKind::Cyclic4NotFull2: return "cyclic4-not-full2";
    }
    throw std::logic_error("unreachable");
}

TorsionQuery TorsionQuery::parse(const std::string& label) {
    if (label == "cyclic4-not-full2") return TorsionQuery{TorsionKind::Cyclic4NotFull2, 4};
    for (const char* prefix : {"order-", "full-"}) {
        if (label.rfind(prefix, 0) == 0) {
            int m = std::stoi(label.substr(std::string(prefix).size()));
            if (m < 2) throw std::invalid_argument("torsion query needs m >= 2: " + label);
            return TorsionQuery{label[0] == 'o' ? TorsionKind::HasPointOfOrder
                                                : TorsionKind::FullTorsion,
                                m};
        }
    }
    throw std::invalid_argument("unknown torsion query label: " + label);
}

bool TorsionQuery::matches(const GroupStructure& g) const {
    switch (kind) {
        case TorsionKind::HasPointOfOrder: return g.d2 % m == 0;
        case TorsionKind::FullTorsion: return g.d1 % m == 0;
        case TorsionKind::Cyclic4NotFull2: return g.d2 % 4 == 0 && g.d1 % 2 != 0;
    }
    throw std::logic_error("unreachable");
}

GroupStructure group_structure(const CurveWeierstrass& curve) {
    require_census_prime(curve.p);
    if (curve.singular()) throw std::invalid_argument("group_structure: singular curve");
    Fp f{curve.p};
    return group_structure_impl(f, f.norm(curve.A), f.norm(curve.B), f.square_table(),
                                f.sqrt_table());
}

std::map<std::string, std::int64_t> torsion_census(std::int64_t p,
                                                   const std::vector<TorsionQuery>& queries) {
    require_census_prime(p);
    Fp f{p};
    std::vector<bool> qr = f.square_table();
    std::vector<std::int64_t> root = f.sqrt_table();
    std::map<std::string, std::int64_t> counts;
    for (const TorsionQuery& q : queries) counts[q.label()] = 0;
    for (const CurveWeierstrass& curve : isomorphism_classes(p)) {
        GroupStructure g = group_structure_impl(f, curve.A, curve.B, qr, root);
        for (const TorsionQuery& q : queries)
            if (q.matches(g)) counts[q.label()] += 1;
    }
    return counts;
}

std::int64_t torsion_class_counts(std::int64_t p, const TorsionQuery& query) {
    return torsion_census(p, {query}).at(query.label());
}

TwoTorsionModelCounts enumerate_2torsion_models(std::int64_t p) {
    require_census_prime(p);
    Fp f{p};
    std::vector<bool> qr = f.square_table();
    TwoTorsionModelCounts counts;
    for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t c = 1; c < p; ++c) {  // c = 0 is singular
            std::int64_t disc = f.sub(f.mul(b, b), f.mul(4, c));
            if (disc == 0) continue;  // b^2 = 4c is singular
            if (qr[(std::size_t)disc])
                ++counts.full_count;
            else
                ++counts.cyclic_count;
        }
    }
    if (counts.full_count != (p - 1) * (p - 2) / 2 || counts.cyclic_count != p * (p - 1) / 2)
        throw std::logic_error("2-torsion model counts off the closed form at p=" +
                               std::to_string(p));
    return counts;
}

CurveWeierstrass to_short_weierstrass(std::int64_t p, std::int64_t a1, std::int64_t a2,
                                      std::int64_t a3, std::int64_t a4, std::int64_t a6) {
    require_census_prime(p);
    Fp f{p};
    a1 = f.norm(a1), a2 = f.norm(a2), a3 = f.norm(a3), a4 = f.norm(a4), a6 = f.norm(a6);
    std::int64_t b2 = f.add(f.mul(a1, a1), f.mul(4, a2));
    std::int64_t b4 = f.add(f.mul(2, a4), f.mul(a1, a3));
    std::int64_t b6 = f.add(f.mul(a3, a3), f.mul(4, a6));
    std::int64_t c4 = f.sub(f.mul(b2, b2), f.mul(24, b4));
    std::int64_t c6 = f.sub(f.mul(36, f.mul(b2, b4)), f.add(f.mul(b2, f.mul(b2, b2)), f.mul(216, b6)));
    return CurveWeierstrass{p, f.norm(-f.mul(27, c4)), f.norm(-f.mul(54, c6))};
}

Tate7Census enumerate_tate7(std::int64_t p) {
    require_census_prime(p);
    if (p == 7) throw std::invalid_argument("enumerate_tate7: p = 7 excluded");
    Fp f{p};
    Tate7Census census;
    std::set<std::pair<std::int64_t, std::int64_t>> reps;
    for (std::int64_t s = 0; s < p; ++s) {
        // cubic factor of the discriminant: s^3 - 8s^2 + 5s + 1
        std::int64_t cubic = f.norm(f.add(f.mul(s, f.mul(s, s)),
                                          f.add(f.mul(f.norm(-8), f.mul(s, s)),
                                                f.add(f.mul(5, s), 1))));
        if (cubic == 0) ++census.cubic_roots;
        if (s == 0 || s == 1 || cubic == 0) continue;  // discriminant s^7 (s-1)^7 cubic
        ++census.nonsingular_count;
        std::int64_t s2 = f.mul(s, s);
        std::int64_t u = f.sub(f.mul(s2, s), s2);  // s^3 - s^2
        std::int64_t a1 = f.norm(1 - s2 + s);
        CurveWeierstrass shortform =
            to_short_weierstrass(p, a1, f.norm(-u), f.norm(-u), 0, 0);
        CurveWeierstrass rep = canonical_class_representative(shortform);
        reps.insert({rep.A, rep.B});
    }
    census.class_count = (std::int64_t)reps.size();
    std::int64_t pm7 = p % 7;
    std::int64_t expected_roots = (pm7 == 1 || pm7 == 6) ? 3 : 0;
    if (census.cubic_roots != expected_roots)
        throw std::logic_error("tate7 cubic root count off at p=" + std::to_string(p));
    if (census.nonsingular_count != p - 2 - census.cubic_roots)
        throw std::logic_error("tate7 nonsingular count off at p=" + std::to_string(p));
    return census;
}

Tate4Census enumerate_tate4(std::int64_t p) {
    require_census_prime(p);
    Fp f{p};
    std::vector<bool> qr = f.square_table();
    Tate4Census census;
    std::set<std::pair<std::int64_t, std::int64_t>> cyclic_reps;
    for (std::int64_t b = 1; b < p; ++b) {
        std::int64_t t = f.norm(16 * b + 1);
        if (t == 0) continue;  // discriminant b^4 (1 + 16b) vanishes
        ++census.nonsingular_count;
        if (qr[(std::size_t)t]) continue;  // full 2-torsion; counted elsewhere
        CurveWeierstrass shortform = to_short_weierstrass(p, 1, f.norm(-b), f.norm(-b), 0, 0);
        CurveWeierstrass rep = canonical_class_representative(shortform);
        cyclic_reps.insert({rep.A, rep.B});
    }
    census.cyclic4_not_full2_classes = (std::int64_t)cyclic_reps.size();
    return census;
}

}  // namespace hcn
