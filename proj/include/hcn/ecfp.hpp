#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hcn {

// Short Weierstrass curve y^2 = x^3 + Ax + B over F_p, p >= 5.
struct CurveWeierstrass {
    std::int64_t p = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;

    bool singular() const;  // 4A^3 + 27B^2 = 0 in F_p
};

// #E(F_p) = p + 1 + sum_x (x^3+Ax+B | p); enforces the Hasse bound.
std::int64_t count_points(const CurveWeierstrass& curve);

// One representative per twist class (A,B) ~ (u^4 A, u^6 B), u in F_p^*.
// The representative is the lexicographically smallest (A,B) in its orbit.
std::vector<CurveWeierstrass> isomorphism_classes(std::int64_t p);

// E(F_p) = Z/d1 x Z/d2 with d1 | d2. d2 is the group exponent, found as
// the lcm of point orders (orders by repeated addition).
struct GroupStructure {
    std::int64_t d1 = 1;
    std::int64_t d2 = 1;
};

GroupStructure group_structure(const CurveWeierstrass& curve);

enum class TorsionKind {
    HasPointOfOrder,  // m | d2
    FullTorsion,      // m | d1
    Cyclic4NotFull2,  // 4 | d2 and d1 odd
};

struct TorsionQuery {
    TorsionKind kind = TorsionKind::HasPointOfOrder;
    int m = 2;

    std::string label() const;
    static TorsionQuery parse(const std::string& label);  // throws on unknown label
    bool matches(const GroupStructure& g) const;
};

// Per-prime census over all isomorphism classes.
struct CurveClassSummary {
    std::int64_t p = 0;
    std::map<std::int64_t, std::int64_t> trace_counts;        // every |r| < 2 sqrt p
    std::map<std::string, std::int64_t> torsion_counts;       // by query label
};

// Fills trace_counts only (no group structures needed).
CurveClassSummary trace_spectrum(std::int64_t p);

// Class counts for several torsion queries in one pass; group structure
// is computed once per class.
std::map<std::string, std::int64_t> torsion_census(std::int64_t p,
                                                   const std::vector<TorsionQuery>& queries);

std::int64_t torsion_class_counts(std::int64_t p, const TorsionQuery& query);

// Nonsingular curves y^2 = x^3 + bx^2 + cx (a point of order 2 at the
// origin), split by whether b^2 - 4c is a nonzero square.
struct TwoTorsionModelCounts {
    std::int64_t full_count = 0;    // full 2-torsion: (p-1)(p-2)/2
    std::int64_t cyclic_count = 0;  // cyclic 2-torsion: p(p-1)/2
};

TwoTorsionModelCounts enumerate_2torsion_models(std::int64_t p);

// Tate family with a point of order 7 at the origin:
//   y^2 + (1-s^2+s)xy - (s^3-s^2)y = x^3 - (s^3-s^2)x^2,
// discriminant s^7 (s-1)^7 (s^3 - 8s^2 + 5s + 1).
struct Tate7Census {
    std::int64_t nonsingular_count = 0;
    std::int64_t cubic_roots = 0;  // roots of s^3 - 8s^2 + 5s + 1 in F_p
    std::int64_t class_count = 0;  // distinct isomorphism classes in the family
};

Tate7Census enumerate_tate7(std::int64_t p);  // p not in {2,3,7}

// Tate family with a point of order 4 at the origin:
//   y^2 + xy - by = x^3 - bx^2, discriminant b^4 (1 + 16b);
// the class has full 2-torsion iff 16b + 1 is a square.
struct Tate4Census {
    std::int64_t nonsingular_count = 0;
    std::int64_t cyclic4_not_full2_classes = 0;  // each such class once: (p-1)/2
};

Tate4Census enumerate_tate4(std::int64_t p);

// Long Weierstrass y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 to the
// isomorphic short model y^2 = x^3 - 27 c4 x - 54 c6 (char >= 5).
CurveWeierstrass to_short_weierstrass(std::int64_t p, std::int64_t a1, std::int64_t a2,
                                      std::int64_t a3, std::int64_t a4, std::int64_t a6);

// Lexicographically smallest (A,B) in the twist orbit of `curve`.
CurveWeierstrass canonical_class_representative(const CurveWeierstrass& curve);

}  // namespace hcn
