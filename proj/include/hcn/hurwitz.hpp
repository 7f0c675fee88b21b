#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcn/arith.hpp"

namespace hcn {

// Dense table of scaled Hurwitz class numbers: values12[N] = 12*H(N).
// Every weight in the definition has denominator dividing 12, so the
// entries are integers (values12[0] = -1, zero at N = 1,2 mod 4).
struct HurwitzTable {
    std::int64_t n_max = 0;
    std::vector<std::int64_t> values12;

    std::int64_t twelve_h(std::int64_t N) const;  // bounds-checked
    Rational h(std::int64_t N) const { return Rational(twelve_h(N), 12); }
};

// H(N) by direct enumeration of reduced positive definite forms (a,b,c)
// with b^2 - 4ac = -N: |b| <= a <= c, b >= 0 when |b| = a or a = c;
// multiples of x^2+y^2 weigh 1/2 and of x^2+xy+y^2 weigh 1/3.
Rational hurwitz_single(std::int64_t N);

// Batch sieve: one triple loop over (a, b, c) fills all N <= n_max.
HurwitzTable hurwitz_table(std::int64_t n_max, int workers = 1);

// Line-oriented text format "HURWITZ12 1 <n_max>" + one "<N> <12H(N)>"
// per line, ascending N, ASCII, LF endings.
void save_table(const HurwitzTable& table, const std::string& path);
HurwitzTable load_table(const std::string& path);

}  // namespace hcn
