#pragma once

#include <cstdint>

#include "hcn/arith.hpp"
#include "hcn/hurwitz.hpp"
#include "hcn/report.hpp"

namespace hcn {

// The c(s,f,7) table for T_p on S_2(7): value 2 exactly when
//   p = 3 (mod 7) and s = 0,+-3;  p = 5 and s = 0,+-1;  p = 6 and s = 0,+-2;
// 0 otherwise. Constant in f.
int trace7_c(std::int64_t p_mod7, std::int64_t s_mod7);

// Eichler-Selberg trace of T_p on S_2(7) for p = 3,5,6 (mod 7):
// p + 1 minus the hyperbolic term minus the elliptic term. S_2(7) = {0},
// so the exact value is 0. Rejects p = 1,2,4 (mod 7), where the c-table
// gives no data.
Rational trace_level7(std::int64_t p, const HurwitzTable& table);

// Starred sum over |s| < 2 sqrt p with s in the residue classes of the
// c-table equals p - 1; cross-checked against the trace reconstruction.
VerificationReport verify_prop42(std::int64_t pmax, const HurwitzTable& table, int workers = 1);

}  // namespace hcn
