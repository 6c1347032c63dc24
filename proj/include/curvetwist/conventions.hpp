#pragma once

// The frozen calibration choices, as a JSON ledger. Every report carries it
// so outputs can be reproduced elsewhere.

#include <cstdint>
#include <cstdio>
#include <string>

#include "curvetwist/io.hpp"
#include "curvetwist/monodromy.hpp"

namespace curvetwist {

inline Json conventions() {
  return {
      {"version", 1},
      {"variables", "x0, x1, x2, x, y, t, then alphabetical; terms in graded lex order"},
      {"bezout_matrix", "(p(x)q(y) - p(y)q(x)) / (x - y) = sum_ij B_ij x^i y^j, low degree first"},
      {"line_image", "det(x0 B(p1,p2) + x1 B(p2,p0) + x2 B(p0,p1))"},
      {"brackets", {{"beta1", "x1*y0 - x0*y1"}, {"beta2", "x2*y0 - x0*y2"}, {"beta12", "x1*y2 - x2*y1"}}},
      {"curve_image_block", "beta12 (x) D0 + beta2 (x) D1 - beta1 (x) D2, compressed by left basis of D^T and right basis of D"},
      {"inversion_block", "diag(-x0 D0, -x1 D1, -x2 D2)"},
      {"pencil_roles", "fixture pencils: D0 = printed y-matrix, D1 = printed x-matrix, D2 = printed constant matrix"},
      {"contact_multiplicity", "first 1-based i with D_i(0) != E_i(0), 4 if D_1..D_3 all agree"},
      {"contact_recursion", "D_1 = r2'/r1', D_n = D_{n-1}'/r1' (same for E with s)"},
      {"hurwitz_move", "R_k: (t_k, t_k+1) -> (t_k t_k+1 t_k^-1, t_k); R_k^-1: (t_k, t_k+1) -> (t_k+1, t_k+1^-1 t_k t_k+1)"},
      {"bmt_certificate", "shortest move sequence, ties lexicographic (k ascending, R_k before R_k^-1); conjugators shortest first"},
      {"permutation", "perm[k] = start position of the strand ending at position k"},
      {"two_lines_shear", "x1 -> x1 + k x2, k = 0, 1, -1, 2, -2, ...; resultant in x2"},
      {"genericity_shear", "x -> x + k y, smallest k in 1, -1, 2, -2, ..."},
      {"strand_order", "ascending Re(y) + 2^-20 Im(y)"},
      {"tie_weight", numeric::kTieWeight},
      {"crossing_sign", "strands a < b at positions k, k+1 exchange: sigma_k^+1 iff Im(y_b - y_a) > 0 at the crossing"},
      {"loop_order", "critical values by Re descending, then Im ascending"},
      {"loop_shape",
       "base M = max Re + 1 + max radius on the real axis; down to a corridor below every disc, over, straight up with "
       "1.5 rho detours (left if the obstacle is right of or level with the target), counterclockwise 64-gon of "
       "radius min(nearest/4, 1/2), retrace"},
      {"precision", "53 bits, escalating to 113 on numerical failure; CURVETWIST_PRECISION = 53 | 113"},
  };
}

/// FNV-1a over the compact dump; stable across platforms.
inline std::string conventions_fingerprint() {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : conventions().dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace curvetwist
