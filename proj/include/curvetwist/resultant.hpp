#pragma once

#include <string>

#include "curvetwist/matrix.hpp"

namespace curvetwist {

/// Sylvester matrix of p and q in `var`: deg q shifted rows of p's
/// coefficients on top, then deg p rows of q's, highest degree first.
inline PolyMatrix sylvester_matrix(const Polynomial& p, const Polynomial& q, const std::string& var) {
  int dp = std::max(p.degree_in(var), 0), dq = std::max(q.degree_in(var), 0);
  auto cp = p.coefficients_in(var), cq = q.coefficients_in(var);
  std::size_t size = dp + dq;
  PolyMatrix s(size, size);
  auto vars = Polynomial::merged_variables(p, q);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) s(i, j) = Polynomial(vars);
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) s(r, r + k) = cp[dp - k].embed(vars);
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) s(dq + r, r + k) = cq[dq - k].embed(vars);
  return s;
}

/// Resultant eliminating `var`, as the Sylvester determinant.
inline Polynomial resultant_wrt(const Polynomial& p, const Polynomial& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) return Polynomial(Polynomial::merged_variables(p, q));
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp <= 0 && dq <= 0) throw DomainError("resultant_wrt: '" + var + "' occurs in neither polynomial");
  Polynomial r = determinant(sylvester_matrix(p, q, var));
  return r.trimmed();
}

/// res_var(p, dp/dvar).
inline Polynomial discriminant_wrt(const Polynomial& p, const std::string& var) {
  return resultant_wrt(p, p.derivative(var), var);
}

}  // namespace curvetwist
