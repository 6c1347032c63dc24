#pragma once

// Bezout matrices, determinantal representations and the determinant
// formulas for images of lines and plane curves under rational maps.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvetwist/matrix.hpp"
#include "curvetwist/resultant.hpp"
#include "curvetwist/univariate.hpp"

namespace curvetwist {

inline const std::vector<std::string>& projective_variables() {
  static const std::vector<std::string> v{"x0", "x1", "x2"};
  return v;
}

/// (p0, p1, p2) with a recorded common degree. Arity 1 maps are univariate in
/// `var`; arity 3 maps are homogeneous in x0, x1, x2.
struct RationalMap {
  std::array<Polynomial, 3> p;
  int arity = 1;
  int degree = 0;
  std::string var;

  static RationalMap line(const Polynomial& p0, const Polynomial& p1, const Polynomial& p2, std::string var = "",
                          int degree = -1) {
    std::vector<std::string> used;
    for (const auto* q : {&p0, &p1, &p2}) {
      auto u = q->used_variables();
      used.insert(used.end(), u.begin(), u.end());
    }
    used = canonical_variables(used);
    if (used.size() > 1) throw DomainError("line map must be univariate");
    if (var.empty()) var = used.empty() ? "t" : used[0];
    if (!used.empty() && used[0] != var) throw DomainError("line map variable mismatch");
    if (p0.is_zero() && p1.is_zero() && p2.is_zero()) throw DomainError("rational map is identically zero");
    int d = std::max({p0.degree_in(var), p1.degree_in(var), p2.degree_in(var), 0});
    if (degree < 0) degree = d;
    if (degree < d) throw DomainError("declared degree is below the component degrees");
    if (degree < 1) throw DomainError("line map needs degree at least 1");
    RationalMap m;
    m.p = {p0.embed({var}), p1.embed({var}), p2.embed({var})};
    m.arity = 1;
    m.degree = degree;
    m.var = var;
    return m;
  }

  static RationalMap plane(const Polynomial& p0, const Polynomial& p1, const Polynomial& p2, int degree = -1) {
    RationalMap m;
    m.arity = 3;
    int d = -1;
    for (int i = 0; i < 3; ++i) {
      const Polynomial& q = i == 0 ? p0 : i == 1 ? p1 : p2;
      for (const auto& v : q.used_variables())
        if (variable_rank(v) > 2) throw DomainError("plane map components must be forms in x0, x1, x2");
      if (!q.is_homogeneous()) throw DomainError("plane map component is not homogeneous: " + q.to_string());
      if (!q.is_zero()) {
        if (d >= 0 && q.total_degree() != d) throw DomainError("plane map components have different degrees");
        d = q.total_degree();
      }
      m.p[i] = q.embed(projective_variables());
    }
    if (d < 0) throw DomainError("rational map is identically zero");
    if (degree >= 0 && degree != d) throw DomainError("declared degree does not match the components");
    if (d < 1) throw DomainError("plane map needs degree at least 1");
    m.degree = d;
    return m;
  }

  static RationalMap identity() { return plane(Polynomial::parse("x0"), Polynomial::parse("x1"), Polynomial::parse("x2")); }

  static RationalMap inversion() {
    return plane(Polynomial::parse("x1*x2"), Polynomial::parse("x0*x2"), Polynomial::parse("x0*x1"));
  }

  /// Restriction of an affine map in (x, y) to the x-axis (y = 0) or y-axis (x = 0).
  static RationalMap axis_restriction(const std::array<Polynomial, 3>& affine, char axis, int degree = -1) {
    std::string keep = axis == 'x' ? "x" : "y", drop = axis == 'x' ? "y" : "x";
    std::array<Polynomial, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = affine[i].evaluate(drop, 0).trimmed();
    if (degree < 0) {
      degree = 0;
      for (const auto& q : affine) degree = std::max(degree, q.total_degree());
    }
    return line(r[0], r[1], r[2], keep, degree);
  }
};

/// Coefficient matrix of the Cayley quotient (p(s)q(t) - q(s)p(t)) / (s - t),
/// entry (i, j) multiplying s^i t^j. Size n, padded with zeros.
inline RationalMatrix bezout_matrix(const Polynomial& p, const Polynomial& q, const std::string& var, int n = -1) {
  int d = std::max(p.degree_in(var), q.degree_in(var));
  if (n < 0) n = d;
  if (d < 1 && n < 1) throw DomainError("bezout_matrix: both inputs are constant");
  if (n < d) throw DomainError("bezout_matrix: size below polynomial degree");
  for (const auto* f : {&p, &q})
    for (const auto& v : f->used_variables())
      if (v != var) throw DomainError("bezout_matrix: inputs must be univariate in " + var);
  const std::string s = "_bz_s", t = "_bz_t";
  Polynomial ps = p.rename({{var, s}}), pt = p.rename({{var, t}});
  Polynomial qs = q.rename({{var, s}}), qt = q.rename({{var, t}});
  Polynomial cayley = ps * qt - qs * pt;
  auto quotient = exact_divide(cayley, Polynomial::variable(s) - Polynomial::variable(t));
  if (!quotient) throw Error("bezout_matrix: Cayley quotient is not exact");
  Polynomial qq = quotient->embed({s, t});
  int si = qq.index_of(s), ti = qq.index_of(t);
  RationalMatrix b(n, n);
  for (const auto& [e, c] : qq.terms()) b(e[si], e[ti]) = c;
  return b;
}

inline RationalMatrix bezout_matrix(const Polynomial& p, const Polynomial& q) {
  auto up = p.used_variables(), uq = q.used_variables();
  up.insert(up.end(), uq.begin(), uq.end());
  up = canonical_variables(up);
  if (up.size() > 1) throw DomainError("bezout_matrix: inputs must share a single variable");
  if (up.empty()) throw DomainError("bezout_matrix: both inputs are constant");
  return bezout_matrix(p, q, up[0]);
}

/// Image of a parametrized line: det(x0 B(p1,p2) + x1 B(p2,p0) + x2 B(p0,p1)).
inline Polynomial line_image(const RationalMap& map) {
  if (map.arity != 1) throw DomainError("line_image expects a map from the line");
  const auto& p = map.p;
  int n = map.degree;
  PolyMatrix pencil = PolyMatrix::pencil(projective_variables(), {bezout_matrix(p[1], p[2], map.var, n),
                                                                   bezout_matrix(p[2], p[0], map.var, n),
                                                                   bezout_matrix(p[0], p[1], map.var, n)});
  Polynomial q = determinant(pencil);
  if (q.is_zero()) throw DegenerateMapError("line_image: the Bezout pencil is singular (degenerate map)");
  return q.embed(projective_variables()).normalized();
}

/// Affine form of a ternary form: x0 -> 1, x1 -> x, x2 -> y.
inline Polynomial dehomogenize(const Polynomial& q) {
  return q.substitute({{"x0", Polynomial::constant(1)}, {"x1", Polynomial::variable("x")}, {"x2", Polynomial::variable("y")}})
      .trimmed();
}

/// Ternary form of degree d from an affine polynomial in (x, y).
inline Polynomial homogenize_affine(const Polynomial& q, int degree = -1) {
  for (const auto& v : q.used_variables())
    if (v != "x" && v != "y") throw DomainError("homogenize_affine expects a polynomial in x, y");
  Polynomial r = q.rename({{"x", "x1"}, {"y", "x2"}});
  return r.homogenize("x0", degree).embed(projective_variables());
}

struct DetRep {
  RationalMatrix D0, D1, D2;

  DetRep() = default;
  DetRep(RationalMatrix a, RationalMatrix b, RationalMatrix c) : D0(std::move(a)), D1(std::move(b)), D2(std::move(c)) {
    if (!D0.square() || !(D0.rows() == D1.rows() && D1.rows() == D2.rows()) || !D1.square() || !D2.square() ||
        D0.rows() == 0)
      throw DomainError("DetRep matrices must be square and of equal size");
  }

  std::size_t m() const { return D0.rows(); }
  const RationalMatrix& operator[](int k) const { return k == 0 ? D0 : k == 1 ? D1 : D2; }
  DetRep transpose() const { return DetRep(D0.transpose(), D1.transpose(), D2.transpose()); }

  /// det(x0 D0 + x1 D1 + x2 D2).
  Polynomial delta() const {
    return determinant(PolyMatrix::pencil(projective_variables(), {D0, D1, D2})).embed(projective_variables());
  }
};

/// Determinant of the pencil equals the target up to a nonzero scalar. Affine
/// targets in (x, y) are homogenized with x0 to degree m.
inline bool detrep_verify(const DetRep& rep, const Polynomial& target) {
  Polynomial t = target;
  bool affine = false;
  for (const auto& v : target.used_variables()) affine = affine || v == "x" || v == "y";
  if (affine) t = homogenize_affine(target, static_cast<int>(rep.m()));
  if (t.is_zero()) return false;
  Polynomial d = rep.delta();
  if (d.is_zero()) return false;
  return proportional(d, t);
}

/// Exponent triples of the degree-d monomials in x0, x1, x2, ordered by
/// i1 + i2 ascending, then i1 descending.
inline std::vector<Exponents> slot_monomials(int d) {
  std::vector<Exponents> out;
  for (int s = 0; s <= d; ++s)
    for (int i1 = s; i1 >= 0; --i1) out.push_back({d - s, i1, s - i1});
  return out;
}

struct GeneralizedBezout {
  int n = 0;
  std::vector<Exponents> slots;
  RationalMatrix beta1, beta2, beta12;
};

namespace detail {

inline const std::vector<std::string>& doubled_variables() {
  static const std::vector<std::string> v = canonical_variables({"x0", "x1", "x2", "y0", "y1", "y2"});
  return v;
}

inline Polynomial in_y(const Polynomial& p) {
  return p.rename({{"x0", "y0"}, {"x1", "y1"}, {"x2", "y2"}}).embed(doubled_variables());
}

inline Polynomial slot_monomial(const Exponents& e, bool y) {
  Exponents f(6, 0);
  for (int k = 0; k < 3; ++k) f[(y ? 3 : 0) + k] = e[k];
  return Polynomial::monomial(1, doubled_variables(), f);
}

// brackets in column order beta12, beta1, beta2
inline const std::array<Polynomial, 3>& brackets() {
  static const std::array<Polynomial, 3> b = [] {
    auto v = [](const char* s) { return Polynomial::variable(s, doubled_variables()); };
    return std::array<Polynomial, 3>{v("x1") * v("y2") - v("x2") * v("y1"), v("x1") * v("y0") - v("x0") * v("y1"),
                                     v("x2") * v("y0") - v("x0") * v("y2")};
  }();
  return b;
}

struct ExpansionSystem {
  std::vector<Exponents> slots;
  std::vector<std::array<int, 3>> unknowns;  // (bracket, i, j) with i <= j
  std::map<Exponents, std::size_t, GrlexLess> rows;
  RationalMatrix matrix;
};

inline ExpansionSystem expansion_system(int n) {
  ExpansionSystem sys;
  sys.slots = slot_monomials(n - 1);
  int N = static_cast<int>(sys.slots.size());
  std::vector<Polynomial> columns;
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j) {
        Polynomial term = slot_monomial(sys.slots[i], false) * brackets()[b] * slot_monomial(sys.slots[j], true);
        if (i != j) term += slot_monomial(sys.slots[j], false) * brackets()[b] * slot_monomial(sys.slots[i], true);
        sys.unknowns.push_back({b, i, j});
        columns.push_back(term.embed(doubled_variables()));
      }
  // every bidegree (n, n) monomial gets a row
  auto left = slot_monomials(n);
  for (const auto& a : left)
    for (const auto& c : left) {
      Exponents e{a[0], a[1], a[2], c[0], c[1], c[2]};
      sys.rows.emplace(e, sys.rows.size());
    }
  sys.matrix = RationalMatrix(sys.rows.size(), columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [e, c] : columns[k].terms()) sys.matrix(sys.rows.at(e), k) = c;
  return sys;
}

inline std::array<RationalMatrix, 3> unpack(const ExpansionSystem& sys, const std::vector<Rational>& x) {
  std::size_t N = sys.slots.size();
  std::array<RationalMatrix, 3> m{RationalMatrix(N, N), RationalMatrix(N, N), RationalMatrix(N, N)};
  for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
    auto [b, i, j] = sys.unknowns[k];
    m[b](i, j) = x[k];
    m[b](j, i) = x[k];
  }
  return m;
}

inline Polynomial expansion(const GeneralizedBezout& g) {
  Polynomial total(doubled_variables());
  std::size_t N = g.slots.size();
  const RationalMatrix* mats[3] = {&g.beta12, &g.beta1, &g.beta2};
  for (int b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        const Rational& c = (*mats[b])(i, j);
        if (c == 0) continue;
        total += slot_monomial(g.slots[i], false) * brackets()[b] * slot_monomial(g.slots[j], true) * c;
      }
  return total;
}

inline Polynomial antisymmetrization(const Polynomial& p, const Polynomial& q) {
  Polynomial px = p.embed(doubled_variables()), qx = q.embed(doubled_variables());
  return px * in_y(q) - qx * in_y(p);
}

}  // namespace detail

/// Symmetric beta1, beta2, beta12 with
///   p(x)q(y) - q(x)p(y) = sum x^i [beta1 (x1y0-x0y1) + beta2 (x2y0-x0y2) + beta12 (x1y2-x2y1)]_{ij} y^j.
/// Solved by RREF over the unknowns (beta12, beta1, beta2 blocks, upper
/// triangles row by row); free unknowns are set to zero.
inline GeneralizedBezout generalized_bezout(const Polynomial& p, const Polynomial& q, int n = -1) {
  for (const auto* f : {&p, &q}) {
    for (const auto& v : f->used_variables())
      if (variable_rank(v) > 2) throw DomainError("generalized_bezout expects forms in x0, x1, x2");
    if (!f->is_homogeneous()) throw DomainError("generalized_bezout expects homogeneous inputs");
  }
  int d = std::max(p.total_degree(), q.total_degree());
  if (n < 0) n = d;
  if (n < 1) throw DomainError("generalized_bezout: degree must be positive");
  for (const auto* f : {&p, &q})
    if (!f->is_zero() && f->total_degree() != n) throw DomainError("generalized_bezout: inputs must have degree n");

  auto sys = detail::expansion_system(n);
  Polynomial target = detail::antisymmetrization(p, q);
  RationalMatrix aug(sys.matrix.rows(), sys.matrix.cols() + 1);
  for (std::size_t i = 0; i < sys.matrix.rows(); ++i)
    for (std::size_t j = 0; j < sys.matrix.cols(); ++j) aug(i, j) = sys.matrix(i, j);
  std::size_t rhs = sys.matrix.cols();
  for (const auto& [e, c] : target.terms()) aug(sys.rows.at(e), rhs) = c;
  std::vector<std::size_t> piv;
  RationalMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == rhs) throw Error("generalized_bezout: inconsistent expansion system");
  std::vector<Rational> x(rhs, Rational(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, rhs);
  auto mats = detail::unpack(sys, x);

  GeneralizedBezout g{n, sys.slots, mats[1], mats[2], mats[0]};
  if (detail::expansion(g) != target) throw Error("generalized_bezout: expansion identity failed");
  return g;
}

/// Basis of the solution space of the homogeneous expansion system, as
/// (beta12, beta1, beta2) triples: adding any of them preserves the identity.
inline std::vector<GeneralizedBezout> generalized_bezout_syzygies(int n) {
  auto sys = detail::expansion_system(n);
  std::vector<GeneralizedBezout> out;
  for (const auto& v : kernel_basis(sys.matrix)) {
    auto mats = detail::unpack(sys, v);
    out.push_back({n, sys.slots, mats[1], mats[2], mats[0]});
  }
  return out;
}

/// Checks the expansion identity for (p, q).
inline bool generalized_bezout_identity_holds(const GeneralizedBezout& g, const Polynomial& p, const Polynomial& q) {
  return detail::expansion(g) == detail::antisymmetrization(p, q);
}

struct PrincipalSubspace {
  int n = 0;
  std::size_t m = 0;
  std::vector<Exponents> slots;
  std::vector<std::vector<Rational>> basis;  // vectors of length m * slots.size(), slot-major

  RationalMatrix matrix() const { return RationalMatrix::from_columns(basis, m * slots.size()); }
};

/// Stacked system D0 v(i1,i2) + D1 v(i1+1,i2) + D2 v(i1,i2+1) = 0 over i1 + i2 <= n - 2.
inline RationalMatrix principal_constraints(const DetRep& rep, int n) {
  auto slots = slot_monomials(n - 1);
  std::size_t m = rep.m(), N = slots.size();
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t k = 0; k < N; ++k) index[{slots[k][1], slots[k][2]}] = k;
  std::size_t blocks = 0;
  for (const auto& s : slots) blocks += (s[1] + s[2] <= n - 2);
  RationalMatrix c(blocks * m, N * m);
  std::size_t block = 0;
  for (const auto& s : slots) {
    int i1 = s[1], i2 = s[2];
    if (i1 + i2 > n - 2) continue;
    std::pair<int, int> where[3] = {{i1, i2}, {i1 + 1, i2}, {i1, i2 + 1}};
    for (int k = 0; k < 3; ++k) {
      std::size_t col = index.at(where[k]) * m;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) c(block * m + a, col + b) += rep[k](a, b);
    }
    ++block;
  }
  return c;
}

inline PrincipalSubspace principal_subspace(const DetRep& rep, int n) {
  if (n < 1) throw DomainError("principal_subspace: n must be positive");
  PrincipalSubspace ps{n, rep.m(), slot_monomials(n - 1), {}};
  std::size_t dim = rep.m() * ps.slots.size();
  if (n == 1) {
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<Rational> e(dim, Rational(0));
      e[k] = 1;
      ps.basis.push_back(std::move(e));
    }
    return ps;
  }
  ps.basis = kernel_basis(principal_constraints(rep, n));
  return ps;
}

/// Big Bezout matrix of a pair on the slot space:
/// beta12 (x) D0 + beta2 (x) D1 - beta1 (x) D2.
inline RationalMatrix calibrated_pencil_block(const GeneralizedBezout& g, const DetRep& rep) {
  return kron(g.beta12, rep.D0) + kron(g.beta2, rep.D1) - kron(g.beta1, rep.D2);
}

namespace detail {

inline Polynomial restricted_pencil_determinant(const DetRep& rep, int n, const std::array<RationalMatrix, 3>& blocks) {
  RationalMatrix V = principal_subspace(rep, n).matrix();
  RationalMatrix L = principal_subspace(rep.transpose(), n).matrix();
  if (V.cols() != L.cols())
    throw DegenerateMapError("curve image: left and right principal subspaces differ in dimension");
  if (V.cols() == 0) throw DegenerateMapError("curve image: principal subspace is trivial");
  RationalMatrix Lt = L.transpose();
  std::vector<RationalMatrix> restricted;
  for (const auto& b : blocks) restricted.push_back(Lt * b * V);
  Polynomial q = determinant(PolyMatrix::pencil(projective_variables(), restricted));
  if (q.is_zero()) throw DegenerateMapError("curve image: restricted pencil is singular");
  return q.embed(projective_variables()).normalized();
}

// Binary forms in (x0, x1) sharing a projective root.
inline bool binary_forms_share_root(const std::vector<Polynomial>& forms) {
  std::vector<Polynomial> live;
  for (const auto& f : forms)
    if (!f.is_zero()) live.push_back(f.embed({"x0", "x1"}));
  if (live.empty()) return true;
  bool at_infinity = true;
  for (const auto& f : live) {
    int d = f.total_degree();
    Exponents top = {0, d};
    at_infinity = at_infinity && f.coefficient(top) == 0;
  }
  if (at_infinity) return true;
  DensePoly g;
  for (const auto& f : live) g = DensePoly::gcd(g, DensePoly::from(f.evaluate("x0", 1).trimmed(), "x1"));
  return g.degree() > 0;
}

}  // namespace detail

/// True when a common zero of p0, p1, p2 lies on delta = 0. Uses resultants
/// after projecting from three generic centers; a common point must survive
/// every projection.
inline bool basepoint_on_curve(const Polynomial& delta, const RationalMap& map) {
  static const int centers[][2] = {{1, 2}, {2, -1}, {-3, 1}, {1, 5}, {4, 3}, {-2, -5}, {5, -3}, {3, 7}, {-7, 2}};
  int tried = 0;
  for (const auto& c : centers) {
    std::map<std::string, Polynomial> shift{
        {"x0", Polynomial::variable("x0") + Polynomial::variable("x2") * Rational(c[0])},
        {"x1", Polynomial::variable("x1") + Polynomial::variable("x2") * Rational(c[1])}};
    Polynomial d = delta.substitute(shift);
    if (d.coefficient(Exponents{0, 0, d.total_degree()}) == 0) continue;
    std::vector<Polynomial> res;
    for (const auto& p : map.p) {
      if (p.is_zero()) continue;
      Polynomial ps = p.substitute(shift).embed(projective_variables());
      res.push_back(ps.degree_in("x2") > 0 || d.degree_in("x2") > 0 ? resultant_wrt(d, ps, "x2") : ps);
    }
    if (!detail::binary_forms_share_root(res)) return false;
    if (++tried == 3) return true;
  }
  return tried > 0;
}

/// Image of the curve det(x0 D0 + x1 D1 + x2 D2) = 0 under a plane map.
inline Polynomial curve_image(const DetRep& rep, const RationalMap& map) {
  if (map.arity != 3) throw DomainError("curve_image expects a plane map");
  if (basepoint_on_curve(rep.delta(), map))
    throw BasepointOnCurveError(
        "curve_image: a basepoint of the map lies on the curve; restricting the generalized Bezout matrices "
        "for this case is not implemented");
  const auto& p = map.p;
  int n = map.degree;
  std::array<RationalMatrix, 3> blocks{calibrated_pencil_block(generalized_bezout(p[1], p[2], n), rep),
                                       calibrated_pencil_block(generalized_bezout(p[2], p[0], n), rep),
                                       calibrated_pencil_block(generalized_bezout(p[0], p[1], n), rep)};
  return detail::restricted_pencil_determinant(rep, n, blocks);
}

/// Same determinant with caller-supplied generalized Bezout triples for
/// (p1,p2), (p2,p0), (p0,p1); no basepoint check.
inline Polynomial curve_image_with(const DetRep& rep, int n, const std::array<GeneralizedBezout, 3>& pairs) {
  std::array<RationalMatrix, 3> blocks{calibrated_pencil_block(pairs[0], rep), calibrated_pencil_block(pairs[1], rep),
                                       calibrated_pencil_block(pairs[2], rep)};
  return detail::restricted_pencil_determinant(rep, n, blocks);
}

/// Image under (x1x2, x0x2, x0x1) through the block pencil diag(-x0 D0, -x1 D1, -x2 D2).
inline Polynomial inversion_image(const DetRep& rep) {
  for (int k = 0; k < 3; ++k)
    if (rep[k].determinant() == 0)
      throw BasepointOnCurveError("inversion_image: coordinate point " + std::to_string(k) +
                                  " lies on the curve; restricting the generalized Bezout matrices for this case "
                                  "is not implemented");
  std::array<RationalMatrix, 3> blocks;
  for (int k = 0; k < 3; ++k) {
    RationalMatrix e(3, 3);
    e(k, k) = -1;
    blocks[k] = kron(e, rep[k]);
  }
  return detail::restricted_pencil_determinant(rep, 2, blocks);
}

/// Independent check of an image polynomial. Line maps: candidate(p0,p1,p2)
/// vanishes identically. Plane maps: curve divides candidate(p0,p1,p2).
inline bool image_oracle(const RationalMap& map, const std::optional<Polynomial>& curve, const Polynomial& candidate) {
  if (candidate.is_zero()) throw DomainError("image_oracle: zero candidate is degenerate");
  if (!candidate.is_homogeneous()) throw DomainError("image_oracle: candidate must be homogeneous");
  Polynomial composed =
      candidate.embed(projective_variables()).substitute({{"x0", map.p[0]}, {"x1", map.p[1]}, {"x2", map.p[2]}});
  if (map.arity == 1) return composed.is_zero();
  if (!curve) throw DomainError("image_oracle: plane maps need the source curve");
  return exact_divide(composed, *curve).has_value();
}

}  // namespace curvetwist
