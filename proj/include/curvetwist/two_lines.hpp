#pragma once

// Global type of the image of two lines under a degree-2 map: the two image
// conics, their intersection multiplicities, and the seven-case enumeration.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvetwist/bezout.hpp"
#include "curvetwist/contact.hpp"
#include "curvetwist/fixtures.hpp"
#include "curvetwist/resultant.hpp"

namespace curvetwist {

struct RealIntersection {
  double x = 0, y = 0;
  std::optional<Rational> exact_x, exact_y;
  int multiplicity = 0;
  bool at_infinity = false;
  DensePoly factor;  // squarefree factor of the dehomogenized resultant (sheared x)
  std::pair<Rational, Rational> interval;
};

struct TwoLinesClassification {
  int case_id = 0;
  std::array<Polynomial, 2> conics;  // images of the x- and y-axis, ternary forms
  int shear = 0;                     // x -> x + shear * y before eliminating y
  Polynomial resultant;              // binary quartic in x0, x1
  std::vector<RealIntersection> real_points;
  std::vector<int> complex_multiplicities;  // one entry per non-real point
  int origin_multiplicity = 0;              // from the resultant
  int origin_multiplicity_contact = 0;      // from the D/E recursion
  std::string reference_table;
  std::vector<std::string> reference_variants;
  Factorization reference;

  bool origin_consistent() const { return origin_multiplicity == origin_multiplicity_contact; }
  std::vector<int> real_multiplicities() const {
    std::vector<int> m;
    for (const auto& p : real_points) m.push_back(p.multiplicity);
    std::sort(m.begin(), m.end());
    return m;
  }
};

/// Real-point multiplicity multiset (sorted) to case 1..7; 0 if not enumerated.
inline int case_from_real_multiplicities(std::vector<int> m) {
  std::sort(m.begin(), m.end());
  static const std::map<std::vector<int>, int> cases = {
      {{1, 1, 1, 1}, 1}, {{1, 1, 2}, 2}, {{2, 2}, 3}, {{1, 3}, 4}, {{4}, 5}, {{1, 1}, 6}, {{2}, 7}};
  auto it = cases.find(m);
  return it == cases.end() ? 0 : it->second;
}

/// Appendix tables for each case; the first entry is the representative.
inline std::vector<std::string> reference_tables_for_case(int c) {
  switch (c) {
    case 1: return {"4m1"};
    case 2: return {"2m1,1m2"};
    case 3: return {"2m2"};
    case 4: return {"1m1,1m3"};
    case 5: return {"1m4"};
    case 6: return {"2m1"};
    case 7: return {"1m2-a", "1m2-b"};
  }
  throw DomainError("no reference factorization for case " + std::to_string(c));
}

namespace detail {

inline RationalMatrix conic_matrix(const Polynomial& c) {
  const auto& v = projective_variables();
  Polynomial q = c.embed(v);
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponents e{0, 0, 0};
      ++e[i];
      ++e[j];
      Rational coef = q.coefficient(e);
      m(i, j) = i == j ? coef : coef / 2;
    }
  return m;
}

inline Polynomial shear_x1(const Polynomial& c, int k) {
  return c.substitute({{"x1", Polynomial::variable("x1") + Polynomial::variable("x2") * Rational(k)}}).embed(projective_variables());
}

inline std::vector<int> shear_sequence(int count) {
  std::vector<int> ks{0};
  for (int k = 1; static_cast<int>(ks.size()) < count; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

inline DensePoly at_x0_one(const Polynomial& binary) {
  return DensePoly::from(binary.evaluate("x0", 1).evaluate("x2", 0).trimmed(), "x1");
}

inline double approx(const Rational& r) { return r.get_d(); }

}  // namespace detail

/// Throws DomainError on degenerate or coincident conics and on multiplicity
/// patterns outside the enumeration.
inline TwoLinesClassification classify_two_lines(const AffineMap& map) {
  TwoLinesClassification out;
  out.conics[0] = line_image(RationalMap::axis_restriction(map.p, 'x', 2));
  out.conics[1] = line_image(RationalMap::axis_restriction(map.p, 'y', 2));
  for (const auto& c : out.conics)
    if (c.total_degree() != 2 || detail::conic_matrix(c).determinant() == 0)
      throw DomainError("classify_two_lines: degenerate image conic " + c.to_string());
  if (proportional(out.conics[0], out.conics[1])) throw DomainError("classify_two_lines: the image conics coincide");

  std::optional<int> chosen;
  Polynomial a, b, sub1, sub0;
  for (int k : detail::shear_sequence(41)) {
    a = detail::shear_x1(out.conics[0], k);
    b = detail::shear_x1(out.conics[1], k);
    auto ca = a.coefficients_in("x2"), cb = b.coefficients_in("x2");
    if (ca.size() != 3 || cb.size() != 3 || ca[2].is_zero() || cb[2].is_zero()) continue;
    Polynomial r = resultant_wrt(a, b, "x2").embed(projective_variables());
    if (r.is_zero()) throw DomainError("classify_two_lines: conics share a component");
    // first subresultant: a common root in x2 is unique where a2 b1 - a1 b2 != 0
    sub1 = (ca[2] * cb[1] - ca[1] * cb[2]).embed(projective_variables());
    sub0 = (ca[2] * cb[0] - ca[0] * cb[2]).embed(projective_variables());
    DensePoly rr = detail::at_x0_one(r), s1 = detail::at_x0_one(sub1);
    if (DensePoly::gcd(squarefree_part(rr), s1).degree() > 0) continue;
    if (rr.degree() < 4 && sub1.evaluate_all({{"x0", 0}, {"x1", 1}, {"x2", 0}}) == 0) continue;
    chosen = k;
    out.resultant = r;
    break;
  }
  if (!chosen) throw DomainError("classify_two_lines: no admissible shear found");
  out.shear = *chosen;

  DensePoly rr = detail::at_x0_one(out.resultant);
  // the origin is (1:0:0) in sheared coordinates too; keep it as its own factor
  std::vector<SquarefreeFactor> factors;
  for (const auto& f : squarefree_decompose(rr)) {
    if (f.factor(Rational(0)) == 0) {
      DensePoly x1 = DensePoly::monomial(1, 1);
      factors.push_back({x1, f.multiplicity});
      out.origin_multiplicity = f.multiplicity;
      DensePoly rest = exact_quotient(f.factor, x1);
      if (rest.degree() > 0) factors.push_back({rest, f.multiplicity});
    } else {
      factors.push_back(f);
    }
  }
  int finite = 0;
  for (const auto& f : factors) {
    finite += f.factor.degree() * f.multiplicity;
    auto roots = isolate_real_roots(f.factor, Rational(1, 1 << 30));
    for (const auto& iv : roots) {
      RealIntersection p;
      p.multiplicity = f.multiplicity;
      p.factor = f.factor;
      p.interval = iv;
      Rational u = (iv.first + iv.second) / 2;
      if (f.factor.degree() == 1) u = -f.factor.coeff(0) / f.factor.coeff(1);
      std::map<std::string, Rational> at{{"x0", 1}, {"x1", u}, {"x2", 0}};
      Rational v = -sub0.evaluate_all(at) / sub1.evaluate_all(at);
      if (f.factor.degree() == 1) {
        p.exact_x = u + out.shear * v;
        p.exact_y = v;
      }
      p.x = detail::approx(u + out.shear * v);
      p.y = detail::approx(v);
      out.real_points.push_back(std::move(p));
    }
    for (int c = f.factor.degree() - static_cast<int>(roots.size()); c > 0; --c)
      out.complex_multiplicities.push_back(f.multiplicity);
  }
  if (finite < 4) {
    // roots at x0 = 0 lie on a real projection line; uniqueness makes the point real
    RealIntersection p;
    p.multiplicity = 4 - finite;
    p.at_infinity = true;
    p.x = p.y = std::nan("");
    out.real_points.push_back(p);
  }
  out.case_id = case_from_real_multiplicities(out.real_multiplicities());
  if (out.case_id == 0) {
    std::string m;
    for (int x : out.real_multiplicities()) m += std::to_string(x) + " ";
    throw DomainError("classify_two_lines: real multiplicities { " + m + "} are outside the enumeration");
  }
  out.origin_multiplicity_contact = intersection_multiplicity_origin(map);
  out.reference_variants = reference_tables_for_case(out.case_id);
  out.reference_table = out.reference_variants.front();
  out.reference = fixtures::tables().at(out.reference_table).factorization;
  return out;
}

}  // namespace curvetwist
