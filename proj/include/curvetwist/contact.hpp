#pragma once

// Contact order of the two image branches through the image of the origin,
// via the D_i / E_i recursion on the coordinate axes.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvetwist/univariate.hpp"

namespace curvetwist {

/// num/den with den nonzero. Reduction is by univariate gcd when only one
/// variable occurs, otherwise by monomial content and exact division.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::constant(0)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    reduce();
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const {
    if (!is_constant()) throw DomainError("rational function is not constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  RationalFunction derivative(const std::string& v) const {
    return {num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_};
  }

  /// Throws DomainError when the denominator vanishes there.
  RationalFunction evaluate(const std::string& v, const Rational& value) const {
    Polynomial d = den_.evaluate(v, value);
    if (d.is_zero()) throw DomainError("rational function: denominator vanishes at " + v + " = " + value.get_str());
    return {num_.evaluate(v, value), d};
  }

  /// Replaces v by a rational function of other variables.
  RationalFunction substitute(const std::string& v, const RationalFunction& value) const {
    return RationalFunction(substitute_poly(num_, v, value)) / RationalFunction(substitute_poly(den_, v, value));
  }

  RationalFunction substitute_values(const std::map<std::string, Rational>& values) const {
    RationalFunction r = *this;
    for (const auto& [v, c] : values) r = r.evaluate(v, c);
    return r;
  }

  std::string to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static RationalFunction substitute_poly(const Polynomial& p, const std::string& v, const RationalFunction& value) {
    auto cs = p.coefficients_in(v);
    RationalFunction acc;
    for (auto k = cs.size(); k-- > 0;) acc = acc * value + RationalFunction(cs[k]);
    return acc;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    auto vars = Polynomial::merged_variables(num_, den_);
    num_ = num_.embed(vars);
    den_ = den_.embed(vars);
    std::vector<std::string> used = num_.used_variables();
    for (const auto& u : den_.used_variables())
      if (std::find(used.begin(), used.end(), u) == used.end()) used.push_back(u);
    if (used.size() == 1) {
      DensePoly n = DensePoly::from(num_.trimmed(), used[0]), d = DensePoly::from(den_.trimmed(), used[0]);
      DensePoly g = DensePoly::gcd(n, d);
      if (g.degree() > 0) {
        num_ = exact_quotient(n, g).to_polynomial(used[0]);
        den_ = exact_quotient(d, g).to_polynomial(used[0]);
      }
    } else if (!used.empty()) {
      Exponents a = num_.monomial_content(), b = den_.monomial_content();
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::min(a[i], b[i]);
      num_ = num_.divide_monomial(a);
      den_ = den_.divide_monomial(a);
      if (!den_.is_constant())
        if (auto q = exact_divide(num_, den_)) {
          num_ = *q;
          den_ = Polynomial::constant(1);
        }
    }
    Rational lc = den_.leading_coefficient();
    num_ *= 1 / lc;
    den_ *= 1 / lc;
    num_ = num_.trimmed();
    den_ = den_.trimmed();
  }

  Polynomial num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

/// a = c * m * b for a nonzero rational c and a Laurent monomial m.
inline bool proportional_up_to_monomials(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Polynomial l = a.numerator() * b.denominator(), r = b.numerator() * a.denominator();
  auto vars = Polynomial::merged_variables(l, r);
  l = l.embed(vars);
  r = r.embed(vars);
  return proportional(l.divide_monomial(l.monomial_content()), r.divide_monomial(r.monomial_content()));
}

enum class Branch { X, Y };

inline const char* branch_name(Branch b) { return b == Branch::X ? "x" : "y"; }

/// Affine degree-2 map (p0, p1, p2) in x, y; further variables are symbolic
/// coefficients.
struct AffineMap {
  std::array<Polynomial, 3> p;
  AffineMap scaled(const Rational& lambda) const {
    AffineMap m = *this;
    for (auto& q : m.p) q *= lambda;
    return m;
  }
};

/// D_1..D_depth at 0 on the x-axis branch, E_1..E_depth on the y-axis branch.
/// D_1 = r2'/r1', D_n = D_{n-1}'/r1'; E is the same recursion along y.
inline std::vector<RationalFunction> contact_sequence(const AffineMap& map, Branch branch, int depth = 3) {
  if (depth < 1 || depth > 3) throw DomainError("contact_sequence: depth must be 1..3");
  const std::string v = branch == Branch::X ? "x" : "y";
  const std::string other = branch == Branch::X ? "y" : "x";
  std::array<Polynomial, 3> q;
  for (int k = 0; k < 3; ++k) q[k] = map.p[k].evaluate(other, 0);
  if (q[0].evaluate(v, 0).is_zero()) throw DomainError("contact_sequence: p0 vanishes at the origin");
  // r_k' = W_k / p0^2 with W_k = p_k' p0 - p_k p0'
  auto wronskian = [&](int k) { return q[k].derivative(v) * q[0] - q[k] * q[0].derivative(v); };
  Polynomial w1 = wronskian(1), w2 = wronskian(2);
  if (w1.evaluate(v, 0).is_zero())
    throw DomainError(std::string("contact_sequence: r1' vanishes at 0 on the ") + branch_name(branch) + "-axis branch");
  RationalFunction inv_r1p(q[0] * q[0], w1);
  RationalFunction d(w2, w1);
  std::vector<RationalFunction> out{d.evaluate(v, 0)};
  for (int n = 2; n <= depth; ++n) {
    d = d.derivative(v) * inv_r1p;
    out.push_back(d.evaluate(v, 0));
  }
  return out;
}

struct ContactReport {
  std::vector<Rational> d, e;  // D_i(0), E_i(0)
  int multiplicity = 0;
  int first_difference = 0;  // 1-based; 0 when all agree
};

inline std::vector<Rational> constant_values(const std::vector<RationalFunction>& s) {
  std::vector<Rational> out;
  for (const auto& f : s) out.push_back(f.constant_value());
  return out;
}

/// Multiplicity is the first index i with D_i(0) != E_i(0), and 4 when the
/// sequences agree through depth 3.
inline ContactReport contact_report(const AffineMap& map) {
  for (const auto& p : map.p)
    for (const auto& u : p.used_variables())
      if (u != "x" && u != "y") throw DomainError("contact_report: map has symbolic coefficient " + u);
  ContactReport r;
  r.d = constant_values(contact_sequence(map, Branch::X));
  r.e = constant_values(contact_sequence(map, Branch::Y));
  r.multiplicity = 4;
  for (std::size_t i = 0; i < r.d.size(); ++i)
    if (r.d[i] != r.e[i]) {
      r.first_difference = static_cast<int>(i) + 1;
      r.multiplicity = r.first_difference;
      break;
    }
  return r;
}

inline int intersection_multiplicity_origin(const AffineMap& map) { return contact_report(map).multiplicity; }

// ---------------------------------------------------------------------------
// Symbolic degree-2 conditions

inline const std::vector<std::string>& degree2_symbols() {
  static const std::vector<std::string> s = {"a10", "a01", "a20", "a02", "b10", "b01",
                                             "b20", "b02", "g10", "g01", "g20", "g02"};
  return s;
}

/// p0 = 1 + a10 x + a01 y + a20 x^2 + a02 y^2, p1 and p2 likewise with b, g
/// and no constant term.
inline AffineMap degree2_generic_map() {
  std::vector<std::string> vars = degree2_symbols();
  vars.push_back("x");
  vars.push_back("y");
  auto P = [&](const std::string& c) {
    return Polynomial::variable(c + "10") * Polynomial::variable("x") + Polynomial::variable(c + "01") * Polynomial::variable("y") +
           Polynomial::variable(c + "20") * Polynomial::variable("x").pow(2) +
           Polynomial::variable(c + "02") * Polynomial::variable("y").pow(2);
  };
  return {{P("a") + Rational(1), P("b"), P("g")}};
}

/// Values of the twelve symbols for a concrete map normalized to p0(0,0) = 1.
/// Requires p1(0,0) = p2(0,0) = 0 and no mixed xy terms.
inline std::map<std::string, Rational> degree2_coefficients(const AffineMap& map) {
  Rational c0 = map.p[0].evaluate_all({{"x", 0}, {"y", 0}});
  if (c0 == 0) throw DomainError("degree2_coefficients: p0 vanishes at the origin");
  std::map<std::string, Rational> out;
  const char* letters[] = {"a", "b", "g"};
  for (int k = 0; k < 3; ++k) {
    Polynomial p = map.p[k].embed({"x", "y"});
    for (const auto& [e, c] : p.terms()) {
      bool known = (e[0] + e[1] == 0 && k == 0) || (e[0] == 0 && (e[1] == 1 || e[1] == 2)) ||
                   (e[1] == 0 && (e[0] == 1 || e[0] == 2));
      if (!known) throw DomainError("degree2_coefficients: unsupported term in " + map.p[k].to_string());
    }
    for (const auto& [ex, ey] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 0}, {0, 2}})
      out[std::string(letters[k]) + std::to_string(ex) + std::to_string(ey)] = p.coefficient({ex, ey}) / c0;
  }
  return out;
}

/// Linear in v: a*v + b = 0 gives v = -b/a.
inline RationalFunction solve_linear(const RationalFunction& eq, const std::string& v) {
  auto cs = eq.numerator().coefficients_in(v);
  if (cs.size() != 2 || cs[1].is_zero()) throw DomainError("solve_linear: expression is not linear in " + v);
  return RationalFunction(-cs[0], cs[1]);
}

struct SymbolicConditions {
  std::array<RationalFunction, 3> differences;  // D_i(0) - E_i(0)
  std::array<Polynomial, 3> numerators;
  /// differences[i] with g01 eliminated through condition 1 (i >= 1) and g02
  /// through the reduced condition 2 (i = 2).
  std::array<RationalFunction, 3> reduced;
  RationalFunction g01, g02;  // the eliminating substitutions
};

inline SymbolicConditions symbolic_conditions_degree2() {
  AffineMap m = degree2_generic_map();
  auto d = contact_sequence(m, Branch::X), e = contact_sequence(m, Branch::Y);
  SymbolicConditions s;
  for (int i = 0; i < 3; ++i) {
    s.differences[i] = d[i] - e[i];
    s.numerators[i] = s.differences[i].numerator();
  }
  s.g01 = solve_linear(s.differences[0], "g01");
  s.reduced[0] = s.differences[0];
  s.reduced[1] = s.differences[1].substitute("g01", s.g01);
  s.g02 = solve_linear(s.reduced[1], "g02");
  s.reduced[2] = s.differences[2].substitute("g01", s.g01).substitute("g02", s.g02);
  return s;
}

/// Applies the same eliminations to an externally given expression of level i.
inline RationalFunction reduce_like(const SymbolicConditions& s, const RationalFunction& f, int level) {
  RationalFunction r = f;
  if (level >= 1) r = r.substitute("g01", s.g01);
  if (level >= 2) r = r.substitute("g02", s.g02);
  return r;
}

}  // namespace curvetwist
