#pragma once

// Dense univariate polynomials over the rationals: gcd, squarefree
// decomposition, Sturm sequences.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvetwist/polynomial.hpp"

namespace curvetwist {

class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DensePoly monomial(const Rational& c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return DensePoly(std::move(v));
  }

  /// From a polynomial whose only variable (if any) is `var`.
  static DensePoly from(const Polynomial& p, const std::string& var) {
    auto used = p.used_variables();
    for (const auto& u : used)
      if (u != var) throw DomainError("expected a univariate polynomial in " + var + ", got " + p.to_string());
    int i = p.index_of(var);
    std::vector<Rational> v(std::max(p.degree_in(var), 0) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) v[i < 0 ? 0 : e[i]] = c;
    return DensePoly(std::move(v));
  }

  /// Infers the variable; constants are accepted.
  static DensePoly from(const Polynomial& p) {
    auto used = p.used_variables();
    if (used.size() > 1) throw DomainError("expected a univariate polynomial, got " + p.to_string());
    return from(p, used.empty() ? std::string("x") : used[0]);
  }

  Polynomial to_polynomial(const std::string& var) const {
    Polynomial out = Polynomial::constant(0, {var});
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (c_[k] != 0) out += Polynomial::monomial(c_[k], {var}, {static_cast<int>(k)});
    return out;
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

  DensePoly monic() const {
    if (is_zero()) return *this;
    DensePoly out = *this;
    Rational l = lead();
    for (auto& x : out.c_) x /= l;
    return out;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return DensePoly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
    return DensePoly(std::move(v));
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return DensePoly(std::move(v));
  }
  friend DensePoly operator-(const DensePoly& a) {
    DensePoly out = a;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return DensePoly(std::move(v));
  }
  friend DensePoly operator*(const Rational& s, const DensePoly& a) {
    DensePoly out = a;
    for (auto& x : out.c_) x *= s;
    out.trim();
    return out;
  }
  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {DensePoly(), a};
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (int k = a.degree(); k >= db; --k) {
      if (r[k] == 0) continue;
      Rational f = r[k] / b.lead();
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    return {DensePoly(std::move(q)), DensePoly(std::move(r))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static DensePoly gcd(DensePoly a, DensePoly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "x") const { return to_polynomial(var).to_string(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // low degree first
};

inline DensePoly exact_quotient(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = DensePoly::divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_quotient: remainder is nonzero");
  return q;
}

struct SquarefreeFactor {
  DensePoly factor;  // monic
  int multiplicity;
};

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime.
inline std::vector<SquarefreeFactor> squarefree_decompose(const DensePoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_decompose: zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  DensePoly f = p.monic();
  DensePoly fp = f.derivative();
  DensePoly a = DensePoly::gcd(f, fp);
  DensePoly b = exact_quotient(f, a);
  DensePoly c = exact_quotient(fp, a);
  DensePoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    DensePoly g = DensePoly::gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return out;
}

inline std::vector<SquarefreeFactor> squarefree_decompose(const Polynomial& p) {
  return squarefree_decompose(DensePoly::from(p));
}

/// Monic squarefree part p / gcd(p, p').
inline DensePoly squarefree_part(const DensePoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_part: zero polynomial");
  if (p.degree() == 0) return DensePoly({Rational(1)});
  return exact_quotient(p.monic(), DensePoly::gcd(p, p.derivative()));
}

inline bool is_squarefree(const DensePoly& p) { return DensePoly::gcd(p, p.derivative()).degree() <= 0; }

inline std::vector<DensePoly> sturm_sequence(const DensePoly& p) {
  std::vector<DensePoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = DensePoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace detail {

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// +1 at +infinity, -1 at -infinity
inline int variations_at_infinity(const std::vector<DensePoly>& seq, int direction) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int lead = sgn(q.lead());
    s.push_back((direction < 0 && q.degree() % 2 == 1) ? -lead : lead);
  }
  return sign_changes(s);
}

inline int variations_at(const std::vector<DensePoly>& seq, const Rational& x) {
  std::vector<int> s;
  for (const auto& q : seq) s.push_back(sgn(q(x)));
  return sign_changes(s);
}

}  // namespace detail

/// Interval endpoint; nullopt means infinite.
struct RealInterval {
  std::optional<Rational> lo, hi;
};

/// Number of distinct real roots in (lo, hi]; whole real line by default.
inline int real_root_count(const DensePoly& p, const RealInterval& interval = {}) {
  if (p.is_zero()) throw DomainError("real_root_count: zero polynomial");
  if (!is_squarefree(p)) throw DomainError("real_root_count: input must be squarefree");
  if (p.degree() == 0) return 0;
  auto seq = sturm_sequence(p);
  int at_lo = interval.lo ? detail::variations_at(seq, *interval.lo) : detail::variations_at_infinity(seq, -1);
  int at_hi = interval.hi ? detail::variations_at(seq, *interval.hi) : detail::variations_at_infinity(seq, +1);
  return at_lo - at_hi;
}

inline int real_root_count(const Polynomial& p, const RealInterval& interval = {}) {
  return real_root_count(DensePoly::from(p), interval);
}

/// Cauchy bound: every root has |x| < bound.
inline Rational root_bound(const DensePoly& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max<Rational>(m, abs(p.coeff(k) / p.lead()));
  return m + 1;
}

/// Disjoint intervals (lo, hi], each holding exactly one real root of the
/// squarefree p, in increasing order, with hi - lo <= width when width > 0.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const DensePoly& p, const Rational& width = 0) {
  if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  if (!is_squarefree(p)) throw DomainError("isolate_real_roots: input must be squarefree");
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() == 0) return out;
  auto seq = sturm_sequence(p);
  auto count = [&](const Rational& lo, const Rational& hi) {
    return detail::variations_at(seq, lo) - detail::variations_at(seq, hi);
  };
  Rational b = root_bound(p);
  std::vector<std::pair<Rational, Rational>> todo{{-b, b}};
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    int c = count(lo, hi);
    if (c == 0) continue;
    if (c == 1 && (width <= 0 || hi - lo <= width)) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    todo.emplace_back(mid, hi);
    todo.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace curvetwist
