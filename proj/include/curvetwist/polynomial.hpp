#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Every polynomial carries its own ordered variable list. Variable lists are
// kept in one canonical order (x0, x1, x2, x, y, t, then any other symbol
// alphabetically), so two polynomials over the same symbols always agree on
// exponent layout and print identically. Terms are ordered graded
// lexicographically; the leading term is the grlex-largest one.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvetwist/error.hpp"

namespace curvetwist {

using Rational = mpq_class;
using Exponents = std::vector<int>;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(start, s.size())) throw ParseError("bad rational literal '" + s + "'");
  } else if (!digits_ok(start, slash) || !digits_ok(slash + 1, s.size())) {
    throw ParseError("bad rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int variable_rank(std::string_view v) {
  static constexpr std::string_view known[] = {"x0", "x1", "x2", "x", "y", "t"};
  for (int i = 0; i < 6; ++i)
    if (v == known[i]) return i;
  return 100;
}

inline bool variable_less(const std::string& a, const std::string& b) {
  int ra = variable_rank(a), rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

inline std::vector<std::string> canonical_variables(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), variable_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Ascending graded lexicographic order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(canonical_variables(std::move(vars))) {}

  static Polynomial constant(const Rational& c, std::vector<std::string> vars = {}) {
    Polynomial p(std::move(vars));
    if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }

  static Polynomial variable(const std::string& name, std::vector<std::string> vars = {}) {
    vars.push_back(name);
    Polynomial p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_[e] = 1;
    return p;
  }

  static Polynomial monomial(const Rational& c, const std::vector<std::string>& vars, Exponents e) {
    Polynomial p(vars);
    if (p.vars_ != vars) throw DomainError("monomial: variable list must be canonical");
    if (e.size() != vars.size()) throw DomainError("monomial: exponent length mismatch");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
  }

  static Polynomial parse(std::string_view text);
  static Polynomial parse(std::string_view text, const std::vector<std::string>& allowed);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && curvetwist::total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_value() const {
    if (!is_constant()) throw DomainError("constant_value: polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }
  Rational constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool has_variable(const std::string& v) const {
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
  }
  int index_of(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return -1;
    return static_cast<int>(it - vars_.begin());
  }

  /// Variables that actually occur with positive exponent.
  std::vector<std::string> used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (const auto& [e, c] : terms_)
        if (e[i] > 0) {
          out.push_back(vars_[i]);
          break;
        }
    return out;
  }

  int total_degree() const {
    if (is_zero()) return -1;
    return curvetwist::total_degree(terms_.rbegin()->first);
  }

  int degree_in(const std::string& v) const {
    if (is_zero()) return -1;
    int i = index_of(v);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    int d = total_degree();
    for (const auto& [e, c] : terms_)
      if (curvetwist::total_degree(e) != d) return false;
    return true;
  }

  const Exponents& leading_exponents() const {
    if (is_zero()) throw DomainError("leading term of zero polynomial");
    return terms_.rbegin()->first;
  }
  const Rational& leading_coefficient() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Scalar multiple with leading coefficient 1 (zero stays zero).
  Polynomial normalized() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coefficient());
  }

  /// Same polynomial expressed over a superset of its variables.
  Polynomial embed(const std::vector<std::string>& superset) const {
    auto target = canonical_variables(superset);
    if (target == vars_) return *this;
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) {
        bool used = false;
        for (const auto& [e, c] : terms_) used = used || e[i] > 0;
        if (used) throw DomainError("embed: variable '" + vars_[i] + "' missing from target list");
        where[i] = -1;
        continue;
      }
      where[i] = static_cast<int>(it - target.begin());
    }
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
      Exponents f(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (where[i] >= 0) f[where[i]] = e[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Drop variables that do not occur.
  Polynomial trimmed() const { return embed(used_variables()); }

  static std::vector<std::string> merged_variables(const Polynomial& a, const Polynomial& b) {
    auto v = a.vars_;
    v.insert(v.end(), b.vars_.begin(), b.vars_.end());
    return canonical_variables(std::move(v));
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) { return accumulate(o, 1); }
  Polynomial& operator-=(const Polynomial& o) { return accumulate(o, -1); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) {
      auto v = merged_variables(a, b);
      return a.embed(v) * b.embed(v);
    }
    Polynomial out(a.vars_);
    if (a.is_zero() || b.is_zero()) return out;
    Exponents e(a.vars_.size());
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        prod = ca * cb;
        auto [it, inserted] = out.terms_.try_emplace(e, prod);
        if (!inserted) {
          it->second += prod;
          if (it->second == 0) out.terms_.erase(it);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto v = merged_variables(a, b);
    return a.embed(v).terms_ == b.embed(v).terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(1, vars_);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Polynomial derivative(const std::string& v) const {
    Polynomial out(vars_);
    int i = index_of(v);
    if (i < 0) return out;
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents f = e;
      f[i] -= 1;
      out.terms_.emplace(std::move(f), c * e[i]);
    }
    return out;
  }

  /// Coefficients with respect to one variable: p = sum_k c[k] v^k.
  std::vector<Polynomial> coefficients_in(const std::string& v) const {
    int i = index_of(v);
    int d = std::max(degree_in(v), 0);
    std::vector<Polynomial> out(d + 1, Polynomial(vars_));
    for (const auto& [e, c] : terms_) {
      int k = i < 0 ? 0 : e[i];
      Exponents f = e;
      if (i >= 0) f[i] = 0;
      out[k].terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Substitute polynomials for variables; unmapped variables stay symbolic.
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const {
    std::vector<std::string> out_vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (!images.count(vars_[i])) out_vars.push_back(vars_[i]);
    for (const auto& [name, img] : images)
      out_vars.insert(out_vars.end(), img.vars_.begin(), img.vars_.end());
    out_vars = canonical_variables(std::move(out_vars));

    std::vector<Polynomial> base(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = images.find(vars_[i]);
      base[i] = it != images.end() ? it->second.embed(out_vars) : variable(vars_[i], out_vars);
    }
    std::vector<std::vector<Polynomial>> powers(vars_.size());
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(1, out_vars));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base[i]);
      return cache[k];
    };
    Polynomial out(out_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(c, out_vars);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * power(i, e[i]);
      out += term;
    }
    return out;
  }

  Polynomial evaluate(const std::string& v, const Rational& value) const {
    return substitute({{v, constant(value)}});
  }

  Rational evaluate_all(const std::map<std::string, Rational>& values) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = values.find(vars_[i]);
        if (it == values.end()) throw DomainError("evaluate_all: no value for '" + vars_[i] + "'");
        Rational p = 1;
        for (int k = 0; k < e[i]; ++k) p *= it->second;
        t *= p;
      }
      total += t;
    }
    return total;
  }

  Polynomial rename(const std::map<std::string, std::string>& names) const {
    std::map<std::string, Polynomial> images;
    for (const auto& [from, to] : names) images.emplace(from, variable(to));
    return substitute(images);
  }

  /// Homogenize with `h` to the given degree (default: total degree).
  Polynomial homogenize(const std::string& h, int degree = -1) const {
    if (degree < 0) degree = std::max(total_degree(), 0);
    auto vars = vars_;
    vars.push_back(h);
    Polynomial out(vars);
    int hi = out.index_of(h);
    for (const auto& [e, c] : terms_) {
      int d = curvetwist::total_degree(e);
      if (d > degree) throw DomainError("homogenize: term degree exceeds target degree");
      Exponents f(out.vars_.size(), 0);
      for (std::size_t i = 0; i < vars_.size(); ++i) f[out.index_of(vars_[i])] += e[i];
      f[hi] += degree - d;
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Exponents of the greatest monomial dividing every term.
  Exponents monomial_content() const {
    Exponents g(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        g = e;
        first = false;
      } else {
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
      }
    }
    return g;
  }

  Polynomial divide_monomial(const Exponents& m) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] -= m[i];
        if (f[i] < 0) throw DomainError("divide_monomial: monomial does not divide");
      }
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  std::string to_string() const;

 private:
  Polynomial& accumulate(const Polynomial& o, int sign) {
    if (vars_ != o.vars_) {
      auto v = merged_variables(*this, o);
      *this = embed(v);
      return accumulate(o.embed(v), sign);
    }
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, sign > 0 ? c : Rational(-c));
      if (!inserted) {
        if (sign > 0)
          it->second += c;
        else
          it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline Polynomial operator+(Polynomial a, const Rational& s) { return a += Polynomial::constant(s); }
inline Polynomial operator-(Polynomial a, const Rational& s) { return a -= Polynomial::constant(s); }

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// True when a = c*b for some nonzero rational c (both zero also counts).
inline bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& allowed)
      : text_(text), allowed_(allowed) {}

  Polynomial run() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    skip_space();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
      fail("implicit multiplication is not allowed");
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      return Polynomial::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline const std::vector<std::string>& grammar_variables() {
  static const std::vector<std::string> names = {"x0", "x1", "x2", "x", "y", "t"};
  return names;
}

inline Polynomial Polynomial::parse(std::string_view text, const std::vector<std::string>& allowed) {
  return detail::PolynomialParser(text, allowed).run();
}

inline Polynomial Polynomial::parse(std::string_view text) { return parse(text, grammar_variables()); }

/// Multivariate division by a single divisor. Returns the quotient iff the
/// remainder is zero.
inline std::optional<Polynomial> exact_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("exact_divide: zero divisor");
  auto vars = Polynomial::merged_variables(num, den);
  Polynomial r = num.embed(vars);
  Polynomial d = den.embed(vars);
  Polynomial q(vars);
  const Exponents& lead = d.leading_exponents();
  const Rational lc = d.leading_coefficient();
  while (!r.is_zero()) {
    Exponents e = r.leading_exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= lead[i];
      if (e[i] < 0) return std::nullopt;
    }
    Polynomial t = Polynomial::monomial(r.leading_coefficient() / lc, vars, e);
    q += t;
    r -= t * d;
  }
  return q;
}

}  // namespace curvetwist
