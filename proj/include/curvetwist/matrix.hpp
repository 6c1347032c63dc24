#pragma once

// Dense rational and polynomial matrices: echelon forms, kernels, determinants.

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "curvetwist/polynomial.hpp"

namespace curvetwist {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {};
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Columns given as vectors of equal length.
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    return a + Rational(-1) * b;
  }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector product: dimension mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Reduced row echelon form; `pivots` receives pivot columns in order.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const {
    RationalMatrix r = *this;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && r(p, col) == 0) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(r(p, j), r(row, j));
      Rational inv = 1 / r(row, col);
      for (std::size_t j = col; j < cols_; ++j) r(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || r(i, col) == 0) continue;
        Rational f = r(i, col);
        for (std::size_t j = col; j < cols_; ++j) r(i, j) -= f * r(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return r;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  /// Fraction-free Bareiss elimination.
  Rational determinant() const {
    if (!square()) throw DomainError("determinant: matrix is not square");
    std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<mpz_class> num(n * n);
    mpz_class common = 1;
    for (const auto& x : a_) common = lcm(common, x.get_den());
    for (std::size_t k = 0; k < n * n; ++k) {
      mpq_class scaled = a_[k] * common;
      num[k] = scaled.get_num();
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return num[i * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          mpz_class v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          at(i, j) = v;
        }
      }
      prev = at(k, k);
    }
    mpq_class det(at(n - 1, n - 1));
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), common.get_mpz_t(), n);
    det /= scale;
    det.canonicalize();
    return sign < 0 ? Rational(-det) : Rational(det);
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + (*this)(i, j).get_str();
    }
    return out + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Right null space. One vector per free column, in column order: the free
/// entry is 1, the other free entries 0, pivot entries read off the RREF.
inline std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> piv;
  RationalMatrix r = m.rref(&piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Kronecker product.
inline RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static PolyMatrix constant(const RationalMatrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Polynomial::constant(m(i, j));
    return p;
  }

  /// Linear pencil sum_k vars[k] * mats[k].
  static PolyMatrix pencil(const std::vector<std::string>& vars, const std::vector<RationalMatrix>& mats) {
    if (vars.size() != mats.size() || mats.empty()) throw DomainError("pencil: mismatched inputs");
    PolyMatrix p(mats[0].rows(), mats[0].cols());
    auto all = canonical_variables(vars);
    for (std::size_t k = 0; k < mats.size(); ++k) {
      if (mats[k].rows() != p.rows_ || mats[k].cols() != p.cols_) throw DomainError("pencil: size mismatch");
      Polynomial v = Polynomial::variable(vars[k], all);
      for (std::size_t i = 0; i < p.rows_; ++i)
        for (std::size_t j = 0; j < p.cols_; ++j)
          if (mats[k](i, j) != 0) p(i, j) += v * mats[k](i, j);
    }
    for (auto& e : p.a_) e = e.embed(all);
    return p;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<std::string> variables() const {
    std::vector<std::string> v;
    for (const auto& e : a_) {
      auto u = e.used_variables();
      v.insert(v.end(), u.begin(), u.end());
    }
    return canonical_variables(std::move(v));
  }

  PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f(a_[k]);
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

namespace detail {

inline Polynomial laplace_determinant(const PolyMatrix& m, const std::vector<std::string>& vars) {
  std::size_t n = m.rows();
  std::unordered_map<unsigned, Polynomial> memo;
  // det of rows [n - popcount(mask), n) restricted to the columns in mask
  std::function<Polynomial(unsigned)> minor = [&](unsigned mask) -> Polynomial {
    int size = __builtin_popcount(mask);
    if (size == 0) return Polynomial::constant(1, vars);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::size_t row = n - size;
    Polynomial acc(vars);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& e = m(row, j);
      if (!e.is_zero()) {
        Polynomial sub = minor(mask & ~(1u << j));
        if (!sub.is_zero()) {
          if (sign > 0)
            acc += e * sub;
          else
            acc -= e * sub;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return minor((n == 32 ? 0xffffffffu : ((1u << n) - 1)));
}

inline Polynomial interpolation_determinant(const PolyMatrix& m, const std::vector<std::string>& vars) {
  if (vars.empty()) {
    RationalMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).constant_value();
    return Polynomial::constant(c.determinant());
  }
  const std::string v = vars[0];
  std::vector<std::string> rest(vars.begin() + 1, vars.end());
  int bound = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int row_max = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row_max = std::max(row_max, m(i, j).degree_in(v));
    bound += row_max;
  }
  std::vector<Rational> nodes;
  std::vector<Polynomial> values;
  for (int k = 0; k <= bound; ++k) {
    Rational node = k;
    PolyMatrix at = m.map([&](const Polynomial& e) { return e.evaluate(v, node); });
    nodes.push_back(node);
    values.push_back(interpolation_determinant(at, rest));
  }
  // Newton divided differences with polynomial values
  std::vector<Polynomial> coef = values;
  for (std::size_t level = 1; level < nodes.size(); ++level)
    for (std::size_t i = nodes.size() - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) * Rational(1 / (nodes[i] - nodes[i - level]));
      if (i == level) break;
    }
  Polynomial var = Polynomial::variable(v);
  Polynomial result = coef.back();
  for (std::size_t i = nodes.size() - 1; i-- > 0;) result = result * (var - nodes[i]) + coef[i];
  return result;
}

}  // namespace detail

/// Exact determinant. Memoized cofactor expansion up to 8x8, evaluation and
/// interpolation one variable at a time above that.
inline Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix is not square");
  if (m.rows() > 32) throw DomainError("determinant: matrices above 32x32 are not supported");
  auto vars = m.variables();
  Polynomial det = m.rows() <= 8 ? detail::laplace_determinant(m, vars) : detail::interpolation_determinant(m, vars);
  return det.embed(canonical_variables(vars));
}

}  // namespace curvetwist
