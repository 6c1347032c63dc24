#pragma once

// Numerical braid monodromy of an affine plane curve q(x, y) = 0 with respect
// to the projection to x: discriminant, critical values, standard loops,
// root tracking and factorization assembly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "curvetwist/factorization.hpp"
#include "curvetwist/resultant.hpp"
#include "curvetwist/univariate.hpp"

namespace curvetwist {

using Complex = std::complex<double>;

struct AffineCurve {
  Polynomial q;  // in x, y
  int n = 0;     // total degree = degree in y
  Rational lead; // coefficient of y^n

  explicit AffineCurve(const Polynomial& poly);
};

/// Smallest k in 1, -1, 2, -2, ... for which x -> x + k*y makes the y^n
/// coefficient a nonzero constant.
inline int suggest_shear(const Polynomial& q) {
  int n = q.total_degree();
  Polynomial top(q.variables());
  for (const auto& [e, c] : q.terms())
    if (total_degree(e) == n) top += Polynomial::monomial(c, q.variables(), e);
  for (int k = 1; k < 50; ++k)
    for (int s : {k, -k})
      if (top.substitute({{"x", Polynomial::constant(s)}, {"y", Polynomial::constant(1)}}).constant_value() != 0) return s;
  throw DomainError("suggest_shear: no shear found");
}

inline Polynomial shear_x(const Polynomial& q, int k) {
  return q.substitute({{"x", Polynomial::variable("x") + Polynomial::variable("y") * Rational(k)}}).trimmed();
}

inline AffineCurve::AffineCurve(const Polynomial& poly) : q(poly.trimmed()) {
  for (const auto& v : q.used_variables())
    if (v != "x" && v != "y") throw DomainError("curve must be a polynomial in x, y; found " + v);
  n = q.total_degree();
  if (n < 1) throw DomainError("curve must have positive degree");
  if (q.degree_in("y") != n) {
    throw DomainError("curve is not generic at infinity (deg_y " + std::to_string(std::max(q.degree_in("y"), 0)) +
                      " < degree " + std::to_string(n) + "); apply the shear x -> x + " +
                      std::to_string(suggest_shear(q)) + "*y");
  }
  Polynomial c = q.coefficients_in("y").back();
  lead = c.constant_value();
}

inline Polynomial discriminant_x(const AffineCurve& curve) {
  if (curve.n < 2) throw DomainError("discriminant_x: curve of degree 1 has no critical values");
  Polynomial d = resultant_wrt(curve.q, curve.q.derivative("y"), "y");
  if (d.is_zero()) throw DomainError("discriminant_x: zero discriminant (non-reduced curve)");
  return d;
}

struct CriticalSet {
  std::vector<Complex> points;  // sorted by decreasing real part, then increasing imaginary part
  std::vector<double> radii;    // certified inclusion radii
  double base = 0;              // M
};

struct Loop {
  int index = 0;                // 1-based, nearest to M first
  Complex center;
  double radius = 0;            // circle radius
  std::vector<Complex> path;    // closed polyline starting and ending at M
};

struct TrackedLoop {
  Loop loop;
  BraidWord braid;
  Perm permutation;  // from endpoint matching of the tracked roots
};

struct MonodromyResult {
  AffineCurve curve;
  Polynomial discriminant;
  CriticalSet critical;
  std::vector<TrackedLoop> loops;
  Factorization factorization;
  InvariantReport invariants;
  int precision = 53;
  bool permutations_consistent = true;
};

/// CURVETWIST_PRECISION: 53 (double, escalating to 113 on failure) or 113.
inline int default_precision() {
  if (const char* env = std::getenv("CURVETWIST_PRECISION"); env && *env) {
    std::string s(env);
    if (s == "53") return 53;
    if (s == "113") return 113;
    throw DomainError("CURVETWIST_PRECISION must be 53 or 113, got " + s);
  }
  return 53;
}

namespace numeric {

namespace mp = boost::multiprecision;

template <class R>
struct Traits;

template <>
struct Traits<double> {
  using C = std::complex<double>;
  static constexpr int bits = 53;
  static double eps() { return std::ldexp(1.0, -52); }
  static double from(const Rational& q) { return q.get_d(); }
};

template <>
struct Traits<mp::cpp_bin_float_quad> {
  using R = mp::cpp_bin_float_quad;
  using C = mp::cpp_complex_quad;
  static constexpr int bits = 113;
  static R eps() { return std::numeric_limits<R>::epsilon(); }
  static R from(const Rational& q) { return R(q.get_num().get_str()) / R(q.get_den().get_str()); }
};

template <class R>
using Cx = typename Traits<R>::C;

template <class R>
Complex to_double(const Cx<R>& z) {
  using std::real, std::imag;
  return {static_cast<double>(real(z)), static_cast<double>(imag(z))};
}

template <class R>
Cx<R> from_double(const Complex& z) {
  return Cx<R>(R(z.real()), R(z.imag()));
}

template <class R>
R absval(const Cx<R>& z) {
  using std::abs;
  return abs(z);
}

// f(z), f'(z) for low-first coefficients
template <class R>
std::pair<Cx<R>, Cx<R>> eval_with_derivative(const std::vector<Cx<R>>& c, const Cx<R>& z) {
  Cx<R> f = c.back(), d(R(0));
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + f;
    f = f * z + c[k];
  }
  return {f, d};
}

/// All roots of a polynomial with nonzero leading coefficient (Aberth).
template <class R>
std::vector<Cx<R>> aberth(const std::vector<Cx<R>>& c) {
  using C = Cx<R>;
  int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  R bound(0);
  for (int k = 0; k < d; ++k) bound = std::max<R>(bound, absval<R>(c[k] / c[d]));
  bound += 1;
  std::vector<C> z(d);
  for (int k = 0; k < d; ++k) {
    R ang = R(2 * M_PI * k) / d + R(0.4);
    z[k] = C(R(bound / 2) * R(std::cos(static_cast<double>(ang))), R(bound / 2) * R(std::sin(static_cast<double>(ang))));
  }
  const R tol = Traits<R>::eps() * 16;
  for (int iter = 0; iter < 2000; ++iter) {
    R worst(0);
    for (int i = 0; i < d; ++i) {
      auto [f, fp] = eval_with_derivative<R>(c, z[i]);
      if (absval<R>(f) == 0) continue;
      C w = f / fp;
      C s(R(0));
      for (int j = 0; j < d; ++j)
        if (j != i) s += C(R(1)) / (z[i] - z[j]);
      C step = w / (C(R(1)) - w * s);
      z[i] -= step;
      worst = std::max<R>(worst, absval<R>(step) / (1 + absval<R>(z[i])));
    }
    if (worst < tol) break;
  }
  for (auto& r : z)
    for (int k = 0; k < 3; ++k) {
      auto [f, fp] = eval_with_derivative<R>(c, r);
      if (absval<R>(fp) == 0) break;
      r -= f / fp;
    }
  return z;
}

template <class R>
std::vector<Cx<R>> dense_coefficients(const DensePoly& p) {
  std::vector<Cx<R>> c;
  for (const auto& q : p.coeffs()) c.push_back(Cx<R>(Traits<R>::from(q)));
  return c;
}

template <class R>
CriticalSet critical_values(const Polynomial& disc) {
  DensePoly sq = squarefree_part(DensePoly::from(disc.trimmed(), "x"));
  CriticalSet cs;
  int d = sq.degree();
  if (d < 1) throw DomainError("critical_values: no critical values");
  auto c = dense_coefficients<R>(sq);
  auto roots = aberth<R>(c);
  std::vector<R> radii;
  for (const auto& z : roots) {
    auto [f, fp] = eval_with_derivative<R>(c, z);
    if (absval<R>(fp) == 0) throw NumericalError("critical_values: derivative vanishes at an approximate root");
    R r = R(d) * absval<R>(f / fp) + R(d) * Traits<R>::eps() * 64 * (1 + absval<R>(z));
    radii.push_back(r);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (absval<R>(roots[i] - roots[j]) <= 4 * (radii[i] + radii[j]))
        throw NumericalError("critical_values: roots not separated at " + std::to_string(Traits<R>::bits) + " bits");
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Complex> pts;
  for (const auto& z : roots) pts.push_back(to_double<R>(z));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].real() != pts[b].real()) return pts[a].real() > pts[b].real();
    return pts[a].imag() < pts[b].imag();
  });
  double max_re = -1e300, max_r = 0;
  for (int i : order) {
    Complex z = pts[i];
    double r = static_cast<double>(radii[i]);
    // conjugate-symmetric cleanup: a real root stays real
    if (std::abs(z.imag()) <= r) z = {z.real(), 0.0};
    cs.points.push_back(z);
    cs.radii.push_back(r);
    max_re = std::max(max_re, z.real());
    max_r = std::max(max_r, r);
  }
  cs.base = max_re + 1 + max_r;
  return cs;
}

// distance from p to segment [a, b]
inline double segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  double t = len2 == 0 ? 0 : std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace numeric

inline double winding_number(const std::vector<Complex>& path, Complex p) {
  double total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) total += std::arg((path[i + 1] - p) / (path[i] - p));
  return total / (2 * M_PI);
}

struct LoopLayout {
  std::vector<Loop> loops;
  double corridor = 0;  // imaginary part of the corridor
  double margin = 0;
};

/// Loop j leaves M downwards, runs left along the corridor Im x = -H below
/// every critical disk, climbs vertically to the circle around x_j, goes once
/// around it counterclockwise, and returns the same way. A climb that would
/// enter another disk goes around it: on the left when that point has real
/// part >= Re x_j, on the right otherwise, as an infinitesimally tilted
/// straight climb would. Loops follow the CriticalSet order.
inline LoopLayout standard_loops(const CriticalSet& cs, int circle_vertices = 64) {
  const auto& pts = cs.points;
  std::size_t p = pts.size();
  std::vector<double> rho(p);
  for (std::size_t j = 0; j < p; ++j) {
    double nearest = 1e300;
    for (std::size_t k = 0; k < p; ++k)
      if (k != j) nearest = std::min(nearest, std::abs(pts[j] - pts[k]));
    rho[j] = p == 1 ? 0.5 : std::min(0.25 * nearest, 0.5);
    if (rho[j] <= 4 * cs.radii[j]) throw NumericalError("standard_loops: critical disks too large for their separation");
  }
  LoopLayout layout;
  layout.margin = *std::max_element(rho.begin(), rho.end());
  double H = 0;
  for (std::size_t j = 0; j < p; ++j) H = std::max(H, -pts[j].imag() + rho[j]);
  H += layout.margin;
  layout.corridor = -H;
  const Complex M(cs.base, 0);
  const Complex down(cs.base, -H);
  const int arc_vertices = circle_vertices / 4;

  for (std::size_t j = 0; j < p; ++j) {
    const double a = pts[j].real();
    Loop L;
    L.index = static_cast<int>(j) + 1;
    L.center = pts[j];
    L.radius = rho[j];
    std::vector<Complex> climb{Complex(a, -H)};
    std::vector<std::size_t> obstacles;
    for (std::size_t k = 0; k < p; ++k)
      if (k != j && pts[k].imag() < pts[j].imag() && std::abs(pts[k].real() - a) < 1.5 * rho[k]) obstacles.push_back(k);
    std::sort(obstacles.begin(), obstacles.end(), [&](std::size_t u, std::size_t v) { return pts[u].imag() < pts[v].imag(); });
    for (std::size_t k : obstacles) {
      double c = 1.5 * rho[k];
      double dx = a - pts[k].real();
      double half = std::sqrt(c * c - dx * dx);
      double enter = std::arg(Complex(dx, -half)), leave = std::arg(Complex(dx, half));
      bool left = pts[k].real() >= a;
      // left: clockwise from the bottom through angle pi; right: counterclockwise through 0
      double sweep = left ? -(2 * M_PI - (leave - enter)) : (leave - enter);
      if (left && sweep > 0) sweep -= 2 * M_PI;
      if (!left && sweep < 0) sweep += 2 * M_PI;
      for (int v = 0; v <= arc_vertices; ++v) climb.push_back(pts[k] + std::polar(c, enter + sweep * v / arc_vertices));
    }
    Complex attach = pts[j] - Complex(0, rho[j]);
    climb.push_back(attach);

    L.path = {M, down};
    L.path.insert(L.path.end(), climb.begin(), climb.end());
    for (int v = 1; v <= circle_vertices; ++v)
      L.path.push_back(pts[j] + std::polar(rho[j], -M_PI / 2 + 2 * M_PI * v / circle_vertices));
    L.path.back() = attach;
    L.path.insert(L.path.end(), climb.rbegin() + 1, climb.rend());
    L.path.push_back(down);
    L.path.push_back(M);
    layout.loops.push_back(std::move(L));
  }
  return layout;
}

namespace numeric {

// Strand ordering key: real part, ties broken by a tiny multiple of the
// imaginary part.
inline constexpr double kTieWeight = 1.0 / (1 << 20);

template <class R>
R strand_key(const Cx<R>& y) {
  using std::real, std::imag;
  return real(y) + R(kTieWeight) * imag(y);
}

template <class R>
class FiberTracker {
 public:
  using C = Cx<R>;

  explicit FiberTracker(const AffineCurve& curve) : n_(curve.n) {
    for (const auto& c : curve.q.coefficients_in("y")) {
      DensePoly d = DensePoly::from(c.trimmed(), "x");
      std::vector<C> v;
      for (const auto& r : d.coeffs()) v.push_back(C(Traits<R>::from(r)));
      if (v.empty()) v.push_back(C(R(0)));
      coeff_.push_back(std::move(v));
    }
  }

  std::vector<C> y_coefficients(const C& x) const {
    std::vector<C> out;
    for (const auto& c : coeff_) out.push_back(eval_with_derivative<R>(c, x).first);
    return out;
  }

  /// Roots at x sorted by strand key.
  std::vector<C> fiber(const C& x) const {
    auto roots = aberth<R>(y_coefficients(x));
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) { return strand_key<R>(a) < strand_key<R>(b); });
    return roots;
  }

  /// Follows the roots along the polyline; the letters are emitted at each
  /// adjacent exchange of the strand order.
  BraidWord track(const std::vector<Complex>& path, Perm* perm_out = nullptr) const {
    std::vector<Letter> letters;
    std::vector<C> ys = fiber(from_double<R>(path.front()));
    const std::vector<C> start = ys;
    check_distinct(ys);
    // order[k] = index (into ys) of the strand at position k
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::vector<C> prev_step;  // y motion of the last accepted step, per strand
    R prev_h(0);
    for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
      C a = from_double<R>(path[seg]), b = from_double<R>(path[seg + 1]);
      R len = absval<R>(b - a);
      if (len == 0) continue;
      R t(0), h = std::min<R>(len, R(0.05));
      while (t < len) {
        R step = std::min<R>(h, len - t);
        C x1 = a + (b - a) * ((t + step) / len);
        std::vector<C> pred = ys;
        if (!prev_step.empty() && prev_h > 0)
          for (int i = 0; i < n_; ++i) pred[i] += prev_step[i] * (step / prev_h);
        std::vector<C> next;
        std::vector<Letter> emitted;
        std::vector<int> new_order = order;
        if (attempt(x1, ys, pred, next) && exchanges(ys, next, new_order, emitted)) {
          for (int i = 0; i < n_; ++i) {
            if (prev_step.empty()) prev_step.assign(n_, C(R(0)));
            prev_step[i] = next[i] - ys[i];
          }
          prev_h = step;
          ys = std::move(next);
          order = std::move(new_order);
          letters.insert(letters.end(), emitted.begin(), emitted.end());
          t += step;
          h = std::min<R>(h * R(1.5), R(0.25));
        } else {
          h /= 2;
          prev_step.clear();
          if (h < min_step()) throw NumericalError("track: step underflow near x = " + describe(x1));
        }
      }
    }
    if (perm_out) {
      // endpoint matching: strand j (started at position j) now sits at the
      // position of the base-fiber root it returned to
      Perm p(n_, -1);
      for (int j = 0; j < n_; ++j) {
        int best = 0;
        for (int s = 1; s < n_; ++s)
          if (absval<R>(ys[j] - start[s]) < absval<R>(ys[j] - start[best])) best = s;
        p[best] = j;
      }
      *perm_out = p;
    }
    return BraidWord(n_, std::move(letters)).freely_reduced();
  }

 private:
  static R min_step() { return Traits<R>::bits > 53 ? R(1e-22) : R(1e-11); }

  static std::string describe(const C& x) {
    Complex z = to_double<R>(x);
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
  }

  void check_distinct(const std::vector<C>& ys) const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (absval<R>(ys[i] - ys[j]) < Traits<R>::eps() * 1e6 * (1 + absval<R>(ys[i])))
          throw NumericalError("track: base fiber has a repeated root");
  }

  static R min_distance(const std::vector<C>& ys) {
    R d = std::numeric_limits<R>::max();
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = i + 1; j < ys.size(); ++j) d = std::min<R>(d, absval<R>(ys[i] - ys[j]));
    return d;
  }

  // Newton from the prediction; accepted when every root converged, stayed
  // in its own basin and moved less than a quarter of the root separation.
  bool attempt(const C& x, const std::vector<C>& ys, const std::vector<C>& pred, std::vector<C>& out) const {
    auto c = y_coefficients(x);
    const R tol = Traits<R>::eps() * 1024;
    out = pred;
    for (int i = 0; i < n_; ++i) {
      bool converged = false;
      for (int it = 0; it < 12; ++it) {
        auto [f, fp] = eval_with_derivative<R>(c, out[i]);
        if (absval<R>(fp) == 0) return false;
        C dy = f / fp;
        out[i] -= dy;
        if (absval<R>(dy) <= tol * (1 + absval<R>(out[i]))) {
          converged = true;
          break;
        }
      }
      if (!converged) return false;
    }
    R sep = std::min(min_distance(ys), min_distance(out));
    if (n_ == 1) return true;
    R motion(0), jump(0);
    for (int i = 0; i < n_; ++i) {
      motion = std::max<R>(motion, absval<R>(out[i] - ys[i]));
      jump = std::max<R>(jump, absval<R>(out[i] - pred[i]));
    }
    const R safety(4);
    return motion * safety < sep && jump * safety < sep;
  }

  // Updates the strand order and emits letters; fails when more than one
  // exchange happens in the step.
  bool exchanges(const std::vector<C>& ys, const std::vector<C>& next, std::vector<int>& order,
                 std::vector<Letter>& emitted) const {
    std::vector<int> sorted = order;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](int a, int b) { return strand_key<R>(next[a]) < strand_key<R>(next[b]); });
    if (sorted == order) return true;
    int first = -1;
    for (int k = 0; k < n_; ++k)
      if (sorted[k] != order[k]) {
        first = k;
        break;
      }
    // exactly one adjacent transposition
    if (first + 1 >= n_ || sorted[first] != order[first + 1] || sorted[first + 1] != order[first]) return false;
    for (int k = first + 2; k < n_; ++k)
      if (sorted[k] != order[k]) return false;
    int a = order[first], b = order[first + 1];  // a was left of b
    C d0 = ys[b] - ys[a], d1 = next[b] - next[a];
    R k0 = strand_key<R>(d0), k1 = strand_key<R>(d1);
    R s = k0 / (k0 - k1);
    using std::imag;
    R im = imag(d0) + (imag(d1) - imag(d0)) * s;
    emitted.push_back({first + 1, im > 0 ? 1 : -1});
    order = sorted;
    return true;
  }

  int n_;
  std::vector<std::vector<C>> coeff_;
};

template <class R>
MonodromyResult braid_monodromy_at(const AffineCurve& curve) {
  MonodromyResult res{curve, discriminant_x(curve), {}, {}, {}, {}, Traits<R>::bits, true};
  res.critical = critical_values<R>(res.discriminant);
  FiberTracker<R> tracker(curve);
  // a base fiber with a repeated key would make strand labels ambiguous
  for (int attempt = 0;; ++attempt) {
    auto ys = tracker.fiber(Cx<R>(R(res.critical.base)));
    bool tie = false;
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
      if (strand_key<R>(ys[i + 1]) - strand_key<R>(ys[i]) < R(1e-9)) tie = true;
    if (!tie) break;
    if (attempt == 8) throw NumericalError("braid_monodromy: base fiber has tied strand keys");
    res.critical.base += 1;
  }
  LoopLayout layout = standard_loops(res.critical);
  std::vector<BraidWord> factors;
  for (const auto& L : layout.loops) {
    TrackedLoop t{L, BraidWord(curve.n), {}};
    t.braid = tracker.track(L.path, &t.permutation);
    if (t.braid.permutation() != t.permutation) res.permutations_consistent = false;
    factors.push_back(t.braid);
    res.loops.push_back(std::move(t));
  }
  res.factorization = Factorization(curve.n, factors);
  res.invariants = factorization_invariants(res.factorization);
  return res;
}

}  // namespace numeric

inline CriticalSet critical_values(const AffineCurve& curve, int precision = default_precision()) {
  Polynomial d = discriminant_x(curve);
  if (precision <= 53) {
    try {
      return numeric::critical_values<double>(d);
    } catch (const NumericalError&) {
    }
  }
  return numeric::critical_values<numeric::mp::cpp_bin_float_quad>(d);
}

/// Tracks the roots along `path` and returns the braid (double precision,
/// escalating to quad on failure).
inline BraidWord track_braid(const AffineCurve& curve, const std::vector<Complex>& path, Perm* perm = nullptr,
                             int precision = default_precision()) {
  if (precision <= 53) {
    try {
      return numeric::FiberTracker<double>(curve).track(path, perm);
    } catch (const NumericalError&) {
    }
  }
  return numeric::FiberTracker<numeric::mp::cpp_bin_float_quad>(curve).track(path, perm);
}

inline MonodromyResult braid_monodromy(const AffineCurve& curve, int precision = default_precision()) {
  if (precision <= 53) {
    try {
      return numeric::braid_monodromy_at<double>(curve);
    } catch (const NumericalError&) {
    }
  }
  return numeric::braid_monodromy_at<numeric::mp::cpp_bin_float_quad>(curve);
}

}  // namespace curvetwist
