#pragma once

// Braid monodromy factorizations: Hurwitz moves, invariants, and a bounded
// search for Hurwitz equivalence up to one simultaneous conjugation.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "curvetwist/braid.hpp"

namespace curvetwist {

struct Factorization {
  int strands = 2;
  std::vector<BraidWord> factors;

  Factorization() = default;
  Factorization(int n, std::vector<BraidWord> f) : strands(n), factors(std::move(f)) {
    for (const auto& w : factors)
      if (w.strands() != n) throw DomainError("factorization: factors must share the strand count");
  }
  std::size_t size() const { return factors.size(); }
};

struct HurwitzMove {
  int k;  // 1-based position
  bool inverse = false;
  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
  std::string to_string() const { return "R" + std::to_string(k) + (inverse ? "^-1" : ""); }
};

inline std::vector<HurwitzMove> parse_moves(const std::string& text) {
  std::vector<HurwitzMove> out;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (tok.size() < 2 || tok[0] != 'R') throw ParseError("malformed Hurwitz move '" + tok + "'");
    bool inv = false;
    std::string body = tok.substr(1);
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      inv = true;
      body.resize(body.size() - 3);
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed Hurwitz move '" + tok + "'");
    out.push_back({std::stoi(body), inv});
  }
  return out;
}

inline std::string moves_to_string(const std::vector<HurwitzMove>& moves) {
  std::string out;
  for (const auto& m : moves) out += (out.empty() ? "" : " ") + m.to_string();
  return out;
}

/// Forward: (t_k, t_k+1) -> (t_k t_k+1 t_k^-1, t_k).
/// Inverse: (t_k, t_k+1) -> (t_k+1, t_k+1^-1 t_k t_k+1).
inline Factorization hurwitz_move(const Factorization& f, int k, bool inverse = false) {
  if (k < 1 || k + 1 > static_cast<int>(f.size()))
    throw DomainError("hurwitz_move: position " + std::to_string(k) + " out of range");
  Factorization g = f;
  const BraidWord& a = f.factors[k - 1];
  const BraidWord& b = f.factors[k];
  if (!inverse) {
    g.factors[k - 1] = a * b * a.inverse();
    g.factors[k] = a;
  } else {
    g.factors[k - 1] = b;
    g.factors[k] = b.inverse() * a * b;
  }
  return g;
}

inline Factorization apply_moves(Factorization f, const std::vector<HurwitzMove>& moves) {
  for (const auto& m : moves) f = hurwitz_move(f, m.k, m.inverse);
  return f;
}

inline BraidWord factorization_product(const Factorization& f) {
  BraidWord p(f.strands);
  for (const auto& w : f.factors) p = p * w;
  return p;
}

/// Factor-by-factor group equality.
inline bool elementwise_equal(const Factorization& a, const Factorization& b) {
  if (a.strands != b.strands || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equals(a.factors[i], b.factors[i])) return false;
  return true;
}

struct InvariantReport {
  std::size_t factor_count = 0;
  std::vector<int> exponent_sums;
  int total_exponent_sum = 0;
  NormalForm product_normal_form;
  std::vector<Perm> permutations;
  bool product_is_full_twist = false;
  int expected_total = 0;  // n(n-1)
};

inline InvariantReport factorization_invariants(const Factorization& f) {
  InvariantReport r;
  r.factor_count = f.size();
  for (const auto& w : f.factors) {
    r.exponent_sums.push_back(w.exponent_sum());
    r.total_exponent_sum += w.exponent_sum();
    r.permutations.push_back(w.permutation());
  }
  r.product_normal_form = normal_form(factorization_product(f));
  r.product_is_full_twist = r.product_normal_form == normal_form(full_twist(f.strands));
  r.expected_total = f.strands * (f.strands - 1);
  return r;
}

struct BmtCertificate {
  std::optional<BraidWord> conjugator;  // applied to every factor of the first factorization as c^-1 t c
  std::vector<HurwitzMove> moves;
};

struct BmtResult {
  std::optional<BmtCertificate> certificate;  // empty means "unknown"
  std::string note;
};

namespace detail {

inline std::string factorization_key(const Factorization& f) {
  std::string key;
  for (const auto& w : f.factors) key += normal_form(w).to_string() + "|";
  return key;
}

inline std::vector<int> sorted_exponent_sums(const Factorization& f) {
  std::vector<int> v;
  for (const auto& w : f.factors) v.push_back(w.exponent_sum());
  std::sort(v.begin(), v.end());
  return v;
}

struct SearchNode {
  Factorization f;
  std::vector<HurwitzMove> path;
};

// all moves in a fixed order: R1, R1^-1, R2, R2^-1, ...
inline std::vector<HurwitzMove> all_moves(std::size_t len) {
  std::vector<HurwitzMove> m;
  for (int k = 1; k + 1 <= static_cast<int>(len); ++k) {
    m.push_back({k, false});
    m.push_back({k, true});
  }
  return m;
}

inline std::map<std::string, std::vector<HurwitzMove>> bfs_layers(const Factorization& start, int depth) {
  std::map<std::string, std::vector<HurwitzMove>> seen;
  seen.emplace(factorization_key(start), std::vector<HurwitzMove>{});
  std::vector<SearchNode> frontier{{start, {}}};
  auto moves = all_moves(start.size());
  for (int d = 0; d < depth; ++d) {
    std::vector<SearchNode> next;
    for (const auto& node : frontier)
      for (const auto& m : moves) {
        Factorization g = hurwitz_move(node.f, m.k, m.inverse);
        std::string key = factorization_key(g);
        if (seen.count(key)) continue;
        auto path = node.path;
        path.push_back(m);
        seen.emplace(key, path);
        next.push_back({std::move(g), std::move(path)});
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::optional<std::vector<HurwitzMove>> hurwitz_search(const Factorization& a, const Factorization& b, int depth) {
  int fwd = (depth + 1) / 2, bwd = depth / 2;
  auto from_a = bfs_layers(a, fwd);
  auto from_b = bfs_layers(b, bwd);
  std::optional<std::vector<HurwitzMove>> best;
  for (const auto& [key, pa] : from_a) {
    auto it = from_b.find(key);
    if (it == from_b.end()) continue;
    std::vector<HurwitzMove> path = pa;
    for (auto r = it->second.rbegin(); r != it->second.rend(); ++r) path.push_back({r->k, !r->inverse});
    auto order = [](const std::vector<HurwitzMove>& x, const std::vector<HurwitzMove>& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].k != y[i].k) return x[i].k < y[i].k;
        if (x[i].inverse != y[i].inverse) return !x[i].inverse;
      }
      return false;
    };
    if (!best || order(path, *best)) best = path;
  }
  return best;
}

inline std::vector<BraidWord> conjugators(int n, int letters) {
  std::vector<BraidWord> out{BraidWord(n)};
  std::set<std::string> seen{normal_form(BraidWord(n)).to_string()};
  std::vector<BraidWord> layer{BraidWord(n)};
  for (int len = 1; len <= letters; ++len) {
    std::vector<BraidWord> next;
    for (const auto& w : layer)
      for (int g = 1; g < n; ++g)
        for (int s : {1, -1}) {
          BraidWord c = w * BraidWord(n, {{g, s}});
          if (!seen.insert(normal_form(c).to_string()).second) continue;
          next.push_back(c);
          out.push_back(c);
        }
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Semi-decision: a certificate when found within the budgets, otherwise
/// "unknown" with a note. Shortest move sequence wins, ties broken
/// lexicographically; conjugators are tried shortest first.
inline BmtResult bmt_compare(const Factorization& f1, const Factorization& f2, int depth, int conjugator_letters = 0) {
  if (f1.strands != f2.strands) return {std::nullopt, "unknown: strand counts differ"};
  if (f1.size() != f2.size()) return {std::nullopt, "unknown: factor counts differ"};
  int t1 = 0, t2 = 0;
  for (const auto& w : f1.factors) t1 += w.exponent_sum();
  for (const auto& w : f2.factors) t2 += w.exponent_sum();
  if (t1 != t2)
    return {std::nullopt, "unknown: invariant mismatch (total exponent sums " + std::to_string(t1) + " vs " +
                              std::to_string(t2) + ")"};
  if (detail::sorted_exponent_sums(f1) != detail::sorted_exponent_sums(f2))
    return {std::nullopt, "unknown: invariant mismatch (exponent sum multisets differ)"};
  for (const auto& c : detail::conjugators(f1.strands, conjugator_letters)) {
    Factorization g = f1;
    for (auto& w : g.factors) w = w.conjugated_by(c);
    if (!equals(factorization_product(g), factorization_product(f2))) continue;
    auto path = detail::hurwitz_search(g, f2, depth);
    if (path) {
      BmtCertificate cert;
      if (!c.empty()) cert.conjugator = c;
      cert.moves = *path;
      return {cert, "found"};
    }
  }
  return {std::nullopt, "unknown: no certificate within depth " + std::to_string(depth) + " and " +
                            std::to_string(conjugator_letters) + " conjugator letters"};
}

}  // namespace curvetwist
