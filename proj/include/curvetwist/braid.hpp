#pragma once

// Braid words on n strands, Garside left normal form, and the Artin action
// on the free group. Words compose left to right.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvetwist/error.hpp"

namespace curvetwist {

struct Letter {
  int gen;   // 1..n-1
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int n, std::vector<Letter> letters = {}) : n_(n), letters_(std::move(letters)) {
    if (n < 2) throw DomainError("braid words need at least 2 strands");
    for (const auto& l : letters_)
      if (l.gen < 1 || l.gen >= n || (l.sign != 1 && l.sign != -1))
        throw DomainError("braid letter out of range for " + std::to_string(n) + " strands");
  }

  static BraidWord generator(int n, int i, int power = 1) {
    std::vector<Letter> v(std::abs(power), Letter{i, power > 0 ? 1 : -1});
    return BraidWord(n, std::move(v));
  }

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int exponent_sum() const {
    int s = 0;
    for (const auto& l : letters_) s += l.sign;
    return s;
  }

  BraidWord inverse() const {
    std::vector<Letter> v(letters_.rbegin(), letters_.rend());
    for (auto& l : v) l.sign = -l.sign;
    return BraidWord(n_, std::move(v));
  }

  /// Adjacent s s^-1 pairs cancelled.
  BraidWord freely_reduced() const {
    std::vector<Letter> st;
    for (const auto& l : letters_) {
      if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign)
        st.pop_back();
      else
        st.push_back(l);
    }
    return BraidWord(n_, std::move(st));
  }

  /// perm[k] = strand (by starting position) that ends at position k.
  std::vector<int> permutation() const {
    std::vector<int> p(n_);
    std::iota(p.begin(), p.end(), 0);
    for (const auto& l : letters_) std::swap(p[l.gen - 1], p[l.gen]);
    return p;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.n_ != b.n_) throw DomainError("braid product: strand counts differ");
    std::vector<Letter> v = a.letters_;
    v.insert(v.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.n_, std::move(v));
  }

  /// c^-1 w c
  BraidWord conjugated_by(const BraidWord& c) const { return c.inverse() * *this * c; }

  /// Tokens sK or sK^E with runs collapsed; "e" for the empty word.
  std::string to_string() const {
    if (letters_.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < letters_.size();) {
      std::size_t j = i;
      int e = 0;
      while (j < letters_.size() && letters_[j].gen == letters_[i].gen && letters_[j].sign == letters_[i].sign) {
        e += letters_[j].sign;
        ++j;
      }
      if (!out.empty()) out += ' ';
      out += "s" + std::to_string(letters_[i].gen);
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
    return out;
  }

  /// One token per run, as used in factorization JSON.
  std::vector<std::string> tokens() const {
    std::vector<std::string> t;
    std::istringstream in(to_string());
    for (std::string s; in >> s;) t.push_back(s);
    return t;
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) = default;

 private:
  int n_ = 2;
  std::vector<Letter> letters_;
};

inline BraidWord parse_braid(std::string_view text, int n) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_empty = false;
  std::size_t count = 0;
  while (in >> tok) {
    ++count;
    if (tok == "e") {
      saw_empty = true;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("malformed braid token '" + tok + "'");
    std::size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed braid token '" + tok + "'");
    int e = 1;
    if (caret != std::string::npos) {
      std::string ex = tok.substr(caret + 1);
      std::size_t start = (!ex.empty() && ex[0] == '-') ? 1 : 0;
      if (ex.size() == start ||
          !std::all_of(ex.begin() + start, ex.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed braid exponent in '" + tok + "'");
      e = std::stoi(ex);
      if (e == 0) throw ParseError("zero braid exponent in '" + tok + "'");
    }
    int k = std::stoi(idx);
    if (k < 1 || k >= n)
      throw DomainError("generator s" + idx + " out of range for " + std::to_string(n) + " strands");
    for (int r = 0; r < std::abs(e); ++r) letters.push_back({k, e > 0 ? 1 : -1});
  }
  if (saw_empty && count > 1) throw ParseError("'e' must stand alone");
  if (count == 0) throw ParseError("empty braid text; use 'e' for the identity");
  return BraidWord(n, std::move(letters));
}

/// (s1 s2 ... s_{n-1})^n
inline BraidWord full_twist(int n) {
  if (n < 2) throw DomainError("full_twist needs n >= 2");
  std::vector<Letter> v;
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) v.push_back({i, 1});
  return BraidWord(n, std::move(v));
}

/// s_i^(2m), the local monodromy of two smooth branches with contact order m.
inline BraidWord local_monodromy_word(int m, int i, int n) {
  if (m < 1 || m > 4) throw DomainError("local_monodromy_word: multiplicity must be 1..4");
  if (i < 1 || i >= n) throw DomainError("local_monodromy_word: generator out of range");
  return BraidWord::generator(n, i, 2 * m);
}

// ---------------------------------------------------------------------------
// Garside normal form

/// Permutation braid: perm[k] = starting position of the strand that ends at k.
using Perm = std::vector<int>;

namespace garside {

inline Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm delta(int n) {
  Perm p(n);
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[b[k]];
  return c;
}

inline Perm swap_at(Perm p, int j) {
  std::swap(p[j - 1], p[j]);
  return p;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = static_cast<int>(k);
  return q;
}

// s_j can be split off on the right
inline bool finishes_with(const Perm& p, int j) { return p[j - 1] > p[j]; }

// s_j can be split off on the left
inline bool starts_with(const Perm& p, int j) {
  Perm q = inverse(p);
  return q[j - 1] > q[j];
}

// Delta x Delta^-1
inline Perm flip(const Perm& p) {
  int n = static_cast<int>(p.size());
  Perm q(n);
  for (int k = 0; k < n; ++k) q[k] = n - 1 - p[n - 1 - k];
  return q;
}

/// Moves generators from b to a until (a, b) is left-weighted.
inline bool left_weight(Perm& a, Perm& b) {
  int n = static_cast<int>(a.size());
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int j = 1; j < n; ++j) {
      if (starts_with(b, j) && !finishes_with(a, j)) {
        a = swap_at(a, j);
        b = compose(swap_at(identity(n), j), b);
        again = changed = true;
      }
    }
  }
  return changed;
}

/// Positive word of a permutation braid.
inline std::vector<int> positive_word(Perm p) {
  std::vector<int> rev;
  int n = static_cast<int>(p.size());
  for (bool again = true; again;) {
    again = false;
    for (int j = 1; j < n; ++j)
      if (finishes_with(p, j)) {
        rev.push_back(j);
        std::swap(p[j - 1], p[j]);
        again = true;
        break;
      }
  }
  return {rev.rbegin(), rev.rend()};
}

}  // namespace garside

/// Delta^inf A_1 ... A_r with every A_i a proper nontrivial permutation braid
/// and each pair (A_i, A_{i+1}) left-weighted.
struct NormalForm {
  int strands = 2;
  int inf = 0;
  std::vector<Perm> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  int sup() const { return inf + static_cast<int>(factors.size()); }

  std::string to_string() const {
    std::string out = "D^" + std::to_string(inf);
    for (const auto& f : factors) {
      out += " [";
      for (std::size_t k = 0; k < f.size(); ++k) out += (k ? "," : "") + std::to_string(f[k]);
      out += "]";
    }
    return out;
  }

  /// Canonical word: Delta^inf written positively or negatively, then the factors.
  BraidWord to_word() const {
    std::vector<Letter> v;
    auto dw = garside::positive_word(garside::delta(strands));
    for (int r = 0; r < std::abs(inf); ++r) {
      if (inf > 0)
        for (int g : dw) v.push_back({g, 1});
      else
        for (auto it = dw.rbegin(); it != dw.rend(); ++it) v.push_back({*it, -1});
    }
    for (const auto& f : factors)
      for (int g : garside::positive_word(f)) v.push_back({g, 1});
    return BraidWord(strands, std::move(v));
  }
};

inline NormalForm normal_form(const BraidWord& w) {
  int n = w.strands();
  NormalForm nf{n, 0, {}};
  const Perm id = garside::identity(n), D = garside::delta(n);
  for (const auto& l : w.letters()) {
    Perm s = garside::swap_at(id, l.gen);
    if (l.sign > 0) {
      nf.factors.push_back(s);
    } else {
      for (auto& f : nf.factors) f = garside::flip(f);
      --nf.inf;
      nf.factors.push_back(garside::compose(D, s));
    }
  }
  auto& f = nf.factors;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) again = garside::left_weight(f[i], f[i + 1]) || again;
    while (!f.empty() && f.front() == D) {
      f.erase(f.begin());
      ++nf.inf;
    }
    while (!f.empty() && f.back() == id) f.pop_back();
    for (std::size_t i = 0; i < f.size();) {
      if (f[i] == id) {
        f.erase(f.begin() + i);
        again = true;
      } else {
        ++i;
      }
    }
  }
  return nf;
}

inline bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("equals: strand counts differ");
  return normal_form(a) == normal_form(b);
}

// ---------------------------------------------------------------------------
// Free group and the Artin action

class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  FreeGroupWord(int rank, std::vector<Letter> letters) : rank_(rank) {
    for (const auto& l : letters) {
      if (l.gen < 1 || l.gen > rank) throw DomainError("free group letter out of range");
      push(l);
    }
  }
  static FreeGroupWord generator(int rank, int i) { return FreeGroupWord(rank, {{i, 1}}); }

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }

  FreeGroupWord inverse() const {
    std::vector<Letter> v(letters_.rbegin(), letters_.rend());
    for (auto& l : v) l.sign = -l.sign;
    return FreeGroupWord(rank_, v);
  }
  friend FreeGroupWord operator*(FreeGroupWord a, const FreeGroupWord& b) {
    for (const auto& l : b.letters_) a.push(l);
    return a;
  }
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += "g" + std::to_string(l.gen) + (l.sign < 0 ? "^-1" : "");
    }
    return out;
  }

 private:
  void push(const Letter& l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  int rank_ = 0;
  std::vector<Letter> letters_;
};

namespace detail {

// image of g_k under a single letter
inline FreeGroupWord letter_image(int rank, const Letter& s, int k) {
  int i = s.gen;
  if (s.sign > 0) {
    if (k == i) return FreeGroupWord(rank, {{i, 1}, {i + 1, 1}, {i, -1}});
    if (k == i + 1) return FreeGroupWord(rank, {{i, 1}});
  } else {
    if (k == i) return FreeGroupWord(rank, {{i + 1, 1}});
    if (k == i + 1) return FreeGroupWord(rank, {{i + 1, -1}, {i, 1}, {i + 1, 1}});
  }
  return FreeGroupWord::generator(rank, k);
}

}  // namespace detail

/// Right action, letter by letter: s_i sends g_i to g_i g_{i+1} g_i^-1 and
/// g_{i+1} to g_i.
inline FreeGroupWord artin_action(const BraidWord& w, const FreeGroupWord& g) {
  if (g.rank() != w.strands()) throw DomainError("artin_action: free group rank differs from strand count");
  int n = w.strands();
  FreeGroupWord cur = g;
  for (const auto& s : w.letters()) {
    FreeGroupWord next(n, {});
    for (const auto& l : cur.letters()) {
      FreeGroupWord img = detail::letter_image(n, s, l.gen);
      next = next * (l.sign > 0 ? img : img.inverse());
    }
    cur = next;
  }
  return cur;
}

/// Images of g_1..g_n.
inline std::vector<FreeGroupWord> artin_images(const BraidWord& w) {
  std::vector<FreeGroupWord> out;
  for (int k = 1; k <= w.strands(); ++k) out.push_back(artin_action(w, FreeGroupWord::generator(w.strands(), k)));
  return out;
}

}  // namespace curvetwist
