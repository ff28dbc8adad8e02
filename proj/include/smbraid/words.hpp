#pragma once

// Words in the singular braid monoid SM_n: letters sigma_i, sigma_i^{-1} and
// tau_i, the token grammar, relation invariants, the SM_2 normal form and the
// rewriting transforms used by the kernel-shape analysis.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smbraid/error.hpp"

namespace smbraid {

enum class LetterKind : std::uint8_t { sigma, sigma_inv, tau };

/// One generator letter; `index` is the 1-based strand position.
struct Letter {
  LetterKind kind = LetterKind::sigma;
  int index = 1;

  bool is_tau() const { return kind == LetterKind::tau; }

  Letter inverse() const {
    switch (kind) {
      case LetterKind::sigma: return {LetterKind::sigma_inv, index};
      case LetterKind::sigma_inv: return {LetterKind::sigma, index};
      case LetterKind::tau: break;
    }
    throw domain_error("tau_" + std::to_string(index) + " has no inverse");
  }

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter sigma(int i) { return {LetterKind::sigma, i}; }
inline Letter sigma_inv(int i) { return {LetterKind::sigma_inv, i}; }
inline Letter tau(int i) { return {LetterKind::tau, i}; }

inline bool cancels(const Letter& a, const Letter& b) {
  return a.index == b.index && ((a.kind == LetterKind::sigma && b.kind == LetterKind::sigma_inv) ||
                                (a.kind == LetterKind::sigma_inv && b.kind == LetterKind::sigma));
}

/// A finite word over the generators of SM_n. The empty word is the identity.
/// Words are literal letter sequences; nothing here normalizes them unless
/// asked to.
class Word {
 public:
  explicit Word(int n) : n_(n) {
    if (n < 2) throw domain_error("strand count must be at least 2, got " + std::to_string(n));
  }
  Word(int n, std::vector<Letter> letters) : Word(n) {
    for (const auto& l : letters) check(l);
    letters_ = std::move(letters);
  }

  int n() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool is_braid() const {
    for (const auto& l : letters_)
      if (l.is_tau()) return false;
    return true;
  }

  Word& push(Letter l) {
    check(l);
    letters_.push_back(l);
    return *this;
  }

  Word& append(const Word& o) {
    same_n(o);
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }

  /// Group inverse of a braid word: reversed, each letter inverted.
  Word inverse() const {
    Word r(n_);
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
    return r;
  }

  Word power(long k) const {
    if (k < 0) return inverse().power(-k);
    Word r(n_);
    for (long i = 0; i < k; ++i) r.append(*this);
    return r;
  }

  friend Word operator*(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;

  void same_n(const Word& o) const {
    if (o.n_ != n_) throw domain_error("words over different strand counts");
  }

 private:
  void check(const Letter& l) const {
    if (l.index < 1 || l.index > n_ - 1)
      throw domain_error("generator index " + std::to_string(l.index) + " out of range for n = " + std::to_string(n_));
  }

  int n_;
  std::vector<Letter> letters_;
};

/// sigma_i^e as a word (negative e gives inverse letters).
inline Word sigma_power(int n, int i, long e) {
  Word w(n);
  for (long k = 0; k < (e < 0 ? -e : e); ++k) w.push(e < 0 ? sigma_inv(i) : sigma(i));
  return w;
}

inline Word tau_power(int n, int i, long e) {
  if (e < 0) throw domain_error("tau has no negative powers");
  Word w(n);
  for (long k = 0; k < e; ++k) w.push(tau(i));
  return w;
}

/// tau_1^p sigma_1^q in SM_n.
inline Word tau_sigma_word(int n, long p, long q) { return tau_power(n, 1, p) * sigma_power(n, 1, q); }

// ---------------------------------------------------------------------------
// Token grammar: `s<k>` sigma_k, `S<k>` its inverse, `t<k>` tau_k, `x` the
// product sigma_1 ... sigma_{n-1}, `X` its inverse.

inline Word x_word(int n) {
  Word w(n);
  for (int i = 1; i < n; ++i) w.push(sigma(i));
  return w;
}

inline Word parse_word(std::string_view text, int n) {
  Word w(n);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "x") {
      w.append(x_word(n));
      continue;
    }
    if (tok == "X") {
      w.append(x_word(n).inverse());
      continue;
    }
    LetterKind kind;
    switch (tok[0]) {
      case 's': kind = LetterKind::sigma; break;
      case 'S': kind = LetterKind::sigma_inv; break;
      case 't': kind = LetterKind::tau; break;
      default: throw parse_error("unknown token '" + tok + "'");
    }
    std::string digits = tok.substr(1);
    if (digits.empty() || digits.size() > 9 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("unknown token '" + tok + "'");
    int index = std::stoi(digits);
    if (index < 1 || index > n - 1)
      throw domain_error("index out of range in token '" + tok + "' for n = " + std::to_string(n));
    w.push({kind, index});
  }
  return w;
}

inline std::string to_string(const Letter& l) {
  switch (l.kind) {
    case LetterKind::sigma: return "s" + std::to_string(l.index);
    case LetterKind::sigma_inv: return "S" + std::to_string(l.index);
    case LetterKind::tau: return "t" + std::to_string(l.index);
  }
  return {};
}

/// Canonical serialization back to the token grammar (no x-folding).
inline std::string to_string(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '[' << to_string(w) << ']'; }

// ---------------------------------------------------------------------------
// Invariants preserved by every defining relation.

inline std::size_t tau_count(const Word& w) {
  std::size_t c = 0;
  for (const auto& l : w) c += l.is_tau() ? 1 : 0;
  return c;
}

inline long sigma_exponent_sum(const Word& w) {
  long s = 0;
  for (const auto& l : w) {
    if (l.kind == LetterKind::sigma) ++s;
    if (l.kind == LetterKind::sigma_inv) --s;
  }
  return s;
}

/// 0-based image array; composition (g*h)[k] = g[h[k]].
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Permutation transposition(int n, int i) {
  auto p = identity_permutation(n);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

inline Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) r[k] = g[static_cast<std::size_t>(h[k])];
  return r;
}

/// tau_i moves strands exactly like sigma_i.
inline Permutation permutation_image(const Word& w) {
  auto p = identity_permutation(w.n());
  for (const auto& l : w) std::swap(p[static_cast<std::size_t>(l.index - 1)], p[static_cast<std::size_t>(l.index)]);
  return p;
}

// ---------------------------------------------------------------------------
// SM_2 is the free commutative product N x Z: tau_1^p sigma_1^q.

struct SM2NormalForm {
  long p = 0;
  long q = 0;

  friend bool operator==(const SM2NormalForm&, const SM2NormalForm&) = default;
  friend SM2NormalForm operator+(SM2NormalForm a, const SM2NormalForm& b) { return {a.p + b.p, a.q + b.q}; }
};

inline SM2NormalForm sm2_normal_form(const Word& w) {
  if (w.n() != 2) throw domain_error("SM_2 normal form needs n = 2, got " + std::to_string(w.n()));
  return {static_cast<long>(tau_count(w)), sigma_exponent_sum(w)};
}

inline std::ostream& operator<<(std::ostream& os, const SM2NormalForm& nf) {
  return os << '(' << nf.p << ", " << nf.q << ')';
}

// ---------------------------------------------------------------------------
// Defining relations of SM_n, families 1-7, as explicit word pairs.

struct RelationInstance {
  int family;               // 1..7
  std::vector<int> indices; // generator indices the instance was built from
  Word lhs;
  Word rhs;
};

inline std::vector<RelationInstance> relation_instances(int n) {
  std::vector<RelationInstance> out;
  auto word = [n](std::initializer_list<Letter> ls) { return Word(n, std::vector<Letter>(ls)); };
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back({1, {i}, word({sigma(i), sigma(i + 1), sigma(i)}), word({sigma(i + 1), sigma(i), sigma(i + 1)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({2, {i, j}, word({sigma(i), sigma(j)}), word({sigma(j), sigma(i)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({3, {i, j}, word({tau(i), tau(j)}), word({tau(j), tau(i)})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2) out.push_back({4, {i, j}, word({tau(i), sigma(j)}), word({sigma(j), tau(i)})});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({5, {i}, word({tau(i), sigma(i)}), word({sigma(i), tau(i)})});
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back({6, {i}, word({sigma(i), sigma(i + 1), tau(i)}), word({tau(i + 1), sigma(i), sigma(i + 1)})});
  for (int i = 1; i + 1 <= n - 1; ++i)
    out.push_back({7, {i}, word({sigma(i + 1), sigma(i), tau(i + 1)}), word({tau(i), sigma(i + 1), sigma(i)})});
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting towards the generating set {sigma_1, x, tau_1}.

/// w_i with tau_i = w_i tau_1 w_i^{-1}: w_1 = e, w_{i+1} = sigma_i sigma_{i+1} w_i.
inline Word rewrite_tau_to_tau1(int i, int n) {
  if (i < 1 || i > n - 1) throw domain_error("tau index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
  Word w(n);
  for (int k = 1; k < i; ++k) w = Word(n, {sigma(k), sigma(k + 1)}) * w;
  return w;
}

enum class XLetterKind : std::uint8_t { sigma1, sigma1_inv, x, x_inv, tau1 };

/// Word over the generating set {sigma_1^{+-1}, x^{+-1}, tau_1}.
struct XWord {
  int n;
  std::vector<XLetterKind> letters;

  /// Expands x into sigma_1 ... sigma_{n-1}.
  Word expand() const {
    Word w(n);
    for (auto l : letters) {
      switch (l) {
        case XLetterKind::sigma1: w.push(sigma(1)); break;
        case XLetterKind::sigma1_inv: w.push(sigma_inv(1)); break;
        case XLetterKind::x: w.append(x_word(n)); break;
        case XLetterKind::x_inv: w.append(x_word(n).inverse()); break;
        case XLetterKind::tau1: w.push(tau(1)); break;
      }
    }
    return w;
  }

  std::string str() const {
    std::string out;
    for (auto l : letters) {
      if (!out.empty()) out += ' ';
      switch (l) {
        case XLetterKind::sigma1: out += "s1"; break;
        case XLetterKind::sigma1_inv: out += "S1"; break;
        case XLetterKind::x: out += "x"; break;
        case XLetterKind::x_inv: out += "X"; break;
        case XLetterKind::tau1: out += "t1"; break;
      }
    }
    return out;
  }
};

namespace detail {

inline void append_braid_letter(std::vector<XLetterKind>& out, const Letter& l) {
  // sigma_i^{+-1} = x^{i-1} sigma_1^{+-1} x^{-(i-1)}
  for (int k = 1; k < l.index; ++k) out.push_back(XLetterKind::x);
  out.push_back(l.kind == LetterKind::sigma ? XLetterKind::sigma1 : XLetterKind::sigma1_inv);
  for (int k = 1; k < l.index; ++k) out.push_back(XLetterKind::x_inv);
}

}  // namespace detail

inline XWord to_sigma1_x_generators(const Word& w) {
  XWord out{w.n(), {}};
  for (const auto& l : w) {
    if (!l.is_tau()) {
      detail::append_braid_letter(out.letters, l);
      continue;
    }
    Word conj = rewrite_tau_to_tau1(l.index, w.n());
    for (const auto& c : conj) detail::append_braid_letter(out.letters, c);
    out.letters.push_back(XLetterKind::tau1);
    for (const auto& c : conj.inverse()) detail::append_braid_letter(out.letters, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// tau_1 block decomposition and the v-power shape.

/// Concatenation that cancels letter/inverse pairs at the junction only.
inline Word concat_reduced(const Word& a, const Word& b) {
  a.same_n(b);
  std::vector<Letter> left(a.begin(), a.end());
  std::size_t j = 0;
  while (!left.empty() && j < b.size() && cancels(left.back(), b[j])) {
    left.pop_back();
    ++j;
  }
  left.insert(left.end(), b.letters().begin() + static_cast<std::ptrdiff_t>(j), b.letters().end());
  return Word(a.n(), std::move(left));
}

struct TauBlock {
  long r;  // exponent of tau_1
  Word u;  // braid word following it

  friend bool operator==(const TauBlock&, const TauBlock&) = default;
};

/// w = prefix * tau_1^{r_1} u_1 ... tau_1^{r_k} u_k with every r_i >= 1.
/// `prefix` is the leading braid block; conjugating by it rotates the word so
/// that it starts with tau_1.
struct Lemma9Form {
  int n;
  Word prefix;
  std::vector<TauBlock> blocks;

  Word assemble() const {
    Word w = prefix;
    for (const auto& b : blocks) w.append(tau_power(n, 1, b.r)).append(b.u);
    return w;
  }

  /// prefix^{-1} w prefix, which starts with tau_1 when w has any tau.
  Word rotated() const {
    Word w(n);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      w.append(tau_power(n, 1, blocks[k].r)).append(blocks[k].u);
      if (k + 1 == blocks.size()) w.append(prefix);
    }
    return w;
  }
};

inline Word free_reduce(const Word& w);

inline Lemma9Form lemma9_decompose(const Word& w) {
  const int n = w.n();
  // Replace every tau_i by w_i tau_1 w_i^{-1}, then group the result.
  Word flat(n);
  for (const auto& l : w) {
    if (!l.is_tau()) {
      flat.push(l);
      continue;
    }
    Word conj = rewrite_tau_to_tau1(l.index, n);
    flat.append(conj).push(tau(1)).append(conj.inverse());
  }

  Lemma9Form out{n, Word(n), {}};
  for (const auto& l : flat) {
    if (l.is_tau()) {
      if (out.blocks.empty() || !out.blocks.back().u.empty())
        out.blocks.push_back({0, Word(n)});
      ++out.blocks.back().r;
    } else if (out.blocks.empty()) {
      out.prefix.push(l);
    } else {
      out.blocks.back().u.push(l);
    }
  }
  out.prefix = free_reduce(out.prefix);
  for (auto& b : out.blocks) b.u = free_reduce(b.u);
  return out;
}

struct ShapeBlock {
  long r;  // 0 <= r < p
  long m;  // power of v
  Word u;

  friend bool operator==(const ShapeBlock&, const ShapeBlock&) = default;
};

/// prefix * prod tau_1^{r_i} v^{m_i} u_i with v = tau_1^p sigma_1^q.
struct ShapeForm {
  int n;
  long p;
  long q;
  Word prefix;
  std::vector<ShapeBlock> blocks;

  Word v() const { return tau_sigma_word(n, p, q); }

  Word assemble() const {
    Word w = prefix;
    Word vw = v();
    for (const auto& b : blocks) w.append(tau_power(n, 1, b.r)).append(vw.power(b.m)).append(b.u);
    return w;
  }
};

/// Splits each tau_1^{s} as tau_1^{s mod p} v^{s div p} sigma_1^{-(s div p) q}
/// and merges the sigma_1 power into the following braid block.
inline ShapeForm theorem10_shape(const Lemma9Form& form, long p, long q) {
  if (p < 1) throw domain_error("theorem10_shape needs p >= 1");
  ShapeForm out{form.n, p, q, form.prefix, {}};
  for (const auto& b : form.blocks) {
    long m = b.r / p;
    long r = b.r % p;
    out.blocks.push_back({r, m, concat_reduced(sigma_power(form.n, 1, -m * q), b.u)});
  }
  return out;
}

inline ShapeForm theorem10_shape(const Word& w, long p, long q) { return theorem10_shape(lemma9_decompose(w), p, q); }

/// Drops every v^{m_i} factor.
inline Word strip_v_powers(const ShapeForm& sf) {
  Word w = sf.prefix;
  for (const auto& b : sf.blocks) w.append(tau_power(sf.n, 1, b.r)).append(b.u);
  return w;
}

/// u w u^{-1}.
inline Word conjugate(const Word& w, const Word& u) {
  if (!u.is_braid()) throw domain_error("conjugator must be a braid word");
  return u * w * u.inverse();
}

/// Free reduction of adjacent sigma_i / sigma_i^{-1} pairs.
inline Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(w.n(), std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration and random generation.

/// Braid alphabet in enumeration order: s1, S1, s2, S2, ...
inline std::vector<Letter> braid_alphabet(int n) {
  std::vector<Letter> out;
  for (int i = 1; i < n; ++i) {
    out.push_back(sigma(i));
    out.push_back(sigma_inv(i));
  }
  return out;
}

/// Calls f(word) for every freely reduced braid word of length <= max_len,
/// shortest first, lexicographic in the alphabet order within a length.
/// Stops early when f returns false.
template <class F>
void for_each_braid_word(int n, std::size_t max_len, F&& f) {
  const auto alphabet = braid_alphabet(n);
  std::vector<Word> level{Word(n)};
  if (!f(level.front())) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (const auto& l : alphabet) {
        if (!w.empty() && cancels(w.letters().back(), l)) continue;
        Word ext = w;
        ext.push(l);
        if (!f(ext)) return;
        next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
}

inline std::vector<Word> enumerate_braid_words(int n, std::size_t max_len) {
  if (n < 2) throw domain_error("strand count must be at least 2");
  std::vector<Word> out;
  for_each_braid_word(n, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

template <class Rng>
Word random_braid_word(int n, std::size_t len, Rng& rng) {
  std::uniform_int_distribution<int> idx(1, n - 1), sign(0, 1);
  Word w(n);
  for (std::size_t k = 0; k < len; ++k) w.push(sign(rng) ? sigma(idx(rng)) : sigma_inv(idx(rng)));
  return w;
}

template <class Rng>
Word random_sm_word(int n, std::size_t len, Rng& rng) {
  std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 2);
  Word w(n);
  for (std::size_t k = 0; k < len; ++k) w.push({static_cast<LetterKind>(kind(rng)), idx(rng)});
  return w;
}

}  // namespace smbraid
