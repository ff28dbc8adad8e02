#pragma once

// The extension Phi_{a,b,c} of a braid representation to SM_n:
//   sigma_i^{+-1} -> rho(sigma_i^{+-1}),
//   tau_i         -> a rho(sigma_i) + b rho(sigma_i)^{-1} + c * 1.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smbraid/algebra.hpp"
#include "smbraid/error.hpp"
#include "smbraid/reps.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"

namespace smbraid {

struct PhiParams {
  Scalar a;
  Scalar b;
  Scalar c;

  std::string str() const { return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")"; }
};

/// Phi_{a,b,c} over one realization, with tau images cached.
class PhiEvaluator {
 public:
  PhiEvaluator(Realization real, PhiParams params) : real_(std::move(real)), params_(std::move(params)) {
    const AlgebraElement& one = real_.identity();
    for (int i = 1; i < real_.n(); ++i)
      tau_.push_back(params_.a * real_.sigma(i) + params_.b * real_.sigma_inv(i) + params_.c * one);
  }
  PhiEvaluator(const BraidRep& rep, PhiParams params) : PhiEvaluator(realize(rep), std::move(params)) {}
  PhiEvaluator(const BraidRep& rep, const Backend& backend, PhiParams params)
      : PhiEvaluator(realize(rep, backend), std::move(params)) {}

  const Realization& realization() const { return real_; }
  const PhiParams& params() const { return params_; }
  int n() const { return real_.n(); }
  const AlgebraElement& identity() const { return real_.identity(); }

  const AlgebraElement& tau(int i) const {
    real_.check_index(i);
    return tau_[static_cast<std::size_t>(i - 1)];
  }

  const AlgebraElement& letter(const Letter& l) const { return l.is_tau() ? tau(l.index) : real_.braid_letter(l); }

  /// Strictly left-to-right product of letter images.
  AlgebraElement operator()(const Word& w) const {
    if (w.n() != n()) throw domain_error("word has " + std::to_string(w.n()) + " strands, representation has " + std::to_string(n()));
    AlgebraElement acc = identity();
    for (const auto& l : w) acc = acc * letter(l);
    return acc;
  }

 private:
  Realization real_;
  PhiParams params_;
  std::vector<AlgebraElement> tau_;
};

inline AlgebraElement phi_eval(const PhiEvaluator& phi, const Word& w) { return phi(w); }

inline AlgebraElement phi_eval(const BraidRep& rep, const PhiParams& params, const Word& w) {
  return PhiEvaluator(rep, params)(w);
}

inline bool phi_image_equal(const PhiEvaluator& phi, const Word& w1, const Word& w2) {
  w1.same_n(w2);
  return phi(w1) == phi(w2);
}

inline bool phi_image_equal(const BraidRep& rep, const PhiParams& params, const Word& w1, const Word& w2) {
  return phi_image_equal(PhiEvaluator(rep, params), w1, w2);
}

// ---------------------------------------------------------------------------
// Relation check.

struct RelationFailure {
  int family;
  std::vector<int> indices;
  Word lhs;
  Word rhs;
  std::string lhs_image;
  std::string rhs_image;
};

struct RelationReport {
  int n = 0;
  std::array<std::size_t, 7> instances{};  // per family
  std::array<std::size_t, 7> failed{};     // per family
  std::vector<RelationFailure> failures;

  bool ok() const { return failures.empty(); }
  int families_passed() const {
    int c = 0;
    for (std::size_t f = 0; f < 7; ++f) c += failed[f] == 0 ? 1 : 0;
    return c;
  }
};

/// Evaluates both sides of every instance of the seven relation families with `eval`
/// (any callable Word -> AlgebraElement) and records exact mismatches.
template <class Eval>
RelationReport check_relations_with(int n, Eval&& eval) {
  RelationReport report;
  report.n = n;
  for (auto& rel : relation_instances(n)) {
    const auto f = static_cast<std::size_t>(rel.family - 1);
    ++report.instances[f];
    AlgebraElement lhs = eval(rel.lhs);
    AlgebraElement rhs = eval(rel.rhs);
    if (lhs == rhs) continue;
    ++report.failed[f];
    report.failures.push_back({rel.family, rel.indices, rel.lhs, rel.rhs, lhs.str(), rhs.str()});
  }
  return report;
}

inline RelationReport check_relations(const PhiEvaluator& phi) {
  return check_relations_with(phi.n(), [&phi](const Word& w) { return phi(w); });
}

inline RelationReport check_relations(const BraidRep& rep, const PhiParams& params) {
  return check_relations(PhiEvaluator(rep, params));
}

// ---------------------------------------------------------------------------
// tau_1^p sigma_1^q under a scalar image rho(sigma_1) = d.

/// sum over i+j+k = p of p!/(i! j! k!) a^i b^j c^k d^{i-j+q}.
inline Scalar tau_power_expand(const PhiParams& params, const Scalar& d, unsigned long p, long q) {
  Scalar sum(0);
  for (unsigned long i = 0; i <= p; ++i) {
    for (unsigned long j = 0; i + j <= p; ++j) {
      unsigned long k = p - i - j;
      Scalar coeff = Scalar(Rational(multinomial_coeff(p, i, j, k))) * pow(params.a, static_cast<long>(i)) *
                     pow(params.b, static_cast<long>(j)) * pow(params.c, static_cast<long>(k));
      if (coeff.is_zero()) continue;
      sum += coeff * pow(d, static_cast<long>(i) - static_cast<long>(j) + q);
    }
  }
  return sum;
}

/// (a d + b d^{-1} + c)^p d^q by repeated multiplication.
inline Scalar tau_power_direct(const PhiParams& params, const Scalar& d, unsigned long p, long q) {
  Scalar base = params.a * d + params.c;
  if (!params.b.is_zero()) base += params.b * pow(d, -1);
  Scalar acc = pow(d, q);
  for (unsigned long k = 0; k < p; ++k) acc *= base;
  return acc;
}

/// Phi(tau_1)^p rho(sigma_1)^q computed by powering inside the backend.
inline AlgebraElement tau_power_direct(const PhiEvaluator& phi, unsigned long p, long q) {
  const auto& real = phi.realization();
  AlgebraElement s = q >= 0 ? real.sigma(1) : real.sigma_inv(1);
  return alg_pow(phi.tau(1), p) * alg_pow(s, static_cast<unsigned long>(q >= 0 ? q : -q));
}

}  // namespace smbraid
