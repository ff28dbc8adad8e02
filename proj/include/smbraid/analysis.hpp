#pragma once

// Bounded faithfulness analysis for Phi_{a,b,c}: unfaithfulness witnesses,
// SM_2 kernel searches, the scalar multinomial criterion, the cyclic-quotient
// comparison and conjugation/shape property checks.
//
// Every search here is bounded. An empty result is evidence, never a proof.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "smbraid/algebra.hpp"
#include "smbraid/error.hpp"
#include "smbraid/phi.hpp"
#include "smbraid/reps.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"

namespace smbraid {

/// Worker threads for searches: hardware concurrency, capped by the
/// SMBRAID_THREADS environment variable when set.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SMBRAID_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// ---------------------------------------------------------------------------
// Witnesses.

/// Word invariant that separates two elements of SM_n.
enum class Certificate { tau_count, sigma_exponent, permutation, sm2_normal_form };

inline const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::tau_count: return "tau_count";
    case Certificate::sigma_exponent: return "sigma_exponent";
    case Certificate::permutation: return "permutation";
    case Certificate::sm2_normal_form: return "sm2_normal_form";
  }
  return "";
}

/// All invariants on which w1 and w2 differ; nonempty proves w1 != w2.
inline std::vector<Certificate> distinctness_certificates(const Word& w1, const Word& w2) {
  w1.same_n(w2);
  std::vector<Certificate> out;
  if (tau_count(w1) != tau_count(w2)) out.push_back(Certificate::tau_count);
  if (sigma_exponent_sum(w1) != sigma_exponent_sum(w2)) out.push_back(Certificate::sigma_exponent);
  if (permutation_image(w1) != permutation_image(w2)) out.push_back(Certificate::permutation);
  if (w1.n() == 2 && !(sm2_normal_form(w1) == sm2_normal_form(w2))) out.push_back(Certificate::sm2_normal_form);
  return out;
}

struct UnfaithfulnessWitness {
  Word w1;
  Word w2;
  std::vector<Certificate> certificates;
  AlgebraElement image;
};

/// Checks both halves of the witness property and packages the result.
inline UnfaithfulnessWitness make_witness(const PhiEvaluator& phi, const Word& w1, const Word& w2) {
  auto certs = distinctness_certificates(w1, w2);
  if (certs.empty()) throw domain_error("no invariant separates " + to_string(w1) + " and " + to_string(w2));
  AlgebraElement i1 = phi(w1);
  if (!(i1 == phi(w2))) throw domain_error("images of " + to_string(w1) + " and " + to_string(w2) + " differ");
  return {w1, w2, std::move(certs), std::move(i1)};
}

/// Which single parameter is nonzero: Phi_{a,0,0}, Phi_{0,b,0} or Phi_{0,0,c}.
enum class WitnessMode { a, b, c };

inline PhiParams params_for(WitnessMode mode, const Scalar& value) {
  switch (mode) {
    case WitnessMode::a: return {value, Scalar(0), Scalar(0)};
    case WitnessMode::b: return {Scalar(0), value, Scalar(0)};
    case WitnessMode::c: return {Scalar(0), Scalar(0), value};
  }
  return {};
}

/// The braid word matched against tau_1^r: sigma_1^r, sigma_1^{-r} or empty.
inline Word partner_word(WitnessMode mode, int n, long r) {
  switch (mode) {
    case WitnessMode::a: return sigma_power(n, 1, r);
    case WitnessMode::b: return sigma_power(n, 1, -r);
    case WitnessMode::c: return Word(n);
  }
  return Word(n);
}

/// value^r = 1: tau_1^r and its partner have equal images.
inline UnfaithfulnessWitness witness_root_of_unity(const BraidRep& rep, WitnessMode mode, const Scalar& value, long r) {
  if (r < 1) throw domain_error("root-of-unity witness needs r >= 1");
  if (!pow(value, r).is_one()) throw domain_error(value.str() + "^" + std::to_string(r) + " != 1");
  PhiEvaluator phi(rep, params_for(mode, value));
  return make_witness(phi, tau_power(rep.n(), 1, r), partner_word(mode, rep.n(), r));
}

inline UnfaithfulnessWitness witness_a1(const BraidRep& rep, const Scalar& a, long r) {
  return witness_root_of_unity(rep, WitnessMode::a, a, r);
}

struct ScalarHit {
  Word v;
  long s;
};

/// Breadth-first search over the Cayley graph of rho(B_n) for v with
/// rho(v) = value^{-s} * 1, 1 <= s <= s_max. States are deduplicated by the
/// canonical key of their image, so each group element is tested once, via a
/// shortest word. Negative s need no separate search: v^{-1} then works for -s.
inline std::optional<ScalarHit> find_scalar_witness(const BraidRep& rep, const Scalar& value, long s_max,
                                                    std::size_t len_max) {
  if (!value.is_unit()) throw domain_error(value.str() + " is not a unit");
  if (root_of_unity_order(value, 2)) throw domain_error(value.str() + " is a root of unity; use the root-of-unity witness");
  Realization real = realize(rep);
  std::vector<Scalar> targets;
  for (long s = 1; s <= s_max; ++s) targets.push_back(pow(value, -s));

  auto test = [&](const AlgebraElement& image) -> std::optional<long> {
    auto d = image.as_scalar();
    if (!d) return std::nullopt;
    for (std::size_t k = 0; k < targets.size(); ++k)
      if (*d == targets[k]) return static_cast<long>(k + 1);
    return std::nullopt;
  };

  struct State {
    Word word;
    AlgebraElement image;
  };
  std::unordered_set<std::string> seen;
  std::vector<State> level{{Word(rep.n()), real.identity()}};
  seen.insert(real.identity().key());
  if (auto s = test(real.identity())) return ScalarHit{Word(rep.n()), *s};
  const auto alphabet = braid_alphabet(rep.n());
  for (std::size_t len = 1; len <= len_max && !level.empty(); ++len) {
    std::vector<State> next;
    for (const auto& st : level) {
      for (const auto& l : alphabet) {
        AlgebraElement image = st.image * real.braid_letter(l);
        if (!seen.insert(image.key()).second) continue;
        Word w = st.word;
        w.push(l);
        if (auto s = test(image)) return ScalarHit{w, *s};
        next.push_back({std::move(w), std::move(image)});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

/// rho(v) = value^{-s} * 1 with s >= 1: tau_1^s v and the partner of s agree.
inline UnfaithfulnessWitness witness_scalar(const BraidRep& rep, WitnessMode mode, const Scalar& value, const Word& v,
                                            long s) {
  if (s < 1) throw domain_error("scalar witness needs s >= 1; use the inverse of v for negative s");
  if (!v.is_braid()) throw domain_error("v must be a braid word");
  auto rho_v = rep_eval(rep, v).as_scalar();
  if (!rho_v || !(*rho_v == pow(value, -s)))
    throw domain_error("rho(" + to_string(v) + ") is not " + value.str() + "^" + std::to_string(-s) + " times the identity");
  PhiEvaluator phi(rep, params_for(mode, value));
  return make_witness(phi, tau_power(rep.n(), 1, s) * v, partner_word(mode, rep.n(), s));
}

inline UnfaithfulnessWitness witness_a2(const BraidRep& rep, const Scalar& a, const Word& v, long s) {
  return witness_scalar(rep, WitnessMode::a, a, v, s);
}

// ---------------------------------------------------------------------------
// SM_2 kernel search.

struct KernelReport {
  long p_max = 0;
  long q_max = 0;
  bool bounded = true;
  std::vector<SM2NormalForm> hits;           // sorted by (p, |q|, positive q first)
  std::optional<SM2NormalForm> minimal_generator;
  bool cyclic_verified = false;
};

inline bool hit_order(const SM2NormalForm& x, const SM2NormalForm& y) {
  if (x.p != y.p) return x.p < y.p;
  long ax = x.q < 0 ? -x.q : x.q, ay = y.q < 0 ? -y.q : y.q;
  if (ax != ay) return ax < ay;
  return x.q > y.q;
}

/// Fills ordering and the minimal generator (smallest p >= 1, then |q|, then q > 0).
inline void finalize_hits(KernelReport& report) {
  std::sort(report.hits.begin(), report.hits.end(), hit_order);
  report.minimal_generator.reset();
  for (const auto& h : report.hits) {
    if (h.p >= 1) {
      report.minimal_generator = h;
      break;
    }
  }
}

/// Every hit is (m p, m q) for an integer m >= 1, where (p, q) is the minimal
/// generator.
inline bool verify_cyclic_structure(const KernelReport& report) {
  if (!report.minimal_generator) throw domain_error("kernel report has no minimal generator");
  const auto [p, q] = *report.minimal_generator;
  for (const auto& h : report.hits) {
    if (h.p % p != 0) return false;
    long m = h.p / p;
    if (m < 1 || h.q != m * q) return false;
  }
  return true;
}

/// Tests Phi(tau_1^p sigma_1^q) = 1 for 0 <= p <= p_max, |q| <= q_max
/// (q != 0 on the p = 0 row). Rows are independent and run on worker threads.
inline KernelReport kernel_search_sm2(const PhiEvaluator& phi, long p_max, long q_max) {
  if (phi.n() != 2) throw domain_error("SM_2 kernel search needs n = 2");
  if (p_max < 0 || q_max < 0) throw domain_error("search bounds must be nonnegative");
  const auto& real = phi.realization();

  // sigma_1^q for q in [-q_max, q_max], index q + q_max.
  std::vector<AlgebraElement> sigma_pows(static_cast<std::size_t>(2 * q_max + 1), real.identity());
  for (long q = 1; q <= q_max; ++q) {
    sigma_pows[static_cast<std::size_t>(q_max + q)] = sigma_pows[static_cast<std::size_t>(q_max + q - 1)] * real.sigma(1);
    sigma_pows[static_cast<std::size_t>(q_max - q)] = sigma_pows[static_cast<std::size_t>(q_max - q + 1)] * real.sigma_inv(1);
  }
  std::vector<AlgebraElement> tau_pows{real.identity()};
  for (long p = 1; p <= p_max; ++p) tau_pows.push_back(tau_pows.back() * phi.tau(1));

  std::vector<std::vector<SM2NormalForm>> rows(static_cast<std::size_t>(p_max + 1));
  auto run_row = [&](long p) {
    auto& out = rows[static_cast<std::size_t>(p)];
    for (long q = -q_max; q <= q_max; ++q) {
      if (p == 0 && q == 0) continue;
      if ((tau_pows[static_cast<std::size_t>(p)] * sigma_pows[static_cast<std::size_t>(q + q_max)]).is_identity())
        out.push_back({p, q});
    }
  };

  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(p_max + 1));
  if (workers <= 1) {
    for (long p = 0; p <= p_max; ++p) run_row(p);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (long p = w; p <= p_max; p += workers) run_row(p);
      });
    for (auto& t : pool) t.join();
  }

  KernelReport report;
  report.p_max = p_max;
  report.q_max = q_max;
  for (auto& row : rows) report.hits.insert(report.hits.end(), row.begin(), row.end());
  finalize_hits(report);
  if (report.minimal_generator) report.cyclic_verified = verify_cyclic_structure(report);
  return report;
}

inline KernelReport kernel_search_sm2(const BraidRep& rep, const PhiParams& params, long p_max, long q_max) {
  return kernel_search_sm2(PhiEvaluator(rep, params), p_max, q_max);
}

// ---------------------------------------------------------------------------
// Scalar images of sigma_1.

/// True iff no rho(sigma_1)^s with 1 <= s <= s_max is a scalar matrix.
inline bool nonscalar_power_check(const BraidRep& rep, long s_max) {
  if (!std::holds_alternative<MatrixBackend>(rep.native_backend()))
    throw backend_mismatch(rep.name() + " is not a matrix representation");
  Realization real = realize(rep);
  AlgebraElement m = real.sigma(1);
  AlgebraElement acc = m;
  for (long s = 1; s <= s_max; ++s) {
    if (acc.as_scalar()) return false;
    acc = acc * m;
  }
  return true;
}

/// All (p, q) in the search box where the multinomial sum equals 1; the box is
/// the one kernel_search_sm2 scans.
inline std::vector<SM2NormalForm> scalar_kernel_hits(const PhiParams& params, const Scalar& d, long p_max, long q_max) {
  if (!d.is_unit()) throw domain_error("scalar kernel criterion needs a unit d, got " + d.str());
  KernelReport report;
  for (long p = 0; p <= p_max; ++p)
    for (long q = -q_max; q <= q_max; ++q) {
      if (p == 0 && q == 0) continue;
      if (tau_power_expand(params, d, static_cast<unsigned long>(p), q).is_one()) report.hits.push_back({p, q});
    }
  finalize_hits(report);
  return report.hits;
}

/// Smallest (p >= 1, then |q|) with sum_{i+j+k=p} p!/(i!j!k!) a^i b^j c^k d^{i-j+q} = 1.
inline std::optional<SM2NormalForm> scalar_kernel_criterion(const PhiParams& params, const Scalar& d, long p_max,
                                                            long q_max) {
  for (const auto& h : scalar_kernel_hits(params, d, p_max, q_max))
    if (h.p >= 1) return h;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restriction to the cyclic subgroup generated by rho(sigma_1).

struct Prop8Result {
  KernelReport matrix_report;
  KernelReport cyclic_report;
  bool equal = false;
};

/// Runs the SM_2 kernel search with sigma_1 -> M in the matrix algebra and
/// with sigma_1 -> X in K[X]/(X^s - d_s), and compares the hit sets.
inline Prop8Result prop8_compare(const Matrix& m, long s, const Scalar& d_s, const PhiParams& params, long p_max,
                                 long q_max) {
  if (s < 1) throw domain_error("s must be positive");
  if (m.as_scalar()) throw domain_error("rho(sigma_1) must not be a scalar matrix");
  for (long k = 1; k < s; ++k)
    if (pow(m, k).as_scalar()) throw domain_error("s = " + std::to_string(s) + " is not minimal: M^" + std::to_string(k) + " is scalar");
  auto top = pow(m, s).as_scalar();
  if (!top || !(*top == d_s)) throw domain_error("M^" + std::to_string(s) + " is not " + d_s.str() + " times the identity");

  BraidRep rep = matrix_rep_from_images(2, {m});
  Prop8Result out;
  out.matrix_report = kernel_search_sm2(PhiEvaluator(rep, MatrixBackend{m.rows()}, params), p_max, q_max);
  out.cyclic_report =
      kernel_search_sm2(PhiEvaluator(rep, CyclicBackend{static_cast<std::size_t>(s), d_s}, params), p_max, q_max);
  out.equal = out.matrix_report.hits == out.cyclic_report.hits;
  return out;
}

// ---------------------------------------------------------------------------
// Conjugation closure and SM_3 equality.

/// kernel_word maps to 1; true iff every u w u^{-1} does too.
inline bool lemma8_check(const PhiEvaluator& phi, const Word& kernel_word, const std::vector<Word>& conjugators) {
  if (!phi(kernel_word).is_identity()) throw domain_error(to_string(kernel_word) + " is not in the kernel");
  for (const auto& u : conjugators)
    if (!phi(conjugate(kernel_word, u)).is_identity()) return false;
  return true;
}

/// Equality in SM_3 through Phi_{1,-1,0} over the reduced Burau representation
/// of B_3, evaluated in the formal group algebra of its matrix image. "true"
/// is sound only by the cited faithfulness of that extension.
inline bool sm3_word_equality(const Word& w1, const Word& w2) {
  if (w1.n() != 3 || w2.n() != 3) throw domain_error("sm3_word_equality needs words in SM_3");
  static const PhiEvaluator phi(burau_reduced(3), FormalBackend{GroupModel::matrix(2)},
                                PhiParams{Scalar(1), Scalar(-1), Scalar(0)});
  return phi(w1) == phi(w2);
}

}  // namespace smbraid
