// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic, with the
// wall-clock limit of each criterion enforced. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "smbraid/smbraid.hpp"

using namespace smbraid;

namespace {

const Matrix kM{{Scalar(0), Scalar(-2)}, {Scalar(1), Scalar(0)}};

std::mt19937 rng(20240611);

Word w(const char* text, int n) { return parse_word(text, n); }

Scalar random_rational(bool nonzero = false) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long a = num(rng);
  while (nonzero && a == 0) a = num(rng);
  return Scalar(Rational(a, den(rng)));
}

PhiParams random_params(bool nonzero = false) {
  return {random_rational(nonzero), random_rational(nonzero), random_rational(nonzero)};
}

// Collects the first failing check as the reason.
struct Check {
  bool ok = true;
  std::string why;
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.ok && secs >= limit_s) c(false, "time limit " + std::to_string(limit_s) + " s exceeded");
  if (!c.ok) ++failures;
  std::printf("criterion %2d: %s  %s (%.3f s, limit %.0f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title, secs, limit_s,
              c.ok ? "" : " - ", c.why.c_str());
  std::fflush(stdout);
}

bool same_invariants(const Word& a, const Word& b) {
  return tau_count(a) == tau_count(b) && sigma_exponent_sum(a) == sigma_exponent_sum(b) &&
         permutation_image(a) == permutation_image(b);
}

bool has(const std::vector<Certificate>& certs, Certificate c) {
  return std::find(certs.begin(), certs.end(), c) != certs.end();
}

}  // namespace

int main() {
  criterion(1, "all seven relation families hold for every shipped representation", 30, [](Check& c) {
    std::vector<BraidRep> reps{burau_unreduced(2), burau_unreduced(3), burau_unreduced(4), burau_reduced(3),
                               permutation_rep(4), scalar_char(Scalar(2), 3)};
    for (const auto& rep : reps)
      for (int k = 0; k < 20; ++k) {
        PhiParams p = random_params();
        RelationReport r = check_relations(rep, p);
        c(r.ok() && r.families_passed() == 7, rep.name() + " with " + p.str());
      }
  });

  criterion(2, "Phi_{0,0,0}(tau_1 sigma_1) = Phi_{0,0,0}(tau_1) = 0 with distinct normal forms", 1, [](Check& c) {
    PhiParams zero{Scalar(0), Scalar(0), Scalar(0)};
    for (const auto& rep : {burau_unreduced(2), burau_reduced(2), scalar_char(Scalar(2), 2)}) {
      c(phi_eval(rep, zero, w("t1 s1", 2)).is_zero(), rep.name() + ": tau_1 sigma_1 not zero");
      c(phi_eval(rep, zero, w("t1", 2)).is_zero(), rep.name() + ": tau_1 not zero");
    }
    c(sm2_normal_form(w("t1 s1", 2)) == SM2NormalForm{1, 1}, "normal form of tau_1 sigma_1");
    c(sm2_normal_form(w("t1", 2)) == SM2NormalForm{1, 0}, "normal form of tau_1");
  });

  criterion(3, "root-of-unity witnesses (a, b, c) over burau-reduced(3)", 1, [](Check& c) {
    auto rep = burau_reduced(3);
    auto a1 = witness_a1(rep, Scalar(-1), 2);
    c(a1.w1 == w("t1 t1", 3) && a1.w2 == w("s1 s1", 3), "a1 words");
    c(has(a1.certificates, Certificate::tau_count), "a1 tau-count certificate");
    c(phi_image_equal(rep, {Scalar(-1), Scalar(0), Scalar(0)}, a1.w1, a1.w2), "a1 images");
    auto b1 = witness_root_of_unity(rep, WitnessMode::b, Scalar(-1), 2);
    c(b1.w1 == w("t1 t1", 3) && b1.w2 == w("S1 S1", 3), "b1 words");
    c(has(b1.certificates, Certificate::tau_count), "b1 tau-count certificate");
    c(phi_image_equal(rep, {Scalar(0), Scalar(-1), Scalar(0)}, b1.w1, b1.w2), "b1 images");
    auto c1 = witness_root_of_unity(rep, WitnessMode::c, Scalar(1), 1);
    c(c1.w1 == w("t1", 3) && c1.w2.empty(), "c1 words");
    c(has(c1.certificates, Certificate::tau_count), "c1 tau-count certificate");
    c(c1.image.is_identity(), "c1 image");
  });

  criterion(4, "scalar witness for scalar(2), a = 2", 5, [](Check& c) {
    auto rep = scalar_char(Scalar(2), 2);
    auto hit = find_scalar_witness(rep, Scalar(2), 4, 4);
    c(hit.has_value(), "no hit within len_max = 4");
    if (!hit) return;
    c(hit->v == w("S1", 2) && hit->s == 1, "hit is " + to_string(hit->v) + ", s = " + std::to_string(hit->s));
    auto wit = witness_a2(rep, Scalar(2), hit->v, hit->s);
    PhiEvaluator phi(rep, {Scalar(2), Scalar(0), Scalar(0)});
    c(phi(wit.w1).as_scalar() == Scalar(2) && phi(wit.w2).as_scalar() == Scalar(2), "images are not 2 * identity");
  });

  criterion(5, "SM_2 kernels of scalar(2) are cyclic with the expected generators", 10, [](Check& c) {
    auto rep = scalar_char(Scalar(2), 2);
    auto r = kernel_search_sm2(rep, {Scalar(2), Scalar(0), Scalar(0)}, 6, 12);
    std::vector<SM2NormalForm> expect;
    for (long m = 1; m <= 6; ++m) expect.push_back({m, -2 * m});
    c(r.hits == expect, "hits for (2, 0, 0)");
    c(r.minimal_generator == SM2NormalForm{1, -2}, "minimal generator for (2, 0, 0)");
    c(verify_cyclic_structure(r), "cyclic structure for (2, 0, 0)");
    auto s = kernel_search_sm2(rep, {Scalar(1), Scalar(0), Scalar(-3)}, 6, 12);
    c(s.hits == std::vector<SM2NormalForm>{{2, 0}, {4, 0}, {6, 0}}, "hits for (1, 0, -3)");
    c(s.minimal_generator == SM2NormalForm{2, 0}, "minimal generator for (1, 0, -3)");
    c(verify_cyclic_structure(s), "cyclic structure for (1, 0, -3)");
  });

  criterion(6, "no scalar Burau powers and no SM_2 kernel hits for nonzero parameters (bounded)", 60, [](Check& c) {
    auto rep = burau_unreduced(2);
    c(nonscalar_power_check(rep, 8), "a power of rho(sigma_1) is scalar");
    std::vector<PhiParams> params{{Scalar(1), Scalar(-1), Scalar(0)}};
    for (int k = 0; k < 10; ++k) params.push_back(random_params(true));
    for (const auto& p : params) c(kernel_search_sm2(rep, p, 4, 8).hits.empty(), "kernel hit for " + p.str());
  });

  criterion(7, "multinomial expansion equals direct power; criterion equals search", 60, [](Check& c) {
    const Scalar ds[] = {Scalar(2), Scalar(Rational(1, 2)), Scalar(-1), -Scalar::t()};
    for (int k = 0; k < 20; ++k) {
      PhiParams p = random_params();
      for (const auto& d : ds) {
        for (unsigned long e = 0; e <= 8; ++e)
          for (long q = -8; q <= 8; ++q)
            c(tau_power_expand(p, d, e, q) == tau_power_direct(p, d, e, q),
              "mismatch at " + p.str() + ", d = " + d.str() + ", p = " + std::to_string(e) + ", q = " + std::to_string(q));
        auto r = kernel_search_sm2(scalar_char(d, 2), p, 8, 8);
        c(scalar_kernel_hits(p, d, 8, 8) == r.hits, "hit sets differ for " + p.str() + ", d = " + d.str());
        c(scalar_kernel_criterion(p, d, 8, 8) == r.minimal_generator, "generators differ for " + p.str());
      }
    }
  });

  criterion(8, "matrix and cyclic-quotient kernels agree for M^2 = -2", 10, [](Check& c) {
    auto a = prop8_compare(kM, 2, Scalar(-2), {Scalar(1), Scalar(2), Scalar(1)}, 5, 6);
    c(a.equal, "(1, 2, 1) kernels differ");
    c(a.matrix_report.minimal_generator == SM2NormalForm{1, 0}, "(1, 2, 1) matrix generator");
    c(a.cyclic_report.minimal_generator == SM2NormalForm{1, 0}, "(1, 2, 1) cyclic generator");
    auto b = prop8_compare(kM, 2, Scalar(-2), {Scalar(1), Scalar(-1), Scalar(0)}, 5, 6);
    c(b.equal, "(1, -1, 0) kernels differ");
    c(b.matrix_report.hits.empty() && b.cyclic_report.hits.empty(), "(1, -1, 0) not empty");
  });

  criterion(9, "conjugates of v^m stay in the kernel; stripping v-powers keeps the image", 30, [](Check& c) {
    PhiEvaluator phi(scalar_char(Scalar(2), 3), {Scalar(2), Scalar(0), Scalar(0)});
    const Word v = w("t1 S1 S1", 3);
    std::uniform_int_distribution<long> m_dist(1, 3), r_dist(0, 3);
    std::uniform_int_distribution<std::size_t> len(0, 6);
    for (int k = 0; k < 50; ++k) {
      long m = m_dist(rng);
      Word u = random_braid_word(3, len(rng), rng);
      c(lemma8_check(phi, v.power(m), {u}), "conjugate by " + to_string(u) + " left the kernel");
    }
    for (int k = 0; k < 25; ++k) {
      ShapeForm sf{3, 1, -2, random_braid_word(3, len(rng), rng), {}};
      for (long b = r_dist(rng); b >= 0; --b) sf.blocks.push_back({0, m_dist(rng) - 1, random_braid_word(3, len(rng), rng)});
      c(phi(sf.assemble()) == phi(strip_v_powers(sf)), "random shape form changed image");
    }
    for (int k = 0; k < 25; ++k) {
      Word x = random_sm_word(3, 12, rng);
      ShapeForm sf = theorem10_shape(x, 1, -2);
      c(phi(sf.assemble()) == phi(x), "shape of " + to_string(x) + " changed image");
      c(phi(strip_v_powers(sf)) == phi(x), "stripped shape of " + to_string(x) + " changed image");
    }
  });

  criterion(10, "tau_1 / x rewriting preserves images and invariants on SM_3", 30, [](Check& c) {
    PhiParams desing{Scalar(1), Scalar(-1), Scalar(0)};
    PhiEvaluator burau(burau_unreduced(3), desing), perm(permutation_rep(3), desing);
    std::uniform_int_distribution<std::size_t> len(0, 12);
    for (int k = 0; k < 200; ++k) {
      Word x = random_sm_word(3, len(rng), rng);
      Word l9 = lemma9_decompose(x).assemble();
      Word xg = to_sigma1_x_generators(x).expand();
      for (const Word* y : {&l9, &xg}) {
        c(burau(*y) == burau(x), "Burau image of " + to_string(x));
        c(perm(*y) == perm(x), "permutation image of " + to_string(x));
        c(same_invariants(*y, x), "invariants of " + to_string(x));
      }
    }
  });

  criterion(11, "Phi_{1,-1,0}: empty SM_2 kernel, SM_3 word equality consistent", 30, [](Check& c) {
    c(kernel_search_sm2(burau_reduced(2), {Scalar(1), Scalar(-1), Scalar(0)}, 5, 10).hits.empty(), "kernel hit");
    for (const auto& rel : relation_instances(3))
      c(sm3_word_equality(rel.lhs, rel.rhs), "relation " + std::to_string(rel.family) + " judged unequal");
    int pairs = 0;
    std::uniform_int_distribution<std::size_t> len(0, 8);
    while (pairs < 20) {
      Word a = random_sm_word(3, len(rng), rng), b = random_sm_word(3, len(rng), rng);
      if (distinctness_certificates(a, b).empty()) continue;
      ++pairs;
      c(!sm3_word_equality(a, b), to_string(a) + " and " + to_string(b) + " judged equal");
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
