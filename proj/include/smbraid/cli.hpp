#pragma once

// Command-line front end: argument parsing into CliConfig and dispatch of the
// subcommands eval, relcheck, kernel2, unfaith, prop8, multinomial, wordeq3
// and shape. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smbraid/analysis.hpp"
#include "smbraid/error.hpp"
#include "smbraid/phi.hpp"
#include "smbraid/reps.hpp"
#include "smbraid/scalars.hpp"
#include "smbraid/words.hpp"

namespace smbraid::cli {

using json = nlohmann::json;

/// A flag value that could not be interpreted; `flag` names the option.
struct usage_error : error {
  usage_error(const std::string& flag, const std::string& what) : error(flag + ": " + what), flag(flag) {}
  std::string flag;
};

struct CliConfig {
  std::string command;
  int n = 2;
  std::string rep = "burau-unreduced";
  std::string a = "0", b = "0", c = "0";
  std::string backend = "native";
  long pmax = 6, qmax = 12, smax = 4, lmax = 6, rmax = 8;
  bool json = false;
  unsigned long seed = 1;
  int random_params = 0;

  std::string word, w1, w2;
  std::string mode = "a00";
  std::string val;
  std::string matrix_file;
  long s = 0;
  std::string ds;
  std::string d;
  long p = 1, q = 0;
  bool have_rep = false;
};

// ---------------------------------------------------------------------------
// Flag value parsing.

inline Scalar scalar_flag(const std::string& flag, const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const error& e) {
    throw usage_error(flag, e.what());
  }
}

inline Word word_flag(const std::string& flag, const std::string& text, int n) {
  try {
    return parse_word(text, n);
  } catch (const error& e) {
    throw usage_error(flag, e.what());
  }
}

/// Matrices separated by blank lines; one row per line, entries comma-separated.
inline std::vector<Matrix> read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open matrix file '" + path + "'");
  std::vector<Matrix> out;
  std::vector<std::vector<Scalar>> rows;
  auto flush = [&] {
    if (!rows.empty()) out.emplace_back(rows);
    rows.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    if (detail::trim(line).empty()) {
      flush();
      continue;
    }
    std::vector<Scalar> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(Scalar::parse(cell));
    rows.push_back(std::move(row));
  }
  flush();
  if (out.empty()) throw parse_error("matrix file '" + path + "' holds no matrix");
  return out;
}

inline BraidRep rep_from_selector(const std::string& sel, int n) {
  try {
    if (sel == "burau-unreduced") return burau_unreduced(n);
    if (sel == "burau-reduced") return burau_reduced(n);
    if (sel == "perm") return permutation_rep(n);
    if (sel.rfind("scalar:", 0) == 0) return scalar_char(Scalar::parse(sel.substr(7)), n);
    if (sel.rfind("matrix:", 0) == 0) return matrix_rep_from_images(n, read_matrix_file(sel.substr(7)));
  } catch (const parse_error& e) {
    throw usage_error("--rep", e.what());
  }
  throw usage_error("--rep", "unknown representation selector '" + sel + "'");
}

inline Backend backend_from_selector(const std::string& sel, const BraidRep& rep) {
  if (sel == "native") return rep.native_backend();
  if (sel == "formal") return FormalBackend{rep.group()};
  if (sel == "matrix") return MatrixBackend{static_cast<std::size_t>(rep.group().matrix_dimension())};
  if (sel.rfind("cyclic:", 0) == 0) {
    auto rest = sel.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw usage_error("--backend", "expected cyclic:<s>:<ds>");
    long s = 0;
    try {
      s = detail::parse_long(rest.substr(0, colon));
    } catch (const error& e) {
      throw usage_error("--backend", e.what());
    }
    if (s < 1) throw usage_error("--backend", "cyclic order must be positive");
    return CyclicBackend{static_cast<std::size_t>(s), scalar_flag("--backend", rest.substr(colon + 1))};
  }
  throw usage_error("--backend", "unknown backend '" + sel + "'");
}

inline PhiParams params_from(const CliConfig& cfg) {
  return {scalar_flag("--a", cfg.a), scalar_flag("--b", cfg.b), scalar_flag("--c", cfg.c)};
}

inline json params_json(const PhiParams& p) { return {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}}; }

inline json pair_json(const SM2NormalForm& h) { return json::array({h.p, h.q}); }

inline json certificates_json(const std::vector<Certificate>& certs) {
  json out = json::array();
  for (auto c : certs) out.push_back(to_string(c));
  return out;
}

inline json witness_json(const UnfaithfulnessWitness& w) {
  return {{"w1", to_string(w.w1)}, {"w2", to_string(w.w2)}, {"certificates", certificates_json(w.certificates)},
          {"image", w.image.str()}};
}

inline json kernel_json(const KernelReport& r) {
  json out;
  out["bounds"] = {{"pmax", r.p_max}, {"qmax", r.q_max}};
  out["bounded"] = r.bounded;
  out["hits"] = json::array();
  for (const auto& h : r.hits) out["hits"].push_back(pair_json(h));
  if (r.minimal_generator) {
    out["minimal_generator"] = pair_json(*r.minimal_generator);
    out["cyclic_ok"] = r.cyclic_verified;
  } else {
    out["cyclic_ok"] = nullptr;
  }
  return out;
}

inline std::string hits_text(const std::vector<SM2NormalForm>& hits) {
  std::string out;
  for (const auto& h : hits) out += (out.empty() ? "" : " ") + ("(" + std::to_string(h.p) + "," + std::to_string(h.q) + ")");
  return out.empty() ? "none" : out;
}

// ---------------------------------------------------------------------------
// Subcommands. Each writes either text or exactly one JSON document.

inline void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

inline int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  BraidRep rep = rep_from_selector(cfg.rep, cfg.n);
  PhiEvaluator phi(rep, backend_from_selector(cfg.backend, rep), params_from(cfg));
  Word w = word_flag("--word", cfg.word, cfg.n);
  AlgebraElement image = phi(w);
  if (cfg.json) {
    emit(out, {{"rep", rep.name()}, {"backend", backend_name(phi.realization().backend())}, {"n", cfg.n},
               {"params", params_json(phi.params())}, {"word", to_string(w)}, {"image", image.str()},
               {"is_identity", image.is_identity()}, {"is_zero", image.is_zero()}});
  } else {
    out << "Phi" << phi.params().str() << "(" << to_string(w) << ") = " << image.str() << "\n";
    if (image.is_zero()) out << "zero element\n";
    if (image.is_identity()) out << "identity element\n";
  }
  return 0;
}

inline int cmd_relcheck(const CliConfig& cfg, std::ostream& out) {
  BraidRep rep = rep_from_selector(cfg.rep, cfg.n);
  Backend backend = backend_from_selector(cfg.backend, rep);
  std::vector<PhiParams> all{params_from(cfg)};
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  for (int k = 0; k < cfg.random_params; ++k)
    all.push_back({Scalar(Rational(num(rng), den(rng))), Scalar(Rational(num(rng), den(rng))),
                   Scalar(Rational(num(rng), den(rng)))});

  bool ok = true;
  json runs = json::array();
  std::ostringstream text;
  for (const auto& params : all) {
    RelationReport r = check_relations(PhiEvaluator(rep, backend, params));
    ok = ok && r.ok();
    json fam = json::array();
    for (std::size_t f = 0; f < 7; ++f) fam.push_back({{"family", f + 1}, {"instances", r.instances[f]}, {"failed", r.failed[f]}});
    json fails = json::array();
    for (const auto& fl : r.failures)
      fails.push_back({{"family", fl.family}, {"lhs", to_string(fl.lhs)}, {"rhs", to_string(fl.rhs)},
                       {"lhs_image", fl.lhs_image}, {"rhs_image", fl.rhs_image}});
    runs.push_back({{"params", params_json(params)}, {"families", fam}, {"failures", fails},
                    {"passed", r.families_passed()}, {"ok", r.ok()}});
    text << "params " << params.str() << "\n";
    for (std::size_t f = 0; f < 7; ++f)
      text << "  relation family " << f + 1 << ": " << r.instances[f] << " instances, "
           << (r.failed[f] ? std::to_string(r.failed[f]) + " FAILED" : std::string("pass")) << "\n";
    for (const auto& fl : r.failures)
      text << "  witness, family " << fl.family << ": " << to_string(fl.lhs) << " -> " << fl.lhs_image << " but "
           << to_string(fl.rhs) << " -> " << fl.rhs_image << "\n";
    text << r.families_passed() << "/7 relation families pass\n";
  }
  if (cfg.json)
    emit(out, {{"rep", rep.name()}, {"n", cfg.n}, {"backend", backend_name(backend)}, {"runs", runs}, {"ok", ok}});
  else
    out << text.str();
  return ok ? 0 : 1;
}

inline int cmd_kernel2(const CliConfig& cfg, std::ostream& out) {
  BraidRep rep = rep_from_selector(cfg.rep, 2);
  PhiEvaluator phi(rep, backend_from_selector(cfg.backend, rep), params_from(cfg));
  KernelReport r = kernel_search_sm2(phi, cfg.pmax, cfg.qmax);
  json witnesses = json::array();
  if (r.minimal_generator) {
    Word v = tau_sigma_word(2, r.minimal_generator->p, r.minimal_generator->q);
    witnesses.push_back(witness_json(make_witness(phi, v, Word(2))));
  }
  if (cfg.json) {
    json doc = kernel_json(r);
    doc["rep"] = rep.name();
    doc["backend"] = backend_name(phi.realization().backend());
    doc["params"] = params_json(phi.params());
    doc["witnesses"] = witnesses;
    emit(out, doc);
  } else {
    out << "kernel search for " << rep.name() << " with (a,b,c) = " << phi.params().str() << ", p <= " << r.p_max
        << ", |q| <= " << r.q_max << " (bounded)\n";
    out << "hits: " << hits_text(r.hits) << "\n";
    if (r.minimal_generator) {
      out << "minimal generator: tau_1^" << r.minimal_generator->p << " sigma_1^" << r.minimal_generator->q << "\n";
      out << "cyclic structure: " << (r.cyclic_verified ? "verified" : "VIOLATED") << "\n";
    } else {
      out << "no kernel element within bounds\n";
    }
  }
  return 0;
}

inline WitnessMode mode_flag(const std::string& m) {
  if (m == "a00") return WitnessMode::a;
  if (m == "0b0") return WitnessMode::b;
  if (m == "00c") return WitnessMode::c;
  throw usage_error("--mode", "expected a00, 0b0 or 00c, got '" + m + "'");
}

inline int cmd_unfaith(const CliConfig& cfg, std::ostream& out) {
  WitnessMode mode = mode_flag(cfg.mode);
  Scalar val = scalar_flag("--val", cfg.val);
  if (val.is_zero()) throw usage_error("--val", "value must be nonzero");
  BraidRep rep = rep_from_selector(cfg.rep, cfg.n);

  std::optional<UnfaithfulnessWitness> wit;
  std::string route;
  std::optional<ScalarHit> hit;
  if (auto r = root_of_unity_order(val, cfg.rmax)) {
    route = "root_of_unity";
    wit = witness_root_of_unity(rep, mode, val, *r);
  } else if (!val.is_unit()) {
    route = "non_unit";
  } else {
    route = "scalar_search";
    hit = find_scalar_witness(rep, val, cfg.smax, static_cast<std::size_t>(cfg.lmax));
    if (hit) wit = witness_scalar(rep, mode, val, hit->v, hit->s);
  }

  if (cfg.json) {
    json doc{{"rep", rep.name()}, {"n", cfg.n}, {"mode", cfg.mode}, {"val", val.str()}, {"route", route},
             {"bounds", {{"smax", cfg.smax}, {"lmax", cfg.lmax}, {"rmax", cfg.rmax}}}, {"bounded", true},
             {"found", wit.has_value()}, {"witnesses", json::array()}};
    if (wit) doc["witnesses"].push_back(witness_json(*wit));
    if (hit) doc["scalar_hit"] = {{"v", to_string(hit->v)}, {"s", hit->s}};
    emit(out, doc);
  } else if (wit) {
    out << "unfaithful (" << route << "): [" << to_string(wit->w1) << "] and [" << to_string(wit->w2)
        << "] share image " << wit->image.str() << "\n";
    out << "distinct by:";
    for (auto c : wit->certificates) out << " " << to_string(c);
    out << "\n";
  } else {
    out << "no witness found within bounds (smax=" << cfg.smax << ", lmax=" << cfg.lmax
        << "); absence is not a faithfulness proof\n";
  }
  return 0;
}

inline int cmd_prop8(const CliConfig& cfg, std::ostream& out) {
  std::vector<Matrix> ms;
  try {
    ms = read_matrix_file(cfg.matrix_file);
  } catch (const parse_error& e) {
    throw usage_error("--matrix", e.what());
  }
  Prop8Result r = prop8_compare(ms.front(), cfg.s, scalar_flag("--ds", cfg.ds), params_from(cfg), cfg.pmax, cfg.qmax);
  if (cfg.json) {
    emit(out, {{"bounds", {{"pmax", cfg.pmax}, {"qmax", cfg.qmax}}}, {"matrix", kernel_json(r.matrix_report)},
               {"cyclic", kernel_json(r.cyclic_report)}, {"equal", r.equal}, {"params", params_json(params_from(cfg))}});
  } else {
    out << "matrix backend hits: " << hits_text(r.matrix_report.hits) << "\n";
    out << "cyclic backend hits: " << hits_text(r.cyclic_report.hits) << "\n";
    out << "kernels " << (r.equal ? "agree" : "DIFFER") << " within p <= " << cfg.pmax << ", |q| <= " << cfg.qmax << "\n";
  }
  return r.equal ? 0 : 1;
}

inline int cmd_multinomial(const CliConfig& cfg, std::ostream& out) {
  PhiParams params = params_from(cfg);
  Scalar d = scalar_flag("--d", cfg.d);
  if (cfg.p < 0) throw usage_error("--p", "must be nonnegative");
  Scalar expand = tau_power_expand(params, d, static_cast<unsigned long>(cfg.p), cfg.q);
  Scalar direct = tau_power_direct(params, d, static_cast<unsigned long>(cfg.p), cfg.q);
  auto minimal = scalar_kernel_criterion(params, d, cfg.pmax, cfg.qmax);
  if (cfg.json) {
    json doc{{"params", params_json(params)}, {"d", d.str()}, {"p", cfg.p}, {"q", cfg.q}, {"expand", expand.str()},
             {"direct", direct.str()}, {"agree", expand == direct}, {"in_kernel", expand.is_one()},
             {"bounds", {{"pmax", cfg.pmax}, {"qmax", cfg.qmax}}}, {"bounded", true}};
    doc["minimal_generator"] = minimal ? pair_json(*minimal) : json(nullptr);
    emit(out, doc);
  } else {
    out << "multinomial sum: " << expand.str() << "\n";
    out << "direct power:    " << direct.str() << "\n";
    out << (expand == direct ? "agree" : "DISAGREE") << "; tau_1^" << cfg.p << " sigma_1^" << cfg.q
        << (expand.is_one() ? " is" : " is not") << " in the kernel\n";
    if (minimal)
      out << "minimal kernel generator: (" << minimal->p << ", " << minimal->q << ")\n";
    else
      out << "no kernel generator with p <= " << cfg.pmax << ", |q| <= " << cfg.qmax << "\n";
  }
  return expand == direct ? 0 : 1;
}

inline int cmd_wordeq3(const CliConfig& cfg, std::ostream& out) {
  Word w1 = word_flag("--w1", cfg.w1, 3);
  Word w2 = word_flag("--w2", cfg.w2, 3);
  bool eq = sm3_word_equality(w1, w2);
  auto certs = distinctness_certificates(w1, w2);
  if (cfg.json) {
    emit(out, {{"w1", to_string(w1)}, {"w2", to_string(w2)}, {"equal", eq}, {"certificates", certificates_json(certs)}});
  } else {
    out << (eq ? "equal" : "distinct") << "\n";
    if (!certs.empty()) {
      out << "invariant certificates:";
      for (auto c : certs) out << " " << to_string(c);
      out << "\n";
    }
  }
  return 0;
}

inline int cmd_shape(const CliConfig& cfg, std::ostream& out) {
  Word w = word_flag("--word", cfg.word, cfg.n);
  if (cfg.p < 1) throw usage_error("--p", "must be at least 1");
  Lemma9Form l9 = lemma9_decompose(w);
  ShapeForm sf = theorem10_shape(l9, cfg.p, cfg.q);
  Word stripped = strip_v_powers(sf);

  std::optional<bool> preserved, v_in_kernel, strip_ok;
  if (cfg.have_rep) {
    BraidRep rep = rep_from_selector(cfg.rep, cfg.n);
    PhiEvaluator phi(rep, backend_from_selector(cfg.backend, rep), params_from(cfg));
    AlgebraElement image = phi(w);
    preserved = phi(l9.assemble()) == image && phi(sf.assemble()) == image;
    v_in_kernel = phi(sf.v()).is_identity();
    strip_ok = phi(stripped) == image;
  }

  if (cfg.json) {
    json blocks9 = json::array(), blocks10 = json::array();
    for (const auto& b : l9.blocks) blocks9.push_back({{"r", b.r}, {"u", to_string(b.u)}});
    for (const auto& b : sf.blocks) blocks10.push_back({{"r", b.r}, {"m", b.m}, {"u", to_string(b.u)}});
    json doc{{"word", to_string(w)}, {"n", cfg.n}, {"p", cfg.p}, {"q", cfg.q},
             {"lemma9", {{"prefix", to_string(l9.prefix)}, {"blocks", blocks9}}},
             {"shape", {{"prefix", to_string(sf.prefix)}, {"blocks", blocks10}}},
             {"stripped", to_string(stripped)}};
    if (preserved) {
      doc["image_preserved"] = *preserved;
      doc["v_in_kernel"] = *v_in_kernel;
      doc["stripped_image_equal"] = *strip_ok;
    }
    emit(out, doc);
  } else {
    out << "tau_1 block form: prefix [" << to_string(l9.prefix) << "]";
    for (const auto& b : l9.blocks) out << " (t1^" << b.r << ", [" << to_string(b.u) << "])";
    out << "\nshape with v = t1^" << cfg.p << " s1^" << cfg.q << ": prefix [" << to_string(sf.prefix) << "]";
    for (const auto& b : sf.blocks) out << " (r=" << b.r << ", m=" << b.m << ", [" << to_string(b.u) << "])";
    out << "\nstripped: [" << to_string(stripped) << "]\n";
    if (preserved) {
      out << "image preserved by rewriting: " << (*preserved ? "yes" : "NO") << "\n";
      out << "v in kernel: " << (*v_in_kernel ? "yes" : "no") << "\n";
      out << "stripped word has the same image: " << (*strip_ok ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "eval") return cmd_eval(cfg, out);
    if (cfg.command == "relcheck") return cmd_relcheck(cfg, out);
    if (cfg.command == "kernel2") return cmd_kernel2(cfg, out);
    if (cfg.command == "unfaith") return cmd_unfaith(cfg, out);
    if (cfg.command == "prop8") return cmd_prop8(cfg, out);
    if (cfg.command == "multinomial") return cmd_multinomial(cfg, out);
    if (cfg.command == "wordeq3") return cmd_wordeq3(cfg, out);
    if (cfg.command == "shape") return cmd_shape(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

// ---------------------------------------------------------------------------
// Argument parsing.

inline void add_params(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--a", cfg.a, "coefficient of rho(sigma_i)")->capture_default_str();
  sub->add_option("--b", cfg.b, "coefficient of rho(sigma_i)^-1")->capture_default_str();
  sub->add_option("--c", cfg.c, "coefficient of the identity")->capture_default_str();
}

inline void add_rep(CLI::App* sub, CliConfig& cfg, bool with_n) {
  sub->add_option("--rep", cfg.rep, "burau-unreduced | burau-reduced | perm | scalar:<s> | matrix:<file>")
      ->capture_default_str();
  if (with_n) sub->add_option("--n", cfg.n, "strand count")->capture_default_str()->check(CLI::Range(2, 64));
}

inline void add_bounds(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--pmax", cfg.pmax, "largest tau_1 exponent searched")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--qmax", cfg.qmax, "largest |sigma_1 exponent| searched")->capture_default_str()->check(CLI::NonNegativeNumber);
}

/// Parses argv into `cfg`. Returns an exit code when parsing ends the program
/// (help or usage error), std::nullopt to continue.
inline std::optional<int> parse_args(int argc, const char* const* argv, CliConfig& cfg, std::ostream& out,
                                     std::ostream& err) {
  CLI::App app{"Representations Phi_{a,b,c} of the singular braid monoid: evaluation and kernel analysis", "smbraid"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "emit one JSON document");

  auto* eval = app.add_subcommand("eval", "evaluate Phi_{a,b,c} on a word");
  add_rep(eval, cfg, true);
  add_params(eval, cfg);
  eval->add_option("--word", cfg.word, "word in the token grammar (s1 S1 t1 x X ...)")->required();
  eval->add_option("--backend", cfg.backend, "native | formal | matrix | cyclic:<s>:<ds>")->capture_default_str();

  auto* rel = app.add_subcommand("relcheck", "check the defining relations of SM_n under Phi_{a,b,c}");
  add_rep(rel, cfg, true);
  add_params(rel, cfg);
  rel->add_option("--backend", cfg.backend, "native | formal | matrix")->capture_default_str();
  rel->add_option("--random", cfg.random_params, "additional random rational parameter triples")->capture_default_str();
  rel->add_option("--seed", cfg.seed, "seed for random parameters")->capture_default_str();

  auto* ker = app.add_subcommand("kernel2", "bounded search of ker Phi_{a,b,c} on SM_2");
  add_rep(ker, cfg, false);
  add_params(ker, cfg);
  add_bounds(ker, cfg);
  ker->add_option("--backend", cfg.backend, "native | formal | matrix | cyclic:<s>:<ds>")->capture_default_str();

  auto* unf = app.add_subcommand("unfaith", "unfaithfulness witnesses for Phi_{a,0,0}, Phi_{0,b,0}, Phi_{0,0,c}");
  unf->add_option("--mode", cfg.mode, "a00 | 0b0 | 00c")->capture_default_str();
  unf->add_option("--val", cfg.val, "the nonzero parameter value")->required();
  add_rep(unf, cfg, true);
  unf->add_option("--smax", cfg.smax, "largest exponent s tried")->capture_default_str()->check(CLI::NonNegativeNumber);
  unf->add_option("--lmax", cfg.lmax, "largest braid word length searched")->capture_default_str()->check(CLI::NonNegativeNumber);
  unf->add_option("--rmax", cfg.rmax, "largest root-of-unity order accepted")->capture_default_str()->check(CLI::NonNegativeNumber);

  auto* p8 = app.add_subcommand("prop8", "compare matrix and cyclic-quotient kernels on SM_2");
  p8->add_option("--matrix", cfg.matrix_file, "file with the image of sigma_1")->required();
  p8->add_option("--s", cfg.s, "order with M^s = ds * I")->required();
  p8->add_option("--ds", cfg.ds, "the scalar ds")->required();
  add_params(p8, cfg);
  add_bounds(p8, cfg);

  auto* mn = app.add_subcommand("multinomial", "multinomial kernel criterion for a scalar image rho(sigma_1) = d");
  add_params(mn, cfg);
  mn->add_option("--d", cfg.d, "scalar image of sigma_1")->required();
  mn->add_option("--p", cfg.p, "tau_1 exponent")->capture_default_str();
  mn->add_option("--q", cfg.q, "sigma_1 exponent")->capture_default_str();
  add_bounds(mn, cfg);

  auto* eq3 = app.add_subcommand("wordeq3", "decide equality of two SM_3 words");
  eq3->add_option("--w1", cfg.w1, "first word")->required();
  eq3->add_option("--w2", cfg.w2, "second word")->required();

  auto* sh = app.add_subcommand("shape", "rewrite a word into the tau_1^r v^m u block shape");
  sh->add_option("--n", cfg.n, "strand count")->capture_default_str()->check(CLI::Range(2, 64));
  sh->add_option("--word", cfg.word, "word in the token grammar")->required();
  sh->add_option("--p", cfg.p, "tau_1 exponent of v")->capture_default_str();
  sh->add_option("--q", cfg.q, "sigma_1 exponent of v")->capture_default_str();
  auto* shrep = sh->add_option("--rep", cfg.rep, "representation used to check images");
  add_params(sh, cfg);
  sh->add_option("--backend", cfg.backend, "native | formal | matrix")->capture_default_str();

  for (auto* sub : {eval, rel, ker, unf, p8, mn, eq3, sh}) sub->add_flag("--json", cfg.json, "emit one JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.have_rep = shrep->count() > 0;
  return std::nullopt;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (auto code = parse_args(argc, argv, cfg, out, err)) return *code;
  return run(cfg, out, err);
}

}  // namespace smbraid::cli
