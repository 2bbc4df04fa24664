// glwb: command-line workbench for the provability logic GL.
//
// Subcommands: prove, countermodel, frame, algebra, dual, separate, verify,
// claim-check. Exit status: 0 for a positive answer (proved / countermodel
// found / all checks pass), 1 for a negative answer, 2 for usage, parse, or
// resource errors.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gl/algebra.hpp"
#include "gl/duality.hpp"
#include "gl/errors.hpp"
#include "gl/experiments.hpp"
#include "gl/formula.hpp"
#include "gl/frame_io.hpp"
#include "gl/kripke.hpp"
#include "gl/omega.hpp"
#include "gl/prover.hpp"

namespace {

using nlohmann::json;

int env_int(const char* name, int fallback, int lo, int hi) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v < lo || v > hi) return fallback;
  return static_cast<int>(v);
}

long env_long(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v <= 0) return fallback;
  return v;
}

struct Options {
  std::string format = "text";
  int guard_bits = env_int("GLWB_GUARD_BITS", gl::kDefaultGuardBits, 1, 30);
  long budget = env_long("GLWB_NODE_BUDGET", gl::kDefaultNodeBudget);

  bool json_out() const { return format == "json"; }
};

std::string sequent_text(const gl::Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ante.size(); ++i) {
    if (i) out += ", ";
    out += gl::to_string(s.ante[i]);
  }
  out += " => ";
  for (std::size_t i = 0; i < s.succ.size(); ++i) {
    if (i) out += ", ";
    out += gl::to_string(s.succ[i]);
  }
  return out;
}

void print_tree(const gl::ProofTree& t, int depth) {
  std::cout << std::string(static_cast<std::size_t>(2 * depth), ' ') << t.rule;
  if (t.principal) std::cout << " [" << gl::to_string(*t.principal) << "]";
  std::cout << ": " << sequent_text(t.sequent) << '\n';
  for (const gl::ProofTree& c : t.children) print_tree(c, depth + 1);
}

void print_frame_text(const gl::Frame& fr) {
  std::cout << "worlds:";
  for (const std::string& n : fr.world_names()) std::cout << ' ' << n;
  std::cout << "\nedges:";
  for (auto [a, b] : fr.edges())
    std::cout << ' ' << fr.world_name(a) << "->" << fr.world_name(b);
  std::cout << '\n';
}

void print_model_text(const gl::Model& m) {
  print_frame_text(m.frame);
  std::cout << "valuation:\n";
  for (const auto& [var, worlds] : m.valuation) {
    std::cout << "  " << var << ": {";
    bool first = true;
    for (int w = 0; w < m.frame.size(); ++w)
      if (worlds.test(w)) {
        if (!first) std::cout << ", ";
        std::cout << m.frame.world_name(w);
        first = false;
      }
    std::cout << "}\n";
  }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// "p={0,3,w}" or "p=~{1}"
std::pair<std::string, gl::CofinElement> parse_omega_assign(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw gl::ParseError("assignment must look like var=element", 0);
  return {spec.substr(0, eq), gl::parse_cofin_element(spec.substr(eq + 1))};
}

// "p=a,b" with world names; "p=" assigns the empty set.
std::pair<std::string, gl::FinAlgebra::Elem> parse_world_assign(const gl::Frame& fr,
                                                                const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw gl::ParseError("assignment must look like var=w1,w2", 0);
  gl::FinAlgebra::Elem e = 0;
  std::string rest = spec.substr(eq + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    std::string name = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    auto idx = fr.world_index(name);
    if (!idx) throw gl::ParseError("unknown world '" + name + "'", pos);
    e |= gl::FinAlgebra::Elem{1} << *idx;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {spec.substr(0, eq), e};
}

std::string elem_names(const gl::Frame& fr, gl::FinAlgebra::Elem e) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < fr.size(); ++w)
    if (e >> w & 1) {
      if (!first) out += ", ";
      out += fr.world_name(w);
      first = false;
    }
  return out + "}";
}

int emit_report(const gl::ExperimentReport& r, const Options& opt) {
  if (opt.json_out())
    std::cout << r.to_json().dump(2) << '\n';
  else
    r.print_text(std::cout);
  return r.pass() ? 0 : 1;
}

int run_prove(const std::string& text, bool tree, bool want_countermodel, const Options& opt) {
  gl::Formula f = gl::parse(text);
  gl::ProveOutcome out = gl::prove(f, opt.budget);
  if (opt.json_out()) {
    json j{{"formula", gl::to_string(f)},
           {"valid", out.valid()},
           {"nodes", out.nodes}};
    if (out.valid() && tree) j["proof"] = gl::proof_tree_to_json(*out.proof);
    if (!out.valid()) j["countermodel"] = gl::countermodel_to_json(*out.countermodel);
    std::cout << j.dump(2) << '\n';
  } else if (out.valid()) {
    std::cout << "PROOF (" << out.nodes << " nodes)\n";
    if (tree) print_tree(*out.proof, 0);
  } else {
    std::cout << "COUNTERMODEL (" << out.nodes << " nodes)\n";
    print_model_text(out.countermodel->model);
    std::cout << "world: " << out.countermodel->model.frame.world_name(out.countermodel->world)
              << '\n';
  }
  if (want_countermodel) return out.valid() ? 1 : 0;
  return out.valid() ? 0 : 1;
}

int run_frame(const std::string& file, const std::string& action,
              const std::string& formula_text, const Options& opt) {
  gl::Frame fr = gl::load_frame(file);
  if (action == "check") {
    gl::FrameClassReport c = gl::classify_frame(fr);
    if (opt.json_out()) {
      std::cout << json{{"transitive", c.transitive},
                        {"irreflexive", c.irreflexive},
                        {"acyclic", c.acyclic},
                        {"locally_finite_height", c.locally_finite_height},
                        {"finite_irreflexive_transitive", c.finite_irreflexive_transitive},
                        {"transitive_locally_finite", c.transitive_locally_finite}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "transitive: " << yesno(c.transitive) << '\n'
                << "irreflexive: " << yesno(c.irreflexive) << '\n'
                << "acyclic: " << yesno(c.acyclic) << '\n'
                << "locally finite height: " << yesno(c.locally_finite_height) << '\n'
                << "finite irreflexive transitive: " << yesno(c.finite_irreflexive_transitive)
                << '\n'
                << "transitive locally finite: " << yesno(c.transitive_locally_finite) << '\n';
    }
    return 0;
  }
  if (action == "height") {
    gl::FrameClassReport c = gl::classify_frame(fr);
    if (opt.json_out()) {
      json j = json::object();
      for (int w = 0; w < fr.size(); ++w)
        j[fr.world_name(w)] = c.heights[w] ? json(*c.heights[w]) : json(nullptr);
      std::cout << j.dump(2) << '\n';
    } else {
      for (int w = 0; w < fr.size(); ++w)
        std::cout << fr.world_name(w) << ": "
                  << (c.heights[w] ? std::to_string(*c.heights[w]) : std::string("inf")) << '\n';
    }
    return 0;
  }
  if (action == "valid") {
    if (formula_text.empty()) throw gl::ParseError("frame valid needs a formula", 0);
    gl::Formula f = gl::parse(formula_text);
    bool v = gl::frame_valid(fr, f, opt.guard_bits);
    if (opt.json_out())
      std::cout << json{{"formula", gl::to_string(f)}, {"valid", v}}.dump(2) << '\n';
    else
      std::cout << (v ? "VALID" : "INVALID") << '\n';
    return v ? 0 : 1;
  }
  std::cerr << "unknown frame action '" << action << "' (want check|height|valid)\n";
  return 2;
}

int run_algebra(const std::string& file, bool omega, int window, const std::string& eval_text,
                const std::vector<std::string>& assigns, const Options& opt) {
  if (omega) {
    if (!eval_text.empty()) {
      gl::OmegaValuation v;
      for (const std::string& a : assigns) v.insert(parse_omega_assign(a));
      gl::CofinElement e = gl::OmegaAlgebra::eval(gl::parse(eval_text), v);
      if (opt.json_out())
        std::cout << json{{"value", e.to_string()}}.dump(2) << '\n';
      else
        std::cout << e.to_string() << '\n';
      return 0;
    }
    gl::OmegaAlgebraReport r = gl::classify_omega_algebra(window);
    if (opt.json_out()) {
      std::cout << json{{"satisfies_4", r.satisfies_4},
                        {"chain_meet", gl::OmegaAlgebra::chain_meet().to_string()},
                        {"chain_meet_is_glb", r.chain_meet_is_glb},
                        {"diamond_chain_vanishes", gl::to_string(r.diamond_chain_vanishes)},
                        {"noncompact_rule_true", gl::to_string(r.noncompact_rule_true)},
                        {"loeb_equation_valid", gl::to_string(r.loeb_equation_valid)}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "satisfies 4: " << yesno(r.satisfies_4) << '\n'
                << "chain meet: " << gl::OmegaAlgebra::chain_meet().to_string() << '\n'
                << "chain meet is glb: " << yesno(r.chain_meet_is_glb) << '\n'
                << "diamond chain vanishes: " << gl::to_string(r.diamond_chain_vanishes) << '\n'
                << "noncompact rule: " << gl::to_string(r.noncompact_rule_true) << '\n'
                << "loeb equation: " << gl::to_string(r.loeb_equation_valid) << '\n';
    }
    return 0;
  }

  gl::Frame fr = gl::load_frame(file);
  gl::FinAlgebra a(fr);
  if (!eval_text.empty()) {
    std::map<std::string, gl::FinAlgebra::Elem> v;
    for (const std::string& s : assigns) v.insert(parse_world_assign(fr, s));
    gl::FinAlgebra::Elem e = a.eval(gl::parse(eval_text), v);
    if (opt.json_out())
      std::cout << json{{"value", elem_names(fr, e)}}.dump(2) << '\n';
    else
      std::cout << elem_names(fr, e) << '\n';
    return 0;
  }
  gl::AlgebraClassReport r = gl::classify_algebra(a);
  gl::FinAlgebra::Chain chain = a.diamond_chain();
  if (opt.json_out()) {
    json vals = json::array();
    for (gl::FinAlgebra::Elem v : chain.values) vals.push_back(elem_names(fr, v));
    std::cout << json{{"atoms", a.atoms()},
                      {"satisfies_4", r.satisfies_4},
                      {"chain", std::move(vals)},
                      {"stabilization_index", r.stabilization_index},
                      {"chain_meet", elem_names(fr, r.chain_meet)},
                      {"diamond_chain_vanishes", gl::to_string(r.diamond_chain_vanishes)},
                      {"noncompact_rule_true", gl::to_string(r.noncompact_rule_true)},
                      {"loeb_equation_valid", gl::to_string(r.loeb_equation_valid)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "atoms: " << a.atoms() << '\n' << "satisfies 4: " << yesno(r.satisfies_4) << '\n';
    std::cout << "chain:";
    for (gl::FinAlgebra::Elem v : chain.values) std::cout << ' ' << elem_names(fr, v);
    std::cout << '\n'
              << "stabilizes at: " << r.stabilization_index << '\n'
              << "chain meet: " << elem_names(fr, r.chain_meet) << '\n'
              << "diamond chain vanishes: " << gl::to_string(r.diamond_chain_vanishes) << '\n'
              << "noncompact rule: " << gl::to_string(r.noncompact_rule_true) << '\n'
              << "loeb equation: " << gl::to_string(r.loeb_equation_valid) << '\n';
  }
  return 0;
}

int run_dual(const std::string& file, bool omega, int window, int qdepth,
             const std::vector<std::string>& generators, const Options& opt) {
  if (omega) {
    std::vector<gl::OmegaFilter> kept = gl::omega_q0_filters(window);
    gl::Frame dual = gl::omega_dual_frame(window);
    bool iso = gl::find_isomorphism(dual, gl::make_descending_chain(window + 1)).has_value();
    if (opt.json_out()) {
      json names = json::array();
      for (const gl::OmegaFilter& f : kept) names.push_back(f.name());
      std::cout << json{{"filters", std::move(names)},
                        {"frame", gl::frame_to_json(dual)},
                        {"descending_chain_with_top", iso}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "filters kept:";
      for (const gl::OmegaFilter& f : kept) std::cout << ' ' << f.name();
      std::cout << " (free ultrafilter dropped)\n";
      print_frame_text(dual);
      std::cout << "descending chain with top: " << yesno(iso) << '\n';
    }
    return iso ? 0 : 1;
  }

  gl::Frame fr = gl::load_frame(file);
  gl::FinAlgebra a(fr);
  gl::QSetFin q = gl::q0_fin(a);
  if (qdepth > 0) {
    std::vector<gl::FinAlgebra::Elem> gens;
    for (const std::string& g : generators) {
      // a bare world list such as "a,b"; reuse the assignment parser
      gens.push_back(parse_world_assign(fr, "x=" + g).second);
    }
    q = gl::build_qset(a, qdepth, gens);
  }
  std::vector<gl::PrimeFilterFin> filters = gl::q_filters(a, q);
  gl::Frame dual = gl::dual_frame(a, q, opt.guard_bits);
  gl::EmbeddingReport emb = gl::check_embedding(a, q, opt.guard_bits);
  bool iso = gl::find_isomorphism(dual, fr).has_value();
  if (opt.json_out()) {
    json fj = json::array();
    for (const gl::PrimeFilterFin& f : filters) fj.push_back(f.atom);
    std::cout << json{{"prime_filters", gl::prime_filters(a).size()},
                      {"q_filters", std::move(fj)},
                      {"families", q.families.size()},
                      {"frame", gl::frame_to_json(dual)},
                      {"isomorphic_to_source", iso},
                      {"embedding",
                       {{"injective", emb.injective},
                        {"preserves_bounds", emb.preserves_bounds},
                        {"preserves_meet", emb.preserves_meet},
                        {"preserves_complement", emb.preserves_complement},
                        {"preserves_box", emb.preserves_box}}}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "prime filters: " << gl::prime_filters(a).size() << '\n'
              << "filters kept: " << filters.size() << '\n'
              << "meet families: " << q.families.size() << '\n';
    print_frame_text(dual);
    std::cout << "isomorphic to source: " << yesno(iso) << '\n'
              << "embedding: injective " << yesno(emb.injective) << ", bounds "
              << yesno(emb.preserves_bounds) << ", meet " << yesno(emb.preserves_meet)
              << ", complement " << yesno(emb.preserves_complement) << ", box "
              << yesno(emb.preserves_box) << '\n';
  }
  return iso && emb.all() ? 0 : 1;
}

int run_claim_check(const std::string& formula_text, const std::vector<std::string>& assigns,
                    bool corpus, int n_max, const Options& opt) {
  if (corpus) {
    gl::ExperimentReport r;
    r.experiment = "claim-corpus";
    r.parameters["n_max"] = std::to_string(n_max);
    for (const auto& [psi, v] : gl::claim_corpus()) {
      gl::ClaimCheckResult c = gl::check_claim(psi, v, n_max);
      r.add(gl::to_string(psi), c.verified,
            c.witness ? "N = " + std::to_string(*c.witness) : "no threshold found");
    }
    return emit_report(r, opt);
  }
  gl::Formula f = gl::parse(formula_text);
  gl::OmegaValuation v;
  for (const std::string& a : assigns) v.insert(parse_omega_assign(a));
  gl::ClaimCheckResult c = gl::check_claim(f, v, n_max);
  if (opt.json_out()) {
    json agree = json::array();
    for (bool b : c.agree_at) agree.push_back(b);
    json j{{"formula", gl::to_string(f)}, {"verified", c.verified}, {"agree_at", agree}};
    if (c.witness) j["witness"] = *c.witness;
    std::cout << j.dump(2) << '\n';
  } else if (c.verified) {
    std::cout << "agreement from N = " << *c.witness << " through n_max = " << n_max << '\n';
  } else {
    std::cout << "no agreement threshold up to n_max = " << n_max << '\n';
  }
  return c.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for the provability logic GL"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--guard-bits", opt.guard_bits,
                 "largest 2^bits sweep allowed (default from GLWB_GUARD_BITS)");
  app.add_option("--budget", opt.budget, "proof search node budget");

  auto* prove_cmd = app.add_subcommand("prove", "decide a formula, print proof or countermodel");
  std::string prove_formula;
  bool prove_tree = false;
  prove_cmd->add_option("formula", prove_formula, "formula text")->required();
  prove_cmd->add_flag("--tree", prove_tree, "print the proof tree");

  auto* counter_cmd =
      app.add_subcommand("countermodel", "search a countermodel (exit 0 when one exists)");
  std::string counter_formula;
  counter_cmd->add_option("formula", counter_formula, "formula text")->required();

  auto* frame_cmd = app.add_subcommand("frame", "inspect a frame file");
  std::string frame_file, frame_action, frame_formula;
  frame_cmd->add_option("file", frame_file, "frame file")->required();
  frame_cmd->add_option("action", frame_action, "check | height | valid")->required();
  frame_cmd->add_option("formula", frame_formula, "formula for 'valid'");

  auto* algebra_cmd = app.add_subcommand("algebra", "classify the algebra of a frame");
  std::string algebra_file, algebra_eval;
  std::vector<std::string> algebra_assigns;
  bool algebra_omega = false;
  int algebra_window = 6;
  algebra_cmd->add_option("file", algebra_file, "frame file");
  algebra_cmd->add_flag("--omega", algebra_omega, "use the finite/cofinite algebra over w+1");
  algebra_cmd->add_option("--window", algebra_window, "sweep window for --omega");
  algebra_cmd->add_option("--eval", algebra_eval, "evaluate a formula instead of classifying");
  algebra_cmd->add_option("--assign", algebra_assigns,
                          "variable assignment (var={0,w} with --omega, var=w1,w2 otherwise)");

  auto* dual_cmd = app.add_subcommand("dual", "filters and the dual frame");
  std::string dual_file;
  std::vector<std::string> dual_generators;
  bool dual_omega = false;
  int dual_window = 6, dual_qdepth = 0;
  dual_cmd->add_option("file", dual_file, "frame file");
  dual_cmd->add_flag("--omega", dual_omega, "dualize the finite/cofinite algebra over w+1");
  dual_cmd->add_option("--window", dual_window, "filter window for --omega");
  dual_cmd->add_option("--qdepth", dual_qdepth, "meet-family closure depth (0 = chain only)");
  dual_cmd->add_option("--generator", dual_generators, "extra generator as a world list");

  auto* separate_cmd = app.add_subcommand("separate", "separation demos");
  std::string separate_demo;
  int separate_window = 8, separate_nmax = 20, separate_k = 10;
  separate_cmd->add_option("demo", separate_demo, "diamond | nc | loeb")->required();
  separate_cmd->add_option("--window", separate_window, "window for 'diamond'");
  separate_cmd->add_option("--n-max", separate_nmax, "claim bound for 'diamond'");
  separate_cmd->add_option("--k", separate_k, "largest fan for 'nc'/'loeb'");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive invariant suites");
  std::string verify_which;
  int verify_worlds = -1, verify_size = 7, verify_tuples = 100;
  unsigned verify_seed = 20250814;
  verify_cmd
      ->add_option("suite", verify_which,
                   "path-meet | infrep | infdist | infmeettoloeb | duality | prover-oracle")
      ->required();
  verify_cmd->add_option("--max-worlds", verify_worlds, "world bound (suite-specific default)");
  verify_cmd->add_option("--max-size", verify_size, "formula size bound for prover-oracle");
  verify_cmd->add_option("--random-tuples", verify_tuples, "random tuples for infdist");
  verify_cmd->add_option("--seed", verify_seed, "seed for infdist");

  auto* claim_cmd = app.add_subcommand("claim-check", "w-vs-n agreement threshold");
  std::string claim_formula;
  std::vector<std::string> claim_assigns;
  bool claim_corpus_flag = false;
  int claim_nmax = 20;
  claim_cmd->add_option("formula", claim_formula, "formula text");
  claim_cmd->add_option("--assign", claim_assigns, "variable assignment var={0,3,w}");
  claim_cmd->add_flag("--corpus", claim_corpus_flag, "run the built-in corpus");
  claim_cmd->add_option("--n-max", claim_nmax, "largest n to test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (prove_cmd->parsed()) return run_prove(prove_formula, prove_tree, false, opt);
    if (counter_cmd->parsed()) return run_prove(counter_formula, false, true, opt);
    if (frame_cmd->parsed()) return run_frame(frame_file, frame_action, frame_formula, opt);
    if (algebra_cmd->parsed()) {
      if (!algebra_omega && algebra_file.empty()) {
        std::cerr << "algebra needs a frame file or --omega\n";
        return 2;
      }
      return run_algebra(algebra_file, algebra_omega, algebra_window, algebra_eval,
                         algebra_assigns, opt);
    }
    if (dual_cmd->parsed()) {
      if (!dual_omega && dual_file.empty()) {
        std::cerr << "dual needs a frame file or --omega\n";
        return 2;
      }
      return run_dual(dual_file, dual_omega, dual_window, dual_qdepth, dual_generators, opt);
    }
    if (separate_cmd->parsed()) {
      if (separate_demo == "diamond")
        return emit_report(gl::separate_diamond(separate_window, separate_nmax), opt);
      if (separate_demo == "nc" || separate_demo == "loeb")
        return emit_report(gl::separate_fans(2, separate_k, opt.guard_bits, opt.budget), opt);
      std::cerr << "unknown demo '" << separate_demo << "' (want diamond|nc|loeb)\n";
      return 2;
    }
    if (verify_cmd->parsed()) {
      auto worlds = [&](int dflt) { return verify_worlds > 0 ? verify_worlds : dflt; };
      if (verify_which == "path-meet") return emit_report(gl::verify_path_meet(worlds(4)), opt);
      if (verify_which == "infrep")
        return emit_report(gl::verify_infrep(worlds(4), opt.guard_bits), opt);
      if (verify_which == "duality")
        return emit_report(gl::verify_duality(worlds(4), opt.guard_bits), opt);
      if (verify_which == "infdist")
        return emit_report(gl::verify_infdist(3, worlds(5), verify_tuples, verify_seed), opt);
      if (verify_which == "infmeettoloeb")
        return emit_report(gl::verify_infmeettoloeb(worlds(5)), opt);
      if (verify_which == "prover-oracle")
        return emit_report(gl::verify_prover_oracle(verify_size, worlds(4), opt.budget), opt);
      std::cerr << "unknown suite '" << verify_which << "'\n";
      return 2;
    }
    if (claim_cmd->parsed()) {
      if (!claim_corpus_flag && claim_formula.empty()) {
        std::cerr << "claim-check needs a formula or --corpus\n";
        return 2;
      }
      return run_claim_check(claim_formula, claim_assigns, claim_corpus_flag, claim_nmax, opt);
    }
  } catch (const gl::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
