// Acceptance gate: one line per criterion, "criterion N PASS|FAIL", and a
// nonzero exit when anything fails. Bounds here are the shipped defaults, not
// reduced ones; the whole run stays within a few minutes.

#include <chrono>
#include <iostream>
#include <string>

#include "gl/experiments.hpp"
#include "gl/omega.hpp"

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << (pass ? " PASS" : " FAIL");
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
  if (!pass) ++failures;
}

void dump_failures(const gl::ExperimentReport& r) {
  for (const gl::CaseResult& c : r.cases)
    if (!c.pass) std::cout << "    failing case: " << c.name << " (" << c.detail << ")\n";
}

std::string case_count(const gl::ExperimentReport& r) {
  return std::to_string(r.cases.size()) + " cases";
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  {
    auto t0 = clock::now();
    gl::ExperimentReport r = gl::verify_prover_oracle(7, 4);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
    bool corpus_size_ok = gl::enumerate_formulas(7, std::vector<std::string>{"p", "q"}).size() ==
                          7779;
    bool in_time = secs <= 300;
    std::string detail;
    for (const auto& c : r.cases) {
      if (!detail.empty()) detail += "; ";
      detail += c.detail;
    }
    report(1, r.pass() && corpus_size_ok && in_time, detail + ", " + std::to_string(secs) + "s");
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::axiom_corpus();
    report(2, r.pass(), case_count(r));
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::verify_path_meet(4);
    report(3, r.pass(), "all relations on up to 4 worlds");
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport emb = gl::verify_infrep(4);
    gl::ExperimentReport dual = gl::verify_duality(4);
    report(4, emb.pass() && dual.pass(), "embedding and dual reconstruction, up to 4 worlds");
    if (!emb.pass()) dump_failures(emb);
    if (!dual.pass()) dump_failures(dual);
  }
  {
    gl::ExperimentReport r = gl::verify_infdist();
    report(5, r.pass(), "exhaustive to 3 worlds, randomized to 5");
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::verify_infmeettoloeb(5);
    report(6, r.pass(), "transitive relations on up to 5 worlds");
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::separate_diamond(8, 20);
    gl::ClaimCheckResult box_case = gl::check_claim(
        gl::Formula::box(gl::Formula::var("p")),
        {{"p", gl::CofinElement::cofinite_set({5}, true)}}, 20);
    bool box_ok = box_case.verified && box_case.witness == 6;
    report(7, r.pass() && box_ok, case_count(r) + ", box threshold 6");
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::separate_fans(2, 10);
    report(8, r.pass(), "fans k = 2..10, " + case_count(r));
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::verify_omega_ops(10000, 20250814);
    report(9, r.pass(), r.cases.empty() ? "" : r.cases[0].detail);
    if (!r.pass()) dump_failures(r);
  }
  {
    gl::ExperimentReport r = gl::soundness_corpus(4);
    report(10, r.pass(), case_count(r));
    if (!r.pass()) dump_failures(r);
  }

  std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
