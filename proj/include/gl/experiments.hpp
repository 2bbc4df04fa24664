#ifndef GL_EXPERIMENTS_HPP
#define GL_EXPERIMENTS_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gl/algebra.hpp"
#include "gl/duality.hpp"
#include "gl/formula.hpp"
#include "gl/kripke.hpp"
#include "gl/omega.hpp"
#include "gl/prover.hpp"

namespace gl {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A named batch of checks plus the parameters that produced it. Enumeration
// orders and seeds are fixed, so rebuilding with equal parameters reproduces
// the verdicts.
struct ExperimentReport {
  std::string experiment;
  std::map<std::string, std::string> parameters;
  std::vector<CaseResult> cases;

  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
  nlohmann::json to_json() const;
  void print_text(std::ostream& os) const;
};

// All formulas of primitive size <= max_size over the given variables
// (atoms have size 1, negation and box add 1, conjunction adds 1 over both
// sides). max_size is capped at 12.
std::vector<Formula> enumerate_formulas(int max_size, std::span<const std::string> vars);

// Every irreflexive transitive frame on 1..max_worlds worlds by raw
// enumeration of relation masks (not up to isomorphism). max_worlds <= 5.
std::vector<Frame> irreflexive_transitive_frames(int max_worlds);

// Validity by exhaustive countermodel search over all irreflexive transitive
// frames with <= max_worlds worlds under all valuations. Shares nothing with
// the proof search; the two are compared formula by formula.
class BruteOracle {
 public:
  explicit BruteOracle(int max_worlds, int guard_bits = kDefaultGuardBits);
  bool valid(Formula f) const;
  const std::vector<Frame>& frames() const { return frames_; }

 private:
  std::vector<Frame> frames_;
  int guard_bits_;
};

// Acyclicity <=> the complex algebra's diamond chain stabilizes at 0, over
// every relation on up to max_worlds worlds.
ExperimentReport verify_path_meet(int max_worlds = 4);

// The canonical filter map over every relation on up to max_worlds worlds:
// injectivity, Boolean and box preservation, and the finite image of the
// diamond chain intersecting to the image of the chain meet (empty exactly
// when the meet is 0).
ExperimentReport verify_infrep(int max_worlds = 4, int guard_bits = kDefaultGuardBits);

// Dual-frame round trip over every relation on up to max_worlds worlds:
// dual is isomorphic to the source, the level-0 condition keeps every prime
// filter, and duals of transitive sources are transitive.
ExperimentReport verify_duality(int max_worlds = 4, int guard_bits = kDefaultGuardBits);

// Nested box distribution over the chain: exhaustive element tuples for
// k <= 2 on acyclic transitive frames with <= exhaustive_worlds worlds, and
// seeded random tuples for k <= 3 on acyclic transitive frames with
// <= random_worlds worlds.
ExperimentReport verify_infdist(int exhaustive_worlds = 3, int random_worlds = 5,
                                int random_tuples = 100, unsigned seed = 20250814);

// Every transitive relation on <= max_worlds worlds whose chain stabilizes
// at 0 validates the Loeb equation.
ExperimentReport verify_infmeettoloeb(int max_worlds = 5);

// Proof search vs. BruteOracle on every formula of size <= max_size over
// {p, q}. Any disagreement fails and is printed.
ExperimentReport verify_prover_oracle(int max_size = 7, int oracle_worlds = 4,
                                      long node_budget = kDefaultNodeBudget);

// Randomized agreement between symbolic w+1 elements and a powerset oracle
// on a truncated chain-with-top frame; the truncation window is twice the
// largest sampled exception, which keeps every operation exact.
ExperimentReport verify_omega_ops(int trials = 10000, unsigned seed = 20250814);

// The fixed formula/valuation pairs (>= 20) driving the w-vs-n agreement
// checks on the w+1 algebra.
std::vector<std::pair<Formula, OmegaValuation>> claim_corpus();

// The w+1 algebra in one report: exact nonzero chain meet, the level-0
// filter condition dropping exactly the free ultrafilter, windowed equation
// sweeps, dual-frame shape, canonical-map spot checks, and the claim corpus.
ExperimentReport separate_diamond(int window = 8, int claim_n_max = 20);

// Fans with k = k_min..k_max branches and the two-branch witness formula:
// refuted at the root by a constructed valuation, valid at every non-root
// world, bounded diamond premises frame-valid, Loeb formula frame-valid.
ExperimentReport separate_fans(int k_min = 2, int k_max = 10,
                               int guard_bits = kDefaultGuardBits,
                               long node_budget = kDefaultNodeBudget);

// Proves the K axiom, the 4 axiom, the Loeb formula, and their boxed
// iterates up to depth 3, replaying every proof; refutes <>T, p -> []p and
// []p -> p with verified countermodels.
ExperimentReport axiom_corpus(long node_budget = kDefaultNodeBudget);

// Every formula proved in axiom_corpus is valid on every transitive acyclic
// frame with <= max_worlds worlds.
ExperimentReport soundness_corpus(int max_worlds = 4, int guard_bits = kDefaultGuardBits,
                                  long node_budget = kDefaultNodeBudget);

}  // namespace gl

#endif
