#ifndef GL_PROVER_HPP
#define GL_PROVER_HPP

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gl/formula.hpp"
#include "gl/kripke.hpp"

namespace gl {

// Search nodes spent before a decision attempt gives up. Generous: the
// search is terminating, so this only bounds pathological inputs.
constexpr long kDefaultNodeBudget = 1'000'000;

// Antecedent and succedent as sorted duplicate-free formula lists, read as
// "the conjunction of ante entails the disjunction of succ". Contraction is
// baked in by the set representation, which keeps memoization exact.
struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;

  static Sequent make(std::vector<Formula> ante, std::vector<Formula> succ);
  bool operator==(const Sequent& o) const = default;
};

struct SequentHash {
  std::size_t operator()(const Sequent& s) const;
};

// Backward-search derivation. Rules:
//   "ax"        some formula on both sides; leaf
//   "ax-top"    T in the succedent; leaf
//   "top-left"  drops T from the antecedent
//   "and-left"  replaces a & b in the antecedent by a, b
//   "and-right" splits on a & b in the succedent; two children
//   "not-left"  moves the body of ~a to the succedent
//   "not-right" moves the body of ~a to the antecedent
//   "box"       on []a in the succedent, with antecedent boxes []G:
//               premise  []G, G, []a => a   (the discharged []a is what
//               separates this calculus from plain K4 search)
struct ProofTree {
  Sequent sequent;
  std::string rule;
  std::optional<Formula> principal;
  std::vector<ProofTree> children;
};

struct Countermodel {
  Model model;
  int world = 0;  // index refuting the goal
};

// One decision session: shared memo table and node budget. Exceeding the
// budget throws SearchBudgetError (a distinguished inconclusive outcome, not
// a verdict).
class Prover {
 public:
  explicit Prover(long node_budget = kDefaultNodeBudget);

  bool decide(const Sequent& s);
  bool decide(Formula goal);  // empty antecedent, goal alone on the right

  // Derivation of a decidedly provable sequent; replayable by check_proof.
  ProofTree proof(const Sequent& s);

  // Finite irreflexive transitive refutation of a decidedly unprovable goal.
  Countermodel countermodel(Formula goal);

  long nodes_used() const { return nodes_; }

 private:
  struct RefNode;
  bool decide_impl(const Sequent& s);
  ProofTree proof_impl(const Sequent& s);
  RefNode refute_impl(const Sequent& s);
  void tick();

  long budget_;
  long nodes_ = 0;
  std::unordered_map<Sequent, bool, SequentHash> memo_;
};

struct ProveOutcome {
  std::optional<ProofTree> proof;
  std::optional<Countermodel> countermodel;
  long nodes = 0;
  bool valid() const { return proof.has_value(); }
};

// Decides the goal and materializes the witness for the verdict.
ProveOutcome prove(Formula goal, long node_budget = kDefaultNodeBudget);

bool valid_gl(Formula goal, long node_budget = kDefaultNodeBudget);

// Independent structural replay of every rule instance in the tree; no
// search involved.
bool check_proof(const ProofTree& t);

// Bounded driver for the rule with premises phi -> <>^n T (all n) and
// conclusion phi -> F. Premises are checked for n = 0..n_max only; `agree`
// compares the bounded premise sweep with the conclusion and can honestly
// come out false (e.g. phi = <>^(n_max+1) T passes every checked premise).
struct NoncompactReport {
  Formula phi;
  int n_max = 0;
  std::vector<bool> premise_valid;  // n = 0..n_max
  bool premises_all_valid = false;
  bool conclusion_valid = false;
  bool agree = false;
};

NoncompactReport noncompact_drive(Formula phi, int n_max, long node_budget = kDefaultNodeBudget);

// If the goal is provable, every supplied frame must validate it. Frames are
// required to be transitive and acyclic up front; a non-member is a
// precondition error, not a finding.
struct SoundnessProbe {
  bool applicable = false;  // goal provable
  int frames_checked = 0;
  bool all_valid = true;
  std::string failure;  // world-count and index detail for a violation
};

SoundnessProbe soundness_probe(Formula goal, std::span<const Frame> frames,
                               int guard_bits = kDefaultGuardBits,
                               long node_budget = kDefaultNodeBudget);

}  // namespace gl

#endif
