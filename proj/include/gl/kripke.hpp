#ifndef GL_KRIPKE_HPP
#define GL_KRIPKE_HPP

#include <bitset>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gl/errors.hpp"
#include "gl/formula.hpp"

namespace gl {

// Sets of worlds as fixed-width bitsets; frames are capped at kMaxWorlds.
constexpr int kMaxWorlds = 128;
using WorldSet = std::bitset<kMaxWorlds>;

// Finite directed frame. Worlds carry string names (the file format and CLI
// speak names); all algorithms run on indices.
class Frame {
 public:
  Frame(std::vector<std::string> worlds, const std::vector<std::pair<int, int>>& edges);

  static Frame from_names(std::vector<std::string> worlds,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& world_name(int w) const { return names_.at(w); }
  const std::vector<std::string>& world_names() const { return names_; }
  std::optional<int> world_index(std::string_view name) const;

  bool has_edge(int a, int b) const { return succ_.at(a).test(b); }
  const WorldSet& successors(int w) const { return succ_.at(w); }
  WorldSet all_worlds() const;
  std::vector<std::pair<int, int>> edges() const;  // lexicographic order

  bool transitive() const;
  bool irreflexive() const;

 private:
  std::vector<std::string> names_;
  std::vector<WorldSet> succ_;
};

// Model = frame + valuation. Variables not present in the map are false
// everywhere. Valuation sets must stay within the frame.
struct Model {
  Frame frame;
  std::map<std::string, WorldSet> valuation;
};

// Truth set of f in the model: all worlds where f holds.
WorldSet eval_states(const Model& m, Formula f);

bool satisfies(const Model& m, int world, Formula f);
bool satisfies(const Model& m, std::string_view world_name, Formula f);

// True at every world of the model.
bool model_true(const Model& m, Formula f);

// Guard bounds for exhaustive sweeps: an enumeration of 2^bits candidates is
// refused when bits exceeds the guard. The default can be overridden per call
// (the CLI wires --guard-bits / GLWB_GUARD_BITS through to these).
constexpr int kDefaultGuardBits = 24;

class CompiledFormula;

// True under every valuation of the variables of f over frame worlds.
// Exhaustive over 2^(|worlds| * |vars|) valuations; guarded. The
// CompiledFormula overload skips recompiling in enumeration loops.
bool frame_valid(const Frame& fr, Formula f, int guard_bits = kDefaultGuardBits);
bool frame_valid(const Frame& fr, const CompiledFormula& cf, int guard_bits = kDefaultGuardBits);

// True at the given world under every valuation. Equivalent to quantifying
// over valuations of the subframe generated by the world (truth at a world
// only depends on worlds reachable from it), which is what makes this
// affordable on large frames with shallow worlds. Guarded likewise.
bool world_valid(const Frame& fr, int world, Formula f, int guard_bits = kDefaultGuardBits);
bool world_valid(const Frame& fr, int world, const CompiledFormula& cf,
                 int guard_bits = kDefaultGuardBits);

// Subframe on the worlds reachable from w, plus w itself. `image` receives,
// for each new index, the original index (new index 0 is w).
Frame generated_subframe(const Frame& fr, int w, std::vector<int>* image = nullptr);

// Longest outgoing path length from w; nullopt when a cycle is reachable.
using Height = std::optional<int>;
Height height(const Frame& fr, int w);

struct FrameClassReport {
  bool transitive = false;
  bool irreflexive = false;
  bool acyclic = false;
  bool locally_finite_height = false;  // every world has finite height
  std::vector<Height> heights;         // indexed by world
  // Finite + irreflexive + transitive (the frames the prover's countermodels
  // live in), and transitive + locally finite height.
  bool finite_irreflexive_transitive = false;
  bool transitive_locally_finite = false;
};

FrameClassReport classify_frame(const Frame& fr);

// ({n-1, ..., 0}, >): worlds named "0".."n-1", edge i -> j iff i > j.
Frame make_descending_chain(int n);

// Root "r" over k disjoint descending branches; branch j has worlds
// "b<j>_1" (bottom) .. "b<j>_<j>" (top). The root sees every branch world and
// branch worlds see exactly the lower worlds of their own branch, so the
// emitted relation is already transitive and irreflexive.
Frame make_fan(int k);

// Frame with worlds "0".."n-1" and the given successor masks.
Frame frame_from_masks(int n, std::span<const WorldSet> succ);

// Brute-force frame isomorphism (names ignored); practical for ~8 worlds.
std::optional<std::vector<int>> find_isomorphism(const Frame& a, const Frame& b);

// Formula compiled to a flat postorder program over the interned DAG, for
// allocation-free repeated evaluation under many valuations.
class CompiledFormula {
 public:
  explicit CompiledFormula(Formula f);
  const std::vector<std::string>& vars() const { return vars_; }
  // var_sets[i] is the truth set for vars()[i].
  WorldSet eval(const Frame& fr, std::span<const WorldSet> var_sets) const;

 private:
  struct Op {
    Kind kind;
    int a = -1, b = -1;  // operand slots
    int var = -1;        // Var: index into vars_
  };
  std::vector<Op> ops_;  // postorder; result in the last slot
  std::vector<std::string> vars_;
};

}  // namespace gl

#endif
