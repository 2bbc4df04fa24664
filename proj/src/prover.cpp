#include "gl/prover.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl/errors.hpp"

namespace gl {

namespace {

bool member(const std::vector<Formula>& v, Formula f) {
  return std::binary_search(v.begin(), v.end(), f);
}

std::vector<Formula> with(std::vector<Formula> v, Formula f) {
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it == v.end() || *it != f) v.insert(it, f);
  return v;
}

std::vector<Formula> without(std::vector<Formula> v, Formula f) {
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it != v.end() && *it == f) v.erase(it);
  return v;
}

bool intersects(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

// The modal-step premise for principal []a: antecedent boxes, their bodies,
// and the discharged []a itself, with a alone on the right.
Sequent box_premise(const Sequent& s, Formula boxed) {
  std::vector<Formula> ante;
  for (Formula f : s.ante)
    if (f.kind() == Kind::Box) {
      ante.push_back(f);
      ante.push_back(f.child());
    }
  ante.push_back(boxed);
  return Sequent::make(std::move(ante), {boxed.child()});
}

}  // namespace

Sequent Sequent::make(std::vector<Formula> ante, std::vector<Formula> succ) {
  auto norm = [](std::vector<Formula>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  norm(ante);
  norm(succ);
  return Sequent{std::move(ante), std::move(succ)};
}

std::size_t SequentHash::operator()(const Sequent& s) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (Formula f : s.ante) mix(f.id());
  mix(~std::uint64_t{0});
  for (Formula f : s.succ) mix(f.id());
  return h;
}

Prover::Prover(long node_budget) : budget_(node_budget) {
  if (node_budget < 1) throw std::invalid_argument("node budget must be positive");
}

void Prover::tick() {
  if (++nodes_ > budget_)
    throw SearchBudgetError("proof search gave up after " + std::to_string(budget_) +
                            " nodes; raise the budget for a verdict");
}

bool Prover::decide(const Sequent& s) { return decide_impl(s); }

bool Prover::decide(Formula goal) { return decide_impl(Sequent::make({}, {goal})); }

bool Prover::decide_impl(const Sequent& s) {
  auto hit = memo_.find(s);
  if (hit != memo_.end()) return hit->second;
  tick();

  bool result = false;
  bool settled = false;

  if (intersects(s.ante, s.succ)) {
    result = true;
    settled = true;
  }
  if (!settled)
    for (Formula f : s.succ)
      if (f.kind() == Kind::Top) {
        result = true;
        settled = true;
        break;
      }

  // Classical reductions, first applicable formula in sorted order. All of
  // these are invertible, so committing to one loses nothing.
  if (!settled)
    for (Formula f : s.ante) {
      if (f.kind() == Kind::Top) {
        result = decide_impl(Sequent{without(s.ante, f), s.succ});
        settled = true;
        break;
      }
      if (f.kind() == Kind::And) {
        result = decide_impl(
            Sequent::make(with(with(without(s.ante, f), f.left()), f.right()), s.succ));
        settled = true;
        break;
      }
      if (f.kind() == Kind::Not) {
        result = decide_impl(Sequent{without(s.ante, f), with(s.succ, f.child())});
        settled = true;
        break;
      }
    }
  if (!settled)
    for (Formula f : s.succ) {
      if (f.kind() == Kind::And) {
        result = decide_impl(Sequent{s.ante, with(without(s.succ, f), f.left())}) &&
                 decide_impl(Sequent{s.ante, with(without(s.succ, f), f.right())});
        settled = true;
        break;
      }
      if (f.kind() == Kind::Not) {
        result = decide_impl(Sequent{with(s.ante, f.child()), without(s.succ, f)});
        settled = true;
        break;
      }
    }

  // Saturated: only the modal step is left. Trying each boxed succedent
  // formula is a genuine choice point (the rule is not invertible).
  if (!settled)
    for (Formula f : s.succ)
      if (f.kind() == Kind::Box && decide_impl(box_premise(s, f))) {
        result = true;
        break;
      }

  memo_.emplace(s, result);
  return result;
}

ProofTree Prover::proof(const Sequent& s) {
  if (!decide_impl(s)) throw std::logic_error("proof requested for an unprovable sequent");
  return proof_impl(s);
}

ProofTree Prover::proof_impl(const Sequent& s) {
  for (Formula f : s.ante)
    if (member(s.succ, f)) return ProofTree{s, "ax", f, {}};
  for (Formula f : s.succ)
    if (f.kind() == Kind::Top) return ProofTree{s, "ax-top", f, {}};

  for (Formula f : s.ante) {
    if (f.kind() == Kind::Top) {
      ProofTree child = proof_impl(Sequent{without(s.ante, f), s.succ});
      return ProofTree{s, "top-left", f, {std::move(child)}};
    }
    if (f.kind() == Kind::And) {
      ProofTree child = proof_impl(
          Sequent::make(with(with(without(s.ante, f), f.left()), f.right()), s.succ));
      return ProofTree{s, "and-left", f, {std::move(child)}};
    }
    if (f.kind() == Kind::Not) {
      ProofTree child = proof_impl(Sequent{without(s.ante, f), with(s.succ, f.child())});
      return ProofTree{s, "not-left", f, {std::move(child)}};
    }
  }
  for (Formula f : s.succ) {
    if (f.kind() == Kind::And) {
      ProofTree left = proof_impl(Sequent{s.ante, with(without(s.succ, f), f.left())});
      ProofTree right = proof_impl(Sequent{s.ante, with(without(s.succ, f), f.right())});
      return ProofTree{s, "and-right", f, {std::move(left), std::move(right)}};
    }
    if (f.kind() == Kind::Not) {
      ProofTree child = proof_impl(Sequent{with(s.ante, f.child()), without(s.succ, f)});
      return ProofTree{s, "not-right", f, {std::move(child)}};
    }
  }

  for (Formula f : s.succ)
    if (f.kind() == Kind::Box) {
      Sequent premise = box_premise(s, f);
      if (decide_impl(premise))
        return ProofTree{s, "box", f, {proof_impl(premise)}};
    }
  throw std::logic_error("proof reconstruction diverged from the decision");
}

// Tableau node of a refutation: the variables true at this world and one
// child per refuted modal premise.
struct Prover::RefNode {
  std::vector<std::string> vars_true;
  std::vector<RefNode> children;
};

Prover::RefNode Prover::refute_impl(const Sequent& s) {
  for (Formula f : s.ante) {
    if (f.kind() == Kind::Top) return refute_impl(Sequent{without(s.ante, f), s.succ});
    if (f.kind() == Kind::And)
      return refute_impl(
          Sequent::make(with(with(without(s.ante, f), f.left()), f.right()), s.succ));
    if (f.kind() == Kind::Not)
      return refute_impl(Sequent{without(s.ante, f), with(s.succ, f.child())});
  }
  for (Formula f : s.succ) {
    if (f.kind() == Kind::And) {
      Sequent left{s.ante, with(without(s.succ, f), f.left())};
      if (!decide_impl(left)) return refute_impl(left);
      Sequent right{s.ante, with(without(s.succ, f), f.right())};
      if (!decide_impl(right)) return refute_impl(right);
      throw std::logic_error("refutation reconstruction diverged from the decision");
    }
    if (f.kind() == Kind::Not)
      return refute_impl(Sequent{with(s.ante, f.child()), without(s.succ, f)});
  }

  RefNode node;
  for (Formula f : s.ante)
    if (f.kind() == Kind::Var) node.vars_true.push_back(f.var_name());
  for (Formula f : s.succ)
    if (f.kind() == Kind::Box) node.children.push_back(refute_impl(box_premise(s, f)));
  return node;
}

Countermodel Prover::countermodel(Formula goal) {
  Sequent s = Sequent::make({}, {goal});
  if (decide_impl(s)) throw std::logic_error("countermodel requested for a provable goal");
  RefNode root = refute_impl(s);

  // Preorder flattening: a subtree occupies a contiguous index range, so the
  // strict-descendant edges of the transitive closure are (i, j) for j in
  // the subtree span below i.
  std::vector<const RefNode*> order;
  struct Walk {
    static int run(const RefNode& n, std::vector<const RefNode*>& order) {
      order.push_back(&n);
      int size = 1;
      for (const RefNode& c : n.children) size += run(c, order);
      return size;
    }
  };
  struct Span {
    static int run(const RefNode& n, int at, std::vector<std::pair<int, int>>& edges) {
      int end = at + 1;
      for (const RefNode& c : n.children) end = Span::run(c, end, edges);
      for (int j = at + 1; j < end; ++j) edges.emplace_back(at, j);
      return end;
    }
  };
  int total = Walk::run(root, order);
  if (total > kMaxWorlds)
    throw ResourceGuardError("countermodel needs " + std::to_string(total) +
                             " worlds, frame cap is " + std::to_string(kMaxWorlds));
  std::vector<std::pair<int, int>> edges;
  Span::run(root, 0, edges);

  std::vector<std::string> names(total);
  for (int i = 0; i < total; ++i) names[i] = "w" + std::to_string(i);

  std::map<std::string, WorldSet> valuation;
  for (const std::string& v : variables(goal)) valuation[v] = WorldSet{};
  for (int i = 0; i < total; ++i)
    for (const std::string& v : order[i]->vars_true) valuation[v].set(i);

  return Countermodel{Model{Frame(std::move(names), edges), std::move(valuation)}, 0};
}

ProveOutcome prove(Formula goal, long node_budget) {
  Prover p(node_budget);
  ProveOutcome out;
  Sequent s = Sequent::make({}, {goal});
  if (p.decide(s))
    out.proof = p.proof(s);
  else
    out.countermodel = p.countermodel(goal);
  out.nodes = p.nodes_used();
  return out;
}

bool valid_gl(Formula goal, long node_budget) { return Prover(node_budget).decide(goal); }

namespace {

bool check_node(const ProofTree& t) {
  const Sequent& s = t.sequent;
  auto principal_is = [&](Kind k) {
    return t.principal.has_value() && t.principal->kind() == k;
  };
  if (t.rule == "ax")
    return t.children.empty() && t.principal.has_value() && member(s.ante, *t.principal) &&
           member(s.succ, *t.principal);
  if (t.rule == "ax-top")
    return t.children.empty() && principal_is(Kind::Top) && member(s.succ, *t.principal);

  auto one_child_is = [&](const Sequent& want) {
    return t.children.size() == 1 && t.children[0].sequent == want && check_node(t.children[0]);
  };

  if (t.rule == "top-left")
    return principal_is(Kind::Top) && member(s.ante, *t.principal) &&
           one_child_is(Sequent{without(s.ante, *t.principal), s.succ});
  if (t.rule == "and-left") {
    if (!principal_is(Kind::And) || !member(s.ante, *t.principal)) return false;
    Formula f = *t.principal;
    return one_child_is(Sequent::make(with(with(without(s.ante, f), f.left()), f.right()), s.succ));
  }
  if (t.rule == "and-right") {
    if (!principal_is(Kind::And) || !member(s.succ, *t.principal)) return false;
    Formula f = *t.principal;
    return t.children.size() == 2 &&
           t.children[0].sequent == Sequent{s.ante, with(without(s.succ, f), f.left())} &&
           t.children[1].sequent == Sequent{s.ante, with(without(s.succ, f), f.right())} &&
           check_node(t.children[0]) && check_node(t.children[1]);
  }
  if (t.rule == "not-left") {
    if (!principal_is(Kind::Not) || !member(s.ante, *t.principal)) return false;
    Formula f = *t.principal;
    return one_child_is(Sequent{without(s.ante, f), with(s.succ, f.child())});
  }
  if (t.rule == "not-right") {
    if (!principal_is(Kind::Not) || !member(s.succ, *t.principal)) return false;
    Formula f = *t.principal;
    return one_child_is(Sequent{with(s.ante, f.child()), without(s.succ, f)});
  }
  if (t.rule == "box") {
    if (!principal_is(Kind::Box) || !member(s.succ, *t.principal)) return false;
    return one_child_is(box_premise(s, *t.principal));
  }
  return false;
}

}  // namespace

bool check_proof(const ProofTree& t) { return check_node(t); }

NoncompactReport noncompact_drive(Formula phi, int n_max, long node_budget) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  Prover p(node_budget);
  NoncompactReport r{phi, n_max, {}, true, false, false};
  for (int n = 0; n <= n_max; ++n) {
    bool v = p.decide(Formula::implies(phi, Formula::iterate(ModalOp::Diamond, n, Formula::top())));
    r.premise_valid.push_back(v);
    if (!v) r.premises_all_valid = false;
  }
  r.conclusion_valid = p.decide(Formula::implies(phi, Formula::bottom()));
  r.agree = r.premises_all_valid == r.conclusion_valid;
  return r;
}

SoundnessProbe soundness_probe(Formula goal, std::span<const Frame> frames, int guard_bits,
                               long node_budget) {
  for (const Frame& fr : frames) {
    FrameClassReport c = classify_frame(fr);
    if (!c.transitive || !c.acyclic)
      throw std::invalid_argument("soundness probe requires transitive acyclic frames");
  }
  SoundnessProbe probe;
  probe.applicable = valid_gl(goal, node_budget);
  if (!probe.applicable) return probe;
  int i = 0;
  for (const Frame& fr : frames) {
    ++probe.frames_checked;
    if (!frame_valid(fr, goal, guard_bits)) {
      probe.all_valid = false;
      if (probe.failure.empty())
        probe.failure =
            "frame #" + std::to_string(i) + " (" + std::to_string(fr.size()) + " worlds)";
    }
    ++i;
  }
  return probe;
}

}  // namespace gl
