#include "gl/kripke.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace gl {

Frame::Frame(std::vector<std::string> worlds, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(worlds)) {
  if (names_.empty()) throw std::invalid_argument("frame needs at least one world");
  if (static_cast<int>(names_.size()) > kMaxWorlds)
    throw std::invalid_argument("frame exceeds the " + std::to_string(kMaxWorlds) +
                                "-world cap");
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (uniq.size() != names_.size()) throw std::invalid_argument("duplicate world name");
  succ_.assign(names_.size(), {});
  int n = size();
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge endpoint out of range");
    succ_[a].set(b);
  }
}

Frame Frame::from_names(std::vector<std::string> worlds,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(worlds.size()); ++i) index.emplace(worlds[i], i);
  std::vector<std::pair<int, int>> idx_edges;
  idx_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw std::invalid_argument("edge endpoint '" + a + "' is not a world");
    if (ib == index.end()) throw std::invalid_argument("edge endpoint '" + b + "' is not a world");
    idx_edges.emplace_back(ia->second, ib->second);
  }
  return Frame(std::move(worlds), idx_edges);
}

std::optional<int> Frame::world_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

WorldSet Frame::all_worlds() const {
  WorldSet s;
  for (int i = 0; i < size(); ++i) s.set(i);
  return s;
}

std::vector<std::pair<int, int>> Frame::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (succ_[a].test(b)) out.emplace_back(a, b);
  return out;
}

bool Frame::transitive() const {
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (succ_[a].test(b) && (succ_[b] & ~succ_[a]).any()) return false;
  return true;
}

bool Frame::irreflexive() const {
  for (int a = 0; a < size(); ++a)
    if (succ_[a].test(a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

WorldSet eval_rec(const Model& m, Formula f, std::unordered_map<Formula, WorldSet>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  WorldSet out;
  switch (f.kind()) {
    case Kind::Top:
      out = m.frame.all_worlds();
      break;
    case Kind::Var: {
      auto v = m.valuation.find(f.var_name());
      if (v != m.valuation.end()) out = v->second;
      break;
    }
    case Kind::And:
      out = eval_rec(m, f.left(), memo) & eval_rec(m, f.right(), memo);
      break;
    case Kind::Not:
      out = ~eval_rec(m, f.child(), memo) & m.frame.all_worlds();
      break;
    case Kind::Box: {
      WorldSet x = eval_rec(m, f.child(), memo);
      for (int w = 0; w < m.frame.size(); ++w)
        if ((m.frame.successors(w) & ~x).none()) out.set(w);
      break;
    }
  }
  memo.emplace(f, out);
  return out;
}

void check_valuation(const Model& m) {
  WorldSet full = m.frame.all_worlds();
  for (const auto& [name, set] : m.valuation)
    if ((set & ~full).any())
      throw std::invalid_argument("valuation of '" + name + "' mentions unknown worlds");
}

}  // namespace

WorldSet eval_states(const Model& m, Formula f) {
  check_valuation(m);
  std::unordered_map<Formula, WorldSet> memo;
  return eval_rec(m, f, memo);
}

bool satisfies(const Model& m, int world, Formula f) {
  if (world < 0 || world >= m.frame.size()) throw std::invalid_argument("world out of range");
  return eval_states(m, f).test(world);
}

bool satisfies(const Model& m, std::string_view world_name, Formula f) {
  auto w = m.frame.world_index(world_name);
  if (!w) throw std::invalid_argument("unknown world '" + std::string(world_name) + "'");
  return satisfies(m, *w, f);
}

bool model_true(const Model& m, Formula f) { return eval_states(m, f) == m.frame.all_worlds(); }

// ---------------------------------------------------------------------------
// Compiled evaluation and validity sweeps

CompiledFormula::CompiledFormula(Formula f) {
  std::unordered_map<Formula, int> slot;
  std::map<std::string, int> var_slot;
  // Post-order over the interned DAG.
  std::vector<std::pair<Formula, bool>> stack{{f, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (slot.count(cur)) continue;
    if (!expanded) {
      stack.push_back({cur, true});
      switch (cur.kind()) {
        case Kind::And:
          stack.push_back({cur.left(), false});
          stack.push_back({cur.right(), false});
          break;
        case Kind::Not:
        case Kind::Box:
          stack.push_back({cur.child(), false});
          break;
        default:
          break;
      }
      continue;
    }
    Op op;
    op.kind = cur.kind();
    switch (cur.kind()) {
      case Kind::Top:
        break;
      case Kind::Var: {
        auto [it, fresh] = var_slot.emplace(cur.var_name(), static_cast<int>(vars_.size()));
        if (fresh) vars_.push_back(cur.var_name());
        op.var = it->second;
        break;
      }
      case Kind::And:
        op.a = slot.at(cur.left());
        op.b = slot.at(cur.right());
        break;
      case Kind::Not:
      case Kind::Box:
        op.a = slot.at(cur.child());
        break;
    }
    slot.emplace(cur, static_cast<int>(ops_.size()));
    ops_.push_back(op);
  }
}

WorldSet CompiledFormula::eval(const Frame& fr, std::span<const WorldSet> var_sets) const {
  if (var_sets.size() != vars_.size())
    throw std::invalid_argument("wrong number of variable sets");
  thread_local std::vector<WorldSet> vals;
  vals.resize(ops_.size());
  WorldSet full = fr.all_worlds();
  int n = fr.size();
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    switch (op.kind) {
      case Kind::Top:
        vals[i] = full;
        break;
      case Kind::Var:
        vals[i] = var_sets[op.var];
        break;
      case Kind::And:
        vals[i] = vals[op.a] & vals[op.b];
        break;
      case Kind::Not:
        vals[i] = ~vals[op.a] & full;
        break;
      case Kind::Box: {
        WorldSet out;
        const WorldSet& x = vals[op.a];
        for (int w = 0; w < n; ++w)
          if ((fr.successors(w) & ~x).none()) out.set(w);
        vals[i] = out;
        break;
      }
    }
  }
  return vals.back();
}

namespace {

// Runs fn(var_sets) for every valuation of `nvars` variables over `nworlds`
// worlds, maintained incrementally in Gray-code order. fn returns false to
// abort the sweep; the whole call returns true iff fn never aborted.
template <typename Fn>
bool sweep_valuations(int nworlds, int nvars, int guard_bits, Fn&& fn) {
  long bits = static_cast<long>(nworlds) * nvars;
  if (bits > guard_bits)
    throw ResourceGuardError("valuation sweep needs 2^" + std::to_string(bits) +
                             " cases, above the guard of 2^" + std::to_string(guard_bits));
  std::vector<WorldSet> sets(nvars);
  std::uint64_t count = 1ULL << bits;
  for (std::uint64_t i = 0;; ++i) {
    if (!fn(std::span<const WorldSet>(sets))) return false;
    if (i + 1 >= count) return true;
    int flip = std::countr_zero(i + 1);  // Gray code: one membership flips
    sets[flip / nworlds].flip(flip % nworlds);
  }
}

}  // namespace

bool frame_valid(const Frame& fr, const CompiledFormula& cf, int guard_bits) {
  WorldSet full = fr.all_worlds();
  return sweep_valuations(fr.size(), static_cast<int>(cf.vars().size()), guard_bits,
                          [&](std::span<const WorldSet> sets) { return cf.eval(fr, sets) == full; });
}

bool frame_valid(const Frame& fr, Formula f, int guard_bits) {
  return frame_valid(fr, CompiledFormula(f), guard_bits);
}

bool world_valid(const Frame& fr, int world, const CompiledFormula& cf, int guard_bits) {
  if (world < 0 || world >= fr.size()) throw std::invalid_argument("world out of range");
  // Truth at a world is settled by the subframe it generates, so quantify
  // valuations over that subframe only.
  Frame sub = generated_subframe(fr, world);
  return sweep_valuations(sub.size(), static_cast<int>(cf.vars().size()), guard_bits,
                          [&](std::span<const WorldSet> sets) { return cf.eval(sub, sets).test(0); });
}

bool world_valid(const Frame& fr, int world, Formula f, int guard_bits) {
  return world_valid(fr, world, CompiledFormula(f), guard_bits);
}

Frame generated_subframe(const Frame& fr, int w, std::vector<int>* image) {
  if (w < 0 || w >= fr.size()) throw std::invalid_argument("world out of range");
  std::vector<int> order{w};
  WorldSet seen;
  seen.set(w);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const WorldSet& s = fr.successors(order[i]);
    for (int v = 0; v < fr.size(); ++v)
      if (s.test(v) && !seen.test(v)) {
        seen.set(v);
        order.push_back(v);
      }
  }
  std::vector<int> back(fr.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) back[order[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  names.reserve(order.size());
  for (int orig : order) names.push_back(fr.world_name(orig));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int v = 0; v < fr.size(); ++v)
      if (fr.successors(order[i]).test(v)) edges.emplace_back(static_cast<int>(i), back[v]);
  if (image) *image = order;
  return Frame(std::move(names), edges);
}

// ---------------------------------------------------------------------------
// Heights and classification

namespace {

// Memoized longest-path DFS; nullopt = a cycle is reachable. in_progress
// nodes are DFS ancestors, so meeting one means we closed a cycle.
struct HeightDfs {
  const Frame& fr;
  std::vector<int> state;  // 0 white, 1 on stack, 2 done
  std::vector<Height> h;

  explicit HeightDfs(const Frame& f) : fr(f), state(f.size(), 0), h(f.size()) {}

  Height run(int w) {
    if (state[w] == 1) return std::nullopt;
    if (state[w] == 2) return h[w];
    state[w] = 1;
    Height best = 0;
    for (int v = 0; v < fr.size(); ++v) {
      if (!fr.successors(w).test(v)) continue;
      Height sub = run(v);
      if (!sub) {
        best = std::nullopt;
        break;
      }
      if (best && *sub + 1 > *best) best = *sub + 1;
    }
    state[w] = 2;
    h[w] = best;
    return best;
  }
};

bool acyclic_by_dfs(const Frame& fr) {
  std::vector<int> state(fr.size(), 0);  // 0 white, 1 on stack, 2 done
  for (int start = 0; start < fr.size(); ++start) {
    if (state[start] != 0) continue;
    std::vector<std::pair<int, int>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& top = stack.back();
      int w = top.first;
      int v = top.second;
      while (v < fr.size() && !fr.successors(w).test(v)) ++v;
      if (v >= fr.size()) {
        state[w] = 2;
        stack.pop_back();
        continue;
      }
      top.second = v + 1;
      if (state[v] == 1) return false;  // back edge closes a cycle
      if (state[v] == 0) {
        state[v] = 1;
        stack.push_back({v, 0});
      }
    }
  }
  return true;
}

}  // namespace

Height height(const Frame& fr, int w) {
  if (w < 0 || w >= fr.size()) throw std::invalid_argument("world out of range");
  HeightDfs dfs(fr);
  return dfs.run(w);
}

FrameClassReport classify_frame(const Frame& fr) {
  FrameClassReport r;
  r.transitive = fr.transitive();
  r.irreflexive = fr.irreflexive();
  r.acyclic = acyclic_by_dfs(fr);
  HeightDfs dfs(fr);
  r.heights.resize(fr.size());
  r.locally_finite_height = true;
  for (int w = 0; w < fr.size(); ++w) {
    r.heights[w] = dfs.run(w);
    if (!r.heights[w]) r.locally_finite_height = false;
  }
  r.finite_irreflexive_transitive = r.irreflexive && r.transitive;
  r.transitive_locally_finite = r.transitive && r.locally_finite_height;
  return r;
}

Frame make_descending_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain needs at least one world");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < i; ++j) edges.emplace_back(i, j);
  }
  return Frame(std::move(names), edges);
}

Frame make_fan(int k) {
  if (k < 0) throw std::invalid_argument("fan needs k >= 0 branches");
  std::vector<std::string> names{"r"};
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j <= k; ++j) {
    int base = static_cast<int>(names.size());
    for (int i = 1; i <= j; ++i) {
      names.push_back("b" + std::to_string(j) + "_" + std::to_string(i));
      int me = base + i - 1;
      edges.emplace_back(0, me);
      for (int m = 0; m < i - 1; ++m) edges.emplace_back(me, base + m);
    }
  }
  return Frame(std::move(names), edges);
}

Frame frame_from_masks(int n, std::span<const WorldSet> succ) {
  if (static_cast<int>(succ.size()) != n) throw std::invalid_argument("mask count != n");
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j)
      if (succ[i].test(j)) edges.emplace_back(i, j);
  }
  return Frame(std::move(names), edges);
}

namespace {

struct IsoSearch {
  const Frame& a;
  const Frame& b;
  std::vector<int> map;   // a-world -> b-world, -1 unset
  std::vector<bool> used;

  bool extend(int i) {
    int n = a.size();
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      // Check edges between i and all previously mapped worlds, both ways.
      for (int p = 0; p <= i && ok; ++p) {
        int q = (p == i) ? j : map[p];
        if (p == i) {
          if (a.has_edge(i, i) != b.has_edge(j, j)) ok = false;
        } else {
          if (a.has_edge(i, p) != b.has_edge(j, q)) ok = false;
          if (a.has_edge(p, i) != b.has_edge(q, j)) ok = false;
        }
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (extend(i + 1)) return true;
      map[i] = -1;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Frame& a, const Frame& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, std::vector<int>(a.size(), -1), std::vector<bool>(a.size(), false)};
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

}  // namespace gl
