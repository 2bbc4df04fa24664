#include "gl/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl {

std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::yes: return "yes";
    case ClassStatus::no: return "no";
    case ClassStatus::not_applicable: return "not applicable";
    case ClassStatus::asserted: return "asserted (analytic, instance-checked)";
  }
  return "?";
}

namespace {
constexpr int kMaxAtoms = 24;  // carriers are enumerated; keep 2^atoms sane
}

FinAlgebra::FinAlgebra(const Frame& frame) : atoms_(frame.size()) {
  if (atoms_ > kMaxAtoms)
    throw std::invalid_argument("algebra carrier would have 2^" + std::to_string(atoms_) +
                                " elements; cap is 2^" + std::to_string(kMaxAtoms));
  full_ = (1ULL << atoms_) - 1;
  succ_.resize(atoms_);
  for (int w = 0; w < atoms_; ++w) {
    Elem m = 0;
    for (int v = 0; v < atoms_; ++v)
      if (frame.has_edge(w, v)) m |= 1ULL << v;
    succ_[w] = m;
  }
}

FinAlgebra::FinAlgebra(int atoms, std::span<const Elem> successor_masks) : atoms_(atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) throw std::invalid_argument("atom count out of range");
  if (static_cast<int>(successor_masks.size()) != atoms)
    throw std::invalid_argument("successor mask count != atoms");
  full_ = (1ULL << atoms_) - 1;
  succ_.assign(successor_masks.begin(), successor_masks.end());
  for (Elem m : succ_)
    if (m & ~full_) throw std::invalid_argument("successor mask out of carrier");
}

FinAlgebra::Elem FinAlgebra::check(Elem a) const {
  if (a & ~full_) throw std::invalid_argument("element is not in this algebra's carrier");
  return a;
}

FinAlgebra::Elem FinAlgebra::box(Elem x) const {
  check(x);
  Elem out = 0;
  for (int w = 0; w < atoms_; ++w)
    if ((succ_[w] & ~x) == 0) out |= 1ULL << w;
  return out;
}

FinAlgebra::Elem FinAlgebra::eval(Formula f, const std::map<std::string, Elem>& valuation) const {
  switch (f.kind()) {
    case Kind::Top:
      return full_;
    case Kind::Var: {
      auto it = valuation.find(f.var_name());
      if (it == valuation.end())
        throw std::invalid_argument("unbound variable '" + f.var_name() + "'");
      return check(it->second);
    }
    case Kind::And:
      return eval(f.left(), valuation) & eval(f.right(), valuation);
    case Kind::Not:
      return complement(eval(f.child(), valuation));
    case Kind::Box:
      return box(eval(f.child(), valuation));
  }
  throw std::logic_error("unreachable");
}

bool FinAlgebra::equation_holds(Formula lhs, Formula rhs, int guard_bits) const {
  std::vector<std::string> vars = variables(lhs);
  for (const std::string& v : variables(rhs)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  long bits = static_cast<long>(atoms_) * static_cast<long>(vars.size());
  if (bits > guard_bits)
    throw ResourceGuardError("equation sweep needs 2^" + std::to_string(bits) +
                             " valuations, above the guard of 2^" + std::to_string(guard_bits));
  std::map<std::string, Elem> val;
  for (const std::string& v : vars) val[v] = 0;
  std::uint64_t count = 1ULL << bits;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (const std::string& v : vars) {
      val[v] = rest & full_;
      rest >>= atoms_;
    }
    if (eval(lhs, val) != eval(rhs, val)) return false;
  }
  return true;
}

FinAlgebra::Chain FinAlgebra::diamond_chain() const {
  Chain c;
  Elem cur = full_;
  c.values.push_back(cur);
  for (;;) {
    Elem next = diamond(cur);
    if (next == cur) break;
    c.values.push_back(next);
    cur = next;
  }
  c.stabilization_index = static_cast<int>(c.values.size()) - 1;
  c.stabilized = c.values.back();
  return c;
}

bool FinAlgebra::chain_distribution_holds(std::span<const Elem> xs) const {
  Chain c = diamond_chain();
  if (c.stabilized != 0)
    throw std::invalid_argument("chain distribution needs a chain stabilizing at 0");
  auto nested = [&](Elem innermost) {
    Elem t = innermost;
    for (Elem x : xs) t = box(join(x, t));
    return t;
  };
  // The nesting is monotone in its innermost slot, so it descends along the
  // chain and its value at the stabilization index is the infinite meet.
  Elem prev = 0;
  bool first = true;
  for (Elem d : c.values) {
    Elem t = nested(d);
    if (!first && !leq(t, prev)) return false;
    prev = t;
    first = false;
  }
  return prev == nested(0);
}

AlgebraClassReport classify_algebra(const FinAlgebra& a) {
  AlgebraClassReport r;
  Formula x = Formula::var("x");
  r.satisfies_4 =
      a.equation_holds(Formula::conj(Formula::box(x), Formula::box(Formula::box(x))),
                       Formula::box(x));
  FinAlgebra::Chain c = a.diamond_chain();
  r.stabilization_index = c.stabilization_index;
  r.chain_meet = c.stabilized;

  if (!r.satisfies_4) {
    // All three classes presuppose the 4 equation.
    r.diamond_chain_vanishes = ClassStatus::not_applicable;
    r.noncompact_rule_true = ClassStatus::not_applicable;
    r.loeb_equation_valid = ClassStatus::not_applicable;
    return r;
  }
  Formula loeb = Formula::implies(Formula::box(Formula::implies(Formula::box(x), x)),
                                  Formula::box(x));
  r.loeb_equation_valid = a.equation_holds(loeb, Formula::top()) ? ClassStatus::yes
                                                                 : ClassStatus::no;
  bool vanishes = c.stabilized == 0;
  r.diamond_chain_vanishes = vanishes ? ClassStatus::yes : ClassStatus::no;
  // On a finite 4-algebra the rule's premises phi <= diamond^n(1) for all n
  // collapse to phi <= chain meet, so the rule is truth-preserving exactly
  // when that meet is 0.
  r.noncompact_rule_true = vanishes ? ClassStatus::yes : ClassStatus::no;

  auto as_bool = [](ClassStatus s) { return s == ClassStatus::yes; };
  if (as_bool(r.diamond_chain_vanishes) && !as_bool(r.noncompact_rule_true))
    throw std::logic_error("class inclusion violated (vanishing chain without rule)");
  if (as_bool(r.noncompact_rule_true) && r.loeb_equation_valid != ClassStatus::yes)
    throw std::logic_error("class inclusion violated (rule without Loeb)");
  return r;
}

bool modal_laws_hold(const FinAlgebra& a, int guard_bits) {
  if (a.box(a.one()) != a.one()) return false;
  long bits = 2L * a.atoms();
  if (bits <= guard_bits) {
    std::uint64_t count = 1ULL << a.atoms();
    for (std::uint64_t x = 0; x < count; ++x)
      for (std::uint64_t y = 0; y < count; ++y)
        if (a.box(x & y) != (a.box(x) & a.box(y))) return false;
    return true;
  }
  // Sampled fallback for larger carriers.
  std::uint64_t seed = 0x106689d45497fdb5ULL;
  for (int i = 0; i < 4096; ++i) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t x = seed & a.one();
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    std::uint64_t y = seed & a.one();
    if (a.box(x & y) != (a.box(x) & a.box(y))) return false;
  }
  return true;
}

}  // namespace gl
