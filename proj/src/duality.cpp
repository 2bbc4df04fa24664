#include "gl/duality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gl {

namespace {

void guard_carrier(int atoms, int guard_bits, const char* what) {
  if (atoms > guard_bits)
    throw ResourceGuardError(std::string(what) + ": carrier sweep needs " +
                             std::to_string(atoms) + " bits, guard is " +
                             std::to_string(guard_bits));
}

}  // namespace

bool filter_laws_hold(const FinAlgebra& a, const PrimeFilterFin& f, int guard_bits) {
  guard_carrier(2 * a.atoms(), guard_bits, "filter_laws_hold");
  const FinAlgebra::Elem n = FinAlgebra::Elem{1} << a.atoms();
  if (f.contains(FinAlgebra::zero())) return false;  // proper
  if (!f.contains(a.one())) return false;
  for (FinAlgebra::Elem x = 0; x < n; ++x)
    for (FinAlgebra::Elem y = 0; y < n; ++y) {
      if (f.contains(x) && a.leq(x, y) && !f.contains(y)) return false;
      if (f.contains(x) && f.contains(y) && !f.contains(a.meet(x, y))) return false;
      if (f.contains(a.join(x, y)) && !f.contains(x) && !f.contains(y)) return false;
    }
  return true;
}

FamilyFin FamilyFin::from_values(std::vector<FinAlgebra::Elem> vals, const FinAlgebra& a) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  FamilyFin fam;
  fam.meet = a.one();
  for (FinAlgebra::Elem v : vals) fam.meet = a.meet(fam.meet, v);
  fam.values = std::move(vals);
  return fam;
}

QSetFin q0_fin(const FinAlgebra& a) {
  QSetFin q;
  q.families.push_back(FamilyFin::from_values(a.diamond_chain().values, a));
  q.level_sizes.push_back(1);
  return q;
}

QSetFin build_qset(const FinAlgebra& a, int depth, std::span<const FinAlgebra::Elem> generators,
                   int max_families) {
  if (depth < 0) throw std::invalid_argument("depth must be a natural");
  QSetFin q = q0_fin(a);
  std::set<FamilyFin> seen(q.families.begin(), q.families.end());
  std::vector<FamilyFin> level = q.families;
  for (int d = 1; d <= depth; ++d) {
    std::vector<FamilyFin> next;
    for (const FamilyFin& fam : level)
      for (FinAlgebra::Elem z : generators) {
        std::vector<FinAlgebra::Elem> image;
        image.reserve(fam.values.size());
        for (FinAlgebra::Elem x : fam.values) image.push_back(a.box(a.join(z, x)));
        FamilyFin mapped = FamilyFin::from_values(std::move(image), a);
        if (seen.insert(mapped).second) {
          next.push_back(mapped);
          q.families.push_back(mapped);
          if (static_cast<int>(q.families.size()) > max_families)
            throw ResourceGuardError("build_qset: family count exceeded " +
                                     std::to_string(max_families));
        }
      }
    q.level_sizes.push_back(static_cast<int>(next.size()));
    level = std::move(next);
  }
  return q;
}

std::vector<PrimeFilterFin> prime_filters(const FinAlgebra& a) {
  std::vector<PrimeFilterFin> out;
  out.reserve(a.atoms());
  for (int i = 0; i < a.atoms(); ++i) out.push_back(PrimeFilterFin{i});
  return out;
}

std::vector<PrimeFilterFin> q_filters(const FinAlgebra& a, const QSetFin& q) {
  std::vector<PrimeFilterFin> out;
  for (const PrimeFilterFin& f : prime_filters(a)) {
    bool ok = true;
    for (const FamilyFin& fam : q.families) {
      bool inside = std::all_of(fam.values.begin(), fam.values.end(),
                                [&](FinAlgebra::Elem x) { return f.contains(x); });
      if (inside && !f.contains(fam.meet)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

Frame dual_frame(const FinAlgebra& a, const QSetFin& q, int guard_bits) {
  guard_carrier(a.atoms(), guard_bits, "dual_frame");
  std::vector<PrimeFilterFin> fs = q_filters(a, q);
  const FinAlgebra::Elem n = FinAlgebra::Elem{1} << a.atoms();
  std::vector<std::string> names;
  names.reserve(fs.size());
  for (const PrimeFilterFin& f : fs) names.push_back(std::to_string(f.atom));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      bool edge = true;
      for (FinAlgebra::Elem x = 0; x < n && edge; ++x)
        if (fs[i].contains(a.box(x)) && !fs[j].contains(x)) edge = false;
      if (edge) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Frame(std::move(names), edges);
}

FinAlgebra::Elem eta(const std::vector<PrimeFilterFin>& filters, FinAlgebra::Elem x) {
  FinAlgebra::Elem out = 0;
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i].contains(x)) out |= FinAlgebra::Elem{1} << i;
  return out;
}

EmbeddingReport check_embedding(const FinAlgebra& a, const QSetFin& q, int guard_bits) {
  guard_carrier(2 * a.atoms(), guard_bits, "check_embedding");
  std::vector<PrimeFilterFin> fs = q_filters(a, q);
  FinAlgebra dual(dual_frame(a, q, guard_bits));
  const FinAlgebra::Elem n = FinAlgebra::Elem{1} << a.atoms();
  EmbeddingReport r;
  r.preserves_bounds = eta(fs, FinAlgebra::zero()) == FinAlgebra::zero() &&
                       eta(fs, a.one()) == dual.one();
  r.injective = true;
  r.preserves_complement = true;
  r.preserves_box = true;
  for (FinAlgebra::Elem x = 0; x < n; ++x) {
    if (x != 0 && eta(fs, x) == 0) r.injective = false;
    if (eta(fs, a.complement(x)) != dual.complement(eta(fs, x))) r.preserves_complement = false;
    if (eta(fs, a.box(x)) != dual.box(eta(fs, x))) r.preserves_box = false;
  }
  r.preserves_meet = true;
  for (FinAlgebra::Elem x = 0; x < n && r.preserves_meet; ++x)
    for (FinAlgebra::Elem y = 0; y < n; ++y)
      if (eta(fs, a.meet(x, y)) != dual.meet(eta(fs, x), eta(fs, y))) {
        r.preserves_meet = false;
        break;
      }
  return r;
}

// --- w+1 side ---------------------------------------------------------------

bool OmegaFilter::contains(const CofinElement& x) const {
  switch (kind) {
    case OmegaFilterKind::principal_nat:
      return x.contains(point);
    case OmegaFilterKind::principal_omega:
      return x.contains_omega();
    case OmegaFilterKind::free_ultra:
      return x.naturals_cofinite();
  }
  throw std::logic_error("unreachable");
}

std::string OmegaFilter::name() const {
  switch (kind) {
    case OmegaFilterKind::principal_nat:
      return std::to_string(point);
    case OmegaFilterKind::principal_omega:
      return "w";
    case OmegaFilterKind::free_ultra:
      return "free";
  }
  throw std::logic_error("unreachable");
}

std::vector<OmegaFilter> omega_prime_filters(int window) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  std::vector<OmegaFilter> out;
  for (int i = 0; i < window; ++i) out.push_back({OmegaFilterKind::principal_nat, i});
  out.push_back({OmegaFilterKind::principal_omega, -1});
  out.push_back({OmegaFilterKind::free_ultra, -1});
  return out;
}

std::vector<OmegaFilter> omega_q0_filters(int window) {
  std::vector<OmegaFilter> out;
  for (const OmegaFilter& f : omega_prime_filters(window)) {
    // Chain condition, decided from the closed forms: diamond^n(1) misses
    // exactly {0..n-1}, so a principal natural filter at p drops out of the
    // premise at n = p+1, while the w-filter and the free filter contain the
    // whole chain. The meet {w} lies only in the w-filter.
    bool chain_inside = f.kind != OmegaFilterKind::principal_nat;
    bool meet_inside = f.contains(OmegaAlgebra::chain_meet());
    if (!chain_inside || meet_inside) out.push_back(f);
  }
  return out;
}

CofinElement box_preimage_generator(const OmegaFilter& f) {
  switch (f.kind) {
    case OmegaFilterKind::principal_nat: {
      // box(x) contains p exactly when {0..p-1} is inside x.
      std::vector<int> below(f.point);
      for (int i = 0; i < f.point; ++i) below[i] = i;
      return CofinElement::finite_set(std::move(below), false);
    }
    case OmegaFilterKind::principal_omega:
      // box(x) contains w exactly when x holds all naturals.
      return CofinElement::cofinite_set({}, false);
    case OmegaFilterKind::free_ultra:
      // box(x) is a finite set unless x holds all naturals (then box = 1),
      // and the free filter holds no finite set, so the preimage is the same
      // up-set as for the w-filter.
      return CofinElement::cofinite_set({}, false);
  }
  throw std::logic_error("unreachable");
}

bool omega_dual_edge(const OmegaFilter& f, const OmegaFilter& g) {
  return g.contains(box_preimage_generator(f));
}

Frame omega_dual_frame(int window) {
  std::vector<OmegaFilter> fs = omega_q0_filters(window);
  std::vector<std::string> names;
  names.reserve(fs.size());
  for (const OmegaFilter& f : fs) names.push_back(f.name());
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (omega_dual_edge(fs[i], fs[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Frame(std::move(names), edges);
}

WorldSet omega_eta(const std::vector<OmegaFilter>& filters, const CofinElement& x) {
  WorldSet out;
  for (std::size_t i = 0; i < filters.size(); ++i)
    if (filters[i].contains(x)) out.set(i);
  return out;
}

WorldSet omega_eta_chain_intersection(const std::vector<OmegaFilter>& filters, int n_max) {
  WorldSet out;
  out.set();
  for (std::size_t i = filters.size(); i < kMaxWorlds; ++i) out.reset(i);
  for (int n = 0; n <= n_max; ++n) out &= omega_eta(filters, OmegaAlgebra::diamond_n_one(n));
  return out;
}

}  // namespace gl
