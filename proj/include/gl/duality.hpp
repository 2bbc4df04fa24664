#ifndef GL_DUALITY_HPP
#define GL_DUALITY_HPP

#include <span>
#include <string>
#include <vector>

#include "gl/algebra.hpp"
#include "gl/kripke.hpp"
#include "gl/omega.hpp"

namespace gl {

// --- Finite powerset algebras ----------------------------------------------
//
// Prime filters of a finite powerset algebra are exactly the principal
// ultrafilters at atoms, so a filter is carried as its atom index and
// membership is a bit test.

struct PrimeFilterFin {
  int atom = -1;
  bool contains(FinAlgebra::Elem x) const { return (x >> atom) & 1; }
};

// Filter laws for a principal ultrafilter, checked directly: proper, upward
// closed, meet closed, and prime (x v y inside forces x or y inside). Swept
// over element pairs; guarded on 2 * atoms.
bool filter_laws_hold(const FinAlgebra& a, const PrimeFilterFin& f,
                      int guard_bits = kDefaultGuardBits);

// A designated family of elements together with its meet. The diamond chain
// stabilizes on a finite carrier, so its full value set is the finite orbit
// diamond^0(1) .. diamond^m(1) and the recorded meet is the exact infimum of
// the infinite chain, not a truncation.
struct FamilyFin {
  std::vector<FinAlgebra::Elem> values;  // sorted, distinct
  FinAlgebra::Elem meet = 0;

  static FamilyFin from_values(std::vector<FinAlgebra::Elem> vals, const FinAlgebra& a);
  bool operator==(const FamilyFin& o) const { return values == o.values; }
  bool operator<(const FamilyFin& o) const { return values < o.values; }
};

struct QSetFin {
  std::vector<FamilyFin> families;  // deduplicated union of all levels
  std::vector<int> level_sizes;     // new families contributed per level
};

// Level 0 of the hierarchy: the single family {diamond^n(1) | n}.
QSetFin q0_fin(const FinAlgebra& a);

// Levels 0..depth, where level n+1 collects {box(z v x) | x in X} for every
// level-n family X and every z among the generators. Exact: each input
// family is a finite value set, so its image is too. Families deduplicate
// across levels; the guard bounds the total count.
QSetFin build_qset(const FinAlgebra& a, int depth, std::span<const FinAlgebra::Elem> generators,
                   int max_families = 4096);

// One principal ultrafilter per atom.
std::vector<PrimeFilterFin> prime_filters(const FinAlgebra& a);

// The prime filters respecting every designated meet: for each family X,
// X inside F forces meet(X) into F. With q0 on a finite carrier this keeps
// every filter (the stabilized chain value is itself a family member).
std::vector<PrimeFilterFin> q_filters(const FinAlgebra& a, const QSetFin& q);

// Frame on the Q-filters with an edge (F, G) exactly when every x with
// box(x) in F lies in G. Decided by scanning the carrier; guarded on atoms.
// Worlds are named by atom index.
Frame dual_frame(const FinAlgebra& a, const QSetFin& q, int guard_bits = kDefaultGuardBits);

// The canonical map into the powerset of the filter list: bit i of the
// result says filters[i] contains x.
FinAlgebra::Elem eta(const std::vector<PrimeFilterFin>& filters, FinAlgebra::Elem x);

struct EmbeddingReport {
  bool injective = false;
  bool preserves_bounds = false;      // images of 0 and 1
  bool preserves_meet = false;        // eta(x ^ y) = eta(x) ^ eta(y)
  bool preserves_complement = false;  // eta(~x) = ~eta(x)
  bool preserves_box = false;         // eta(box x) = box of the dual frame
  bool all() const {
    return injective && preserves_bounds && preserves_meet && preserves_complement &&
           preserves_box;
  }
};

// Checks the canonical map into the complex algebra of dual_frame(a, q),
// exhaustively over the carrier (pairs for meet; guarded on 2 * atoms).
// Injectivity reduces to a trivial kernel: a Boolean homomorphism sends the
// symmetric difference of a colliding pair to 0.
EmbeddingReport check_embedding(const FinAlgebra& a, const QSetFin& q,
                                int guard_bits = kDefaultGuardBits);

// --- The finite/cofinite algebra over w+1 -----------------------------------
//
// Its ultrafilters: principal at a natural, principal at w, and one free
// ultrafilter (the sets with cofinite natural part). Enumerations are
// windowed on the principal points; the free filter is a single symbolic
// object, so no truncation hides it.

enum class OmegaFilterKind : std::uint8_t { principal_nat, principal_omega, free_ultra };

struct OmegaFilter {
  OmegaFilterKind kind = OmegaFilterKind::principal_omega;
  int point = -1;  // principal_nat only

  bool contains(const CofinElement& x) const;
  std::string name() const;  // "0", "1", ..., "w", "free"
  bool operator==(const OmegaFilter& o) const = default;
};

// Principal filters at 0..window-1 and at w, plus the free ultrafilter.
std::vector<OmegaFilter> omega_prime_filters(int window);

// Filters satisfying the chain condition of level 0: the whole chain inside
// F must force its meet {w} into F. Every chain element is cofinite with w,
// so the free filter and the w-filter contain the chain, but only the
// w-filter contains the meet. Principal naturals drop out of the premise.
// Result: the free ultrafilter is removed, everything else stays.
std::vector<OmegaFilter> omega_q0_filters(int window);

// box^{-1}F is upward closed with a least element (box output is settled by
// the least missing natural), and filters are upward closed, so the edge
// test "box^{-1}F inside G" reduces to one membership: the least element of
// box^{-1}F must lie in G.
CofinElement box_preimage_generator(const OmegaFilter& f);
bool omega_dual_edge(const OmegaFilter& f, const OmegaFilter& g);

// Frame on omega_q0_filters(window), edges by omega_dual_edge. Comes out
// isomorphic to the order > on {0..window-1} + top point.
Frame omega_dual_frame(int window);

// Mask (aligned with the filter list) of the filters containing x.
WorldSet omega_eta(const std::vector<OmegaFilter>& filters, const CofinElement& x);

// Intersection over n = 0..n_max of omega_eta(diamond^n(1)). Over the
// q0 filters this is exactly the singleton at the w-filter, mirroring the
// chain meet {w}: a nonzero meet survives into the dual picture.
WorldSet omega_eta_chain_intersection(const std::vector<OmegaFilter>& filters, int n_max);

}  // namespace gl

#endif
