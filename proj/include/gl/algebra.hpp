#ifndef GL_ALGEBRA_HPP
#define GL_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gl/formula.hpp"
#include "gl/kripke.hpp"

namespace gl {

// Status of a class-membership report. `asserted` marks memberships that are
// established analytically rather than by an exhaustive sweep (the carrier is
// infinite); such entries are always backed by bounded instance evidence.
enum class ClassStatus : std::uint8_t { yes, no, not_applicable, asserted };

std::string to_string(ClassStatus s);

// Powerset algebra of a finite frame: elements are world subsets encoded as
// bit masks over atoms 0..n-1, box is the relational preimage dual
// (box(x) = worlds whose successors all lie in x).
class FinAlgebra {
 public:
  using Elem = std::uint64_t;

  explicit FinAlgebra(const Frame& frame);
  FinAlgebra(int atoms, std::span<const Elem> successor_masks);

  int atoms() const { return atoms_; }
  Elem one() const { return full_; }
  static constexpr Elem zero() { return 0; }

  Elem meet(Elem a, Elem b) const { return check(a) & check(b); }
  Elem join(Elem a, Elem b) const { return check(a) | check(b); }
  Elem complement(Elem a) const { return ~check(a) & full_; }
  bool leq(Elem a, Elem b) const { return (check(a) & ~check(b)) == 0; }

  Elem box(Elem x) const;
  Elem diamond(Elem x) const { return complement(box(complement(x))); }

  // Term evaluation under a valuation of variables to elements. Unbound
  // variables are an error.
  Elem eval(Formula f, const std::map<std::string, Elem>& valuation) const;

  // lhs = rhs under every valuation of the occurring variables into the
  // carrier. Exhaustive over (2^atoms)^|vars|; guarded on the exponent.
  bool equation_holds(Formula lhs, Formula rhs, int guard_bits = kDefaultGuardBits) const;

  struct Chain {
    std::vector<Elem> values;  // diamond^0(1) .. diamond^m(1)
    int stabilization_index;   // least m with diamond^m(1) = diamond^(m+1)(1)
    Elem stabilized;           // = values.back(); the meet of the whole chain
  };
  // The descending chain diamond^n(1). On a finite carrier it stabilizes, and
  // the stabilized value is the infimum of the infinite chain.
  Chain diamond_chain() const;

  // For xs = (x_1 .. x_k) and m the chain stabilization index, compares
  //   box(x_k v box(x_(k-1) v ... box(x_1 v diamond^m(1)) ...))
  // against the same nesting with 0 in the innermost slot, also requiring the
  // nesting to be pointwise decreasing as the chain argument descends.
  // Precondition: the chain stabilizes at 0.
  bool chain_distribution_holds(std::span<const Elem> xs) const;

 private:
  Elem check(Elem a) const;
  int atoms_;
  Elem full_;
  std::vector<Elem> succ_;
};

struct AlgebraClassReport {
  bool satisfies_4 = false;      // box x <= box box x as an equation
  int stabilization_index = 0;   // diamond chain
  FinAlgebra::Elem chain_meet = 0;
  ClassStatus diamond_chain_vanishes = ClassStatus::no;  // chain meet = 0
  ClassStatus noncompact_rule_true = ClassStatus::no;
  ClassStatus loeb_equation_valid = ClassStatus::no;
};

// Classifies a finite algebra. On finite 4-algebras the non-compact rule
// holds exactly when the diamond chain stabilizes at 0, so both of the first
// two classes come out of the chain; without the 4 equation they are reported
// not_applicable. The report always satisfies the inclusion
// vanishes => rule true => Loeb valid (on yes/no entries).
AlgebraClassReport classify_algebra(const FinAlgebra& a);

// The two defining modal-algebra laws, checked by sweep (exhaustive when
// 2 * atoms fits the guard, sampled otherwise). Used by tests; the complex
// algebra construction satisfies them structurally.
bool modal_laws_hold(const FinAlgebra& a, int guard_bits = kDefaultGuardBits);

}  // namespace gl

#endif
