#ifndef GL_FORMULA_HPP
#define GL_FORMULA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gl/errors.hpp"

namespace gl {

// Primitive connectives. Everything else (falsum, disjunction, implication,
// diamond) is derived sugar that expands at construction time.
enum class Kind : std::uint8_t { Top, Var, And, Not, Box };

enum class ModalOp : std::uint8_t { Box, Diamond };

namespace detail {
struct Node;
}

// Immutable formula handle. Nodes are interned, so structural equality is
// pointer equality and formulas are cheap to copy, hash and stick in sets.
// Interned nodes live for the duration of the process.
class Formula {
 public:
  Formula() = delete;

  Kind kind() const;
  const std::string& var_name() const;  // Kind::Var only
  Formula left() const;                 // Kind::And
  Formula right() const;                // Kind::And
  Formula child() const;                // Kind::Not / Kind::Box

  // Number of nodes of the primitive syntax tree (not the interned DAG).
  int size() const;
  // Sequential interning id; gives a deterministic total order within a run.
  std::uint64_t id() const;

  bool operator==(const Formula& o) const { return n_ == o.n_; }
  bool operator!=(const Formula& o) const { return n_ != o.n_; }
  bool operator<(const Formula& o) const { return id() < o.id(); }

  // Primitive constructors.
  static Formula top();
  static Formula var(std::string_view name);
  static Formula conj(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula box(Formula a);

  // Derived forms, expanded to primitives immediately.
  static Formula bottom();                       // ~T
  static Formula disj(Formula a, Formula b);     // ~(~a & ~b)
  static Formula implies(Formula a, Formula b);  // ~(a & ~b)
  static Formula diamond(Formula a);             // ~[]~a

  // n-fold application of box or diamond; n = 0 returns a unchanged.
  static Formula iterate(ModalOp op, int n, Formula a);

 private:
  explicit Formula(const detail::Node* n) : n_(n) {}
  const detail::Node* n_;
  friend struct std::hash<Formula>;
};

// All distinct subformulas of f (f included), ordered by size then id.
std::vector<Formula> subformulas(Formula f);

// Sorted distinct variable names occurring in f.
std::vector<std::string> variables(Formula f);

// Uniform substitution of formulas for variables.
Formula substitute(Formula f, const std::map<std::string, Formula>& subst);

// Concrete grammar, loosest to tightest: `->` (right assoc), `|`, `&` (both
// left assoc), then the unary prefixes `~`, `[]`, `<>` which nest to the
// right. Atoms are `T`, `F` and identifiers [a-z][a-z0-9]*. `[]^n` / `<>^n`
// abbreviate n-fold nesting. Throws ParseError with a byte position.
Formula parse(std::string_view text);

// Canonical text form. Recognizes the derived patterns (F, |, ->, <>) and
// prints them compactly; parse(to_string(f)) == f.
std::string to_string(Formula f);

std::ostream& operator<<(std::ostream& os, Formula f);

}  // namespace gl

template <>
struct std::hash<gl::Formula> {
  std::size_t operator()(const gl::Formula& f) const;
};

#endif
