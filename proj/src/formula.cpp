#include "gl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gl {
namespace detail {

struct Node {
  Kind kind;
  std::string name;  // Var only
  const Node* a = nullptr;
  const Node* b = nullptr;
  int size = 1;
  std::uint64_t id = 0;
};

namespace {

struct NodeKey {
  Kind kind;
  std::string_view name;
  const Node* a;
  const Node* b;
  bool operator==(const NodeKey& o) const {
    return kind == o.kind && name == o.name && a == o.a && b == o.b;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<std::string_view>()(k.name);
    h ^= static_cast<std::size_t>(k.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>()(k.a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<const void*>()(k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Process-wide intern table. A mutex keeps construction safe to call from
// parallel evaluation loops; lookups after construction are pointer work only.
struct InternTable {
  std::mutex mu;
  std::deque<Node> storage;
  std::unordered_map<NodeKey, const Node*, NodeKeyHash> map;
  std::uint64_t next_id = 0;
};

InternTable& table() {
  static InternTable t;
  return t;
}

const Node* intern(Kind kind, std::string_view name, const Node* a, const Node* b) {
  InternTable& t = table();
  std::scoped_lock lock(t.mu);
  NodeKey key{kind, name, a, b};
  auto it = t.map.find(key);
  if (it != t.map.end()) return it->second;
  Node& n = t.storage.emplace_back();
  n.kind = kind;
  n.name = std::string(name);
  n.a = a;
  n.b = b;
  n.size = 1 + (a ? a->size : 0) + (b ? b->size : 0);
  n.id = t.next_id++;
  // Re-key on the stored string so the view stays valid.
  t.map.emplace(NodeKey{kind, n.name, a, b}, &n);
  return &n;
}

}  // namespace
}  // namespace detail

using detail::Node;

Kind Formula::kind() const { return n_->kind; }

const std::string& Formula::var_name() const {
  if (n_->kind != Kind::Var) throw std::logic_error("var_name on non-variable");
  return n_->name;
}

Formula Formula::left() const {
  if (n_->kind != Kind::And) throw std::logic_error("left on non-conjunction");
  return Formula(n_->a);
}

Formula Formula::right() const {
  if (n_->kind != Kind::And) throw std::logic_error("right on non-conjunction");
  return Formula(n_->b);
}

Formula Formula::child() const {
  if (n_->kind != Kind::Not && n_->kind != Kind::Box)
    throw std::logic_error("child on node without a single child");
  return Formula(n_->a);
}

int Formula::size() const { return n_->size; }
std::uint64_t Formula::id() const { return n_->id; }

Formula Formula::top() { return Formula(detail::intern(Kind::Top, {}, nullptr, nullptr)); }

Formula Formula::var(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z')
    throw std::invalid_argument("variable names match [a-z][a-z0-9]*");
  for (char c : name.substr(1))
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')))
      throw std::invalid_argument("variable names match [a-z][a-z0-9]*");
  return Formula(detail::intern(Kind::Var, name, nullptr, nullptr));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(detail::intern(Kind::And, {}, a.n_, b.n_));
}

Formula Formula::neg(Formula a) { return Formula(detail::intern(Kind::Not, {}, a.n_, nullptr)); }

Formula Formula::box(Formula a) { return Formula(detail::intern(Kind::Box, {}, a.n_, nullptr)); }

Formula Formula::bottom() { return neg(top()); }
Formula Formula::disj(Formula a, Formula b) { return neg(conj(neg(a), neg(b))); }
Formula Formula::implies(Formula a, Formula b) { return neg(conj(a, neg(b))); }
Formula Formula::diamond(Formula a) { return neg(box(neg(a))); }

Formula Formula::iterate(ModalOp op, int n, Formula a) {
  if (n < 0) throw std::invalid_argument("iterate: negative count");
  Formula f = a;
  for (int i = 0; i < n; ++i) f = (op == ModalOp::Box) ? box(f) : diamond(f);
  return f;
}

std::vector<Formula> subformulas(Formula f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    out.push_back(cur);
    switch (cur.kind()) {
      case Kind::And:
        stack.push_back(cur.left());
        stack.push_back(cur.right());
        break;
      case Kind::Not:
      case Kind::Box:
        stack.push_back(cur.child());
        break;
      default:
        break;
    }
  }
  std::sort(out.begin(), out.end(), [](Formula a, Formula b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.id() < b.id();
  });
  return out;
}

std::vector<std::string> variables(Formula f) {
  std::vector<std::string> out;
  for (Formula s : subformulas(f))
    if (s.kind() == Kind::Var) out.push_back(s.var_name());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Formula substitute(Formula f, const std::map<std::string, Formula>& subst) {
  switch (f.kind()) {
    case Kind::Top:
      return f;
    case Kind::Var: {
      auto it = subst.find(f.var_name());
      return it == subst.end() ? f : it->second;
    }
    case Kind::And:
      return Formula::conj(substitute(f.left(), subst), substitute(f.right(), subst));
    case Kind::Not:
      return Formula::neg(substitute(f.child(), subst));
    case Kind::Box:
      return Formula::box(substitute(f.child(), subst));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Top, Bottom, Ident, Tilde, Box, Dia, Caret, Num, Amp, Pipe, Arrow, LPar, RPar, End };

struct Token {
  Tok tok;
  std::string text;  // Ident
  long num = 0;      // Num
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Tok::End, {}, 0, start};
    char c = s_[i_];
    switch (c) {
      case 'T': ++i_; return {Tok::Top, {}, 0, start};
      case 'F': ++i_; return {Tok::Bottom, {}, 0, start};
      case '~': ++i_; return {Tok::Tilde, {}, 0, start};
      case '&': ++i_; return {Tok::Amp, {}, 0, start};
      case '|': ++i_; return {Tok::Pipe, {}, 0, start};
      case '(': ++i_; return {Tok::LPar, {}, 0, start};
      case ')': ++i_; return {Tok::RPar, {}, 0, start};
      case '^': ++i_; return {Tok::Caret, {}, 0, start};
      case '[':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == ']') {
          i_ += 2;
          return {Tok::Box, {}, 0, start};
        }
        throw ParseError("expected \"[]\"", start);
      case '<':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          i_ += 2;
          return {Tok::Dia, {}, 0, start};
        }
        throw ParseError("expected \"<>\"", start);
      case '-':
        if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
          i_ += 2;
          return {Tok::Arrow, {}, 0, start};
        }
        throw ParseError("expected \"->\"", start);
      default:
        break;
    }
    if (c >= '0' && c <= '9') {
      long v = 0;
      while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') {
        v = v * 10 + (s_[i_] - '0');
        if (v > 1000000) throw ParseError("iteration count too large", start);
        ++i_;
      }
      return {Tok::Num, {}, v, start};
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && ((s_[j] >= 'a' && s_[j] <= 'z') || (s_[j] >= '0' && s_[j] <= '9')))
        ++j;
      Token t{Tok::Ident, std::string(s_.substr(i_, j - i_)), 0, start};
      i_ = j;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { advance(); }

  Formula run() {
    Formula f = imp();
    if (cur_.tok != Tok::End) throw ParseError("unexpected trailing input", cur_.pos);
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Formula imp() {  // right associative, loosest
    Formula a = disj();
    if (cur_.tok == Tok::Arrow) {
      advance();
      return Formula::implies(a, imp());
    }
    return a;
  }

  Formula disj() {  // left associative
    Formula a = conj();
    while (cur_.tok == Tok::Pipe) {
      advance();
      a = Formula::disj(a, conj());
    }
    return a;
  }

  Formula conj() {  // left associative
    Formula a = unary();
    while (cur_.tok == Tok::Amp) {
      advance();
      a = Formula::conj(a, unary());
    }
    return a;
  }

  Formula unary() {
    switch (cur_.tok) {
      case Tok::Tilde:
        advance();
        return Formula::neg(unary());
      case Tok::Box:
      case Tok::Dia: {
        ModalOp op = cur_.tok == Tok::Box ? ModalOp::Box : ModalOp::Diamond;
        advance();
        long n = 1;
        if (cur_.tok == Tok::Caret) {
          std::size_t caret_pos = cur_.pos;
          advance();
          if (cur_.tok != Tok::Num) throw ParseError("expected a count after '^'", caret_pos);
          n = cur_.num;
          advance();
        }
        return Formula::iterate(op, static_cast<int>(n), unary());
      }
      default:
        return atom();
    }
  }

  Formula atom() {
    switch (cur_.tok) {
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bottom:
        advance();
        return Formula::bottom();
      case Tok::Ident: {
        Formula f = Formula::var(cur_.text);
        advance();
        return f;
      }
      case Tok::LPar: {
        std::size_t open = cur_.pos;
        advance();
        Formula f = imp();
        if (cur_.tok != Tok::RPar) throw ParseError("unclosed '('", open);
        advance();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", cur_.pos);
      default:
        throw ParseError("expected a formula", cur_.pos);
    }
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels for minimal parenthesization: -> 1, | 2, & 3, unary 4.
constexpr int kImp = 1, kOr = 2, kAnd = 3, kUnary = 4;

void print(std::ostream& os, Formula f, int ctx) {
  switch (f.kind()) {
    case Kind::Top:
      os << 'T';
      return;
    case Kind::Var:
      os << f.var_name();
      return;
    case Kind::Box:
      os << "[]";
      print(os, f.child(), kUnary);
      return;
    case Kind::And: {
      bool paren = kAnd < ctx;
      if (paren) os << '(';
      print(os, f.left(), kAnd);
      os << " & ";
      print(os, f.right(), kAnd + 1);
      if (paren) os << ')';
      return;
    }
    case Kind::Not: {
      Formula c = f.child();
      if (c.kind() == Kind::Top) {  // falsum
        os << 'F';
        return;
      }
      if (c.kind() == Kind::Box && c.child().kind() == Kind::Not) {  // diamond
        os << "<>";
        print(os, c.child().child(), kUnary);
        return;
      }
      if (c.kind() == Kind::And) {
        Formula l = c.left(), r = c.right();
        if (l.kind() == Kind::Not && r.kind() == Kind::Not) {  // disjunction
          bool paren = kOr < ctx;
          if (paren) os << '(';
          print(os, l.child(), kOr);
          os << " | ";
          print(os, r.child(), kOr + 1);
          if (paren) os << ')';
          return;
        }
        if (r.kind() == Kind::Not) {  // implication
          bool paren = kImp < ctx;
          if (paren) os << '(';
          print(os, l, kImp + 1);
          os << " -> ";
          print(os, r.child(), kImp);
          if (paren) os << ')';
          return;
        }
      }
      os << '~';
      print(os, c, kUnary);
      return;
    }
  }
}

}  // namespace

std::string to_string(Formula f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Formula f) {
  print(os, f, 0);
  return os;
}

}  // namespace gl

std::size_t std::hash<gl::Formula>::operator()(const gl::Formula& f) const {
  return std::hash<const void*>()(f.n_);
}
