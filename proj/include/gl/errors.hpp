#ifndef GL_ERRORS_HPP
#define GL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gl {

// Thrown by the formula parser; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Thrown when an exhaustive enumeration would exceed its configured bound
// (frame validity sweeps, equation checks, dual-frame element scans, ...).
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when backward proof search exhausts its node budget. The search is
// terminating, so with default limits this never fires on the shipped corpus;
// it exists so callers can distinguish "refuted" from "gave up".
class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gl

#endif
