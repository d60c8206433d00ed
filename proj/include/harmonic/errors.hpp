#pragma once

#include <stdexcept>
#include <string>

namespace harmonic {

/// Machine-checkable failure categories for all validated preconditions.
enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  index_out_of_range,
  invalid_index_set,
  not_square,
  domain_mismatch,
  size_mismatch,
  length_mismatch,
  missing_edge,
  negative_weight,
  not_irreducible,
  size_guard,
  parse,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace harmonic
