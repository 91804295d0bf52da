#pragma once

#include <stdexcept>
#include <string>

namespace gpst {

enum class errc {
  not_associative,
  no_identity,
  no_inverse,
  not_closed,
  missing_identity,
  not_bijection,
  not_homomorphism,
  dimension_mismatch,
  not_bi_invariant,
  not_gelfand,
  degenerate_diagonalization,
  singular_system,
  zero_window,
  window_not_unit,
  not_a_unit,
  bad_exponent,
  unknown_pair,
  parse_error,
  schema_error,
};

const char* errc_name(errc c);

/// Library error carrying a machine-checkable code; the message names the
/// witnessing element/triple/line where one exists.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gpst
