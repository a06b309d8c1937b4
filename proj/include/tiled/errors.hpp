#ifndef TILED_ERRORS_HPP
#define TILED_ERRORS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tiled {

enum class errc {
  not_square,
  nonzero_diagonal,
  ring_condition_violated,
  entry_out_of_range,
  dimension_mismatch,
  not_prime,
  too_large,
  unsupported_dimension,
  invalid_local_exponent,
  invalid_invariant_factors,
  window_violation,
  overflow,
};

// Domain error carrying a machine-readable kind plus up to three 1-based
// indices and an optional label (used by InvalidLocalExponent).
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message,
        std::array<std::int64_t, 3> args = {}, int arg_count = 0,
        std::string label = {})
      : std::runtime_error(message), code_(code), args_(args),
        arg_count_(arg_count), label_(std::move(label)) {}

  errc code() const noexcept { return code_; }
  const char* kind() const noexcept;
  const std::array<std::int64_t, 3>& args() const noexcept { return args_; }
  int arg_count() const noexcept { return arg_count_; }
  const std::string& label() const noexcept { return label_; }

private:
  errc code_;
  std::array<std::int64_t, 3> args_;
  int arg_count_;
  std::string label_;
};

} // namespace tiled

#endif
