#include "tiled/errors.hpp"

namespace tiled {

const char* error::kind() const noexcept {
  switch (code_) {
  case errc::not_square: return "NotSquare";
  case errc::nonzero_diagonal: return "NonzeroDiagonal";
  case errc::ring_condition_violated: return "RingConditionViolated";
  case errc::entry_out_of_range: return "EntryOutOfRange";
  case errc::dimension_mismatch: return "DimensionMismatch";
  case errc::not_prime: return "NotPrime";
  case errc::too_large: return "TooLarge";
  case errc::unsupported_dimension: return "UnsupportedDimension";
  case errc::invalid_local_exponent: return "InvalidLocalExponent";
  case errc::invalid_invariant_factors: return "InvalidInvariantFactors";
  case errc::window_violation: return "WindowViolation";
  case errc::overflow: return "Overflow";
  }
  return "Unknown";
}

} // namespace tiled
