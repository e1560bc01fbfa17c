#pragma once

#include <cstddef>
#include <cstdint>

namespace cmon {

/// Limits guarding exhaustive sweeps. Exceeding one raises SizeCapError;
/// nothing is ever sampled.
struct SizeCaps {
  std::size_t max_carrier = 64;
  /// Largest ground set for generated functional / power models.
  std::size_t max_x = 3;
  /// Above this carrier size the full congruence lattice is not built and
  /// maximal congruences are found by direct search instead.
  std::size_t lattice_limit = 12;
  /// Largest number of assignments an identity search may enumerate.
  std::uint64_t max_assignments = 50'000'000;
};

inline const SizeCaps& default_caps() {
  static const SizeCaps caps{};
  return caps;
}

void require_carrier(std::size_t size, const SizeCaps& caps, const char* what);

}  // namespace cmon
