#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmon/pairs.hpp"

namespace cmon {

/// A self-map of the pointed set {0, ..., k} whose points 0..k-1 form the
/// ground set X and whose base point is k. Invariant: the base is fixed.
struct PointedSelfMap {
  std::vector<std::uint32_t> values;

  std::size_t ground_size() const { return values.size() - 1; }
  std::uint32_t base() const { return static_cast<std::uint32_t>(values.size() - 1); }
  std::uint32_t operator()(std::uint32_t x) const { return values[x]; }

  friend bool operator==(const PointedSelfMap&, const PointedSelfMap&) = default;
  friend auto operator<=>(const PointedSelfMap&, const PointedSelfMap&) = default;
};

PointedSelfMap identity_map(std::size_t ground_size);
/// The constant map onto the base point.
PointedSelfMap zero_map(std::size_t ground_size);

/// Left-to-right composition: (f . g)(x) = g(f(x)).
PointedSelfMap compose_lr(const PointedSelfMap& f, const PointedSelfMap& g);

/// alpha[f, g](x) is f(x) where alpha is T, g(x) where alpha is F, base elsewhere.
PointedSelfMap functional_act(const PairOfSets& alpha, const PointedSelfMap& f,
                              const PointedSelfMap& g);

/// (f o alpha)(x) is alpha(f(x)) when f(x) lies in X, U otherwise.
PairOfSets functional_comp(const PointedSelfMap& f, const PairOfSets& alpha);

/// "f" followed by the value of each point of X, base written as 'b'.
std::string map_name(const PointedSelfMap& f);

/// Mixed-radix position among all base-fixing self-maps (x0 most significant,
/// base value as the largest digit).
std::uint32_t map_index(const PointedSelfMap& f);
PointedSelfMap map_at_index(std::size_t ground_size, std::uint32_t index);

}  // namespace cmon
