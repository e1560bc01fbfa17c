#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cmon {

using Bits = boost::dynamic_bitset<>;

/// Truth values of 3, numbered as the elements of mk_three().
enum class Tri : std::uint8_t { T = 0, F = 1, U = 2 };

char tri_letter(Tri v);

/// An element of 3^X as (preimage of T, preimage of F) over the ordered
/// ground set x0..x{n-1}. Invariant: a and b are disjoint and equally sized.
struct PairOfSets {
  Bits a;
  Bits b;

  PairOfSets() = default;
  PairOfSets(Bits first, Bits second);
  explicit PairOfSets(std::size_t ground_size) : a(ground_size), b(ground_size) {}

  std::size_t ground_size() const { return a.size(); }
  Tri at(std::size_t x) const { return a.test(x) ? Tri::T : (b.test(x) ? Tri::F : Tri::U); }

  friend bool operator==(const PairOfSets&, const PairOfSets&) = default;
  friend bool operator<(const PairOfSets& l, const PairOfSets& r) {
    return l.a < r.a || (l.a == r.a && l.b < r.b);
  }
};

PairOfSets pair_const(std::size_t ground_size, Tri value);

/// (A, B) -> (B, A)
PairOfSets pair_neg(const PairOfSets& p);
/// (A1 n B1, A2 u (A1 n B2))
PairOfSets pair_and(const PairOfSets& p, const PairOfSets& q);
/// (A1 u (A2 n B1), A2 n B2)
PairOfSets pair_or(const PairOfSets& p, const PairOfSets& q);
/// (A, X \ A)
PairOfSets pair_down(const PairOfSets& p);

PairOfSets pair_from_function(std::span<const Tri> values);
std::vector<Tri> function_from_pair(const PairOfSets& p);

/// Letters of the map, x0 first ("e" for the empty ground set).
std::string pair_name(const PairOfSets& p);

/// Position of p among all pairs over its ground set, in power_ada order.
std::uint32_t pair_index(const PairOfSets& p);
PairOfSets pair_at_index(std::size_t ground_size, std::uint32_t index);

}  // namespace cmon
