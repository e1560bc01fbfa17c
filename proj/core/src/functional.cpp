#include "cmon/functional.hpp"

#include "cmon/error.hpp"

namespace cmon {

PointedSelfMap identity_map(std::size_t ground_size) {
  PointedSelfMap f;
  f.values.resize(ground_size + 1);
  for (std::size_t x = 0; x <= ground_size; ++x) f.values[x] = static_cast<std::uint32_t>(x);
  return f;
}

PointedSelfMap zero_map(std::size_t ground_size) {
  PointedSelfMap f;
  f.values.assign(ground_size + 1, static_cast<std::uint32_t>(ground_size));
  return f;
}

PointedSelfMap compose_lr(const PointedSelfMap& f, const PointedSelfMap& g) {
  if (f.values.size() != g.values.size()) throw GroundMismatch("composing maps of different domains");
  PointedSelfMap h;
  h.values.resize(f.values.size());
  for (std::size_t x = 0; x < f.values.size(); ++x) h.values[x] = g(f(static_cast<std::uint32_t>(x)));
  return h;
}

PointedSelfMap functional_act(const PairOfSets& alpha, const PointedSelfMap& f,
                              const PointedSelfMap& g) {
  if (alpha.ground_size() != f.ground_size() || f.values.size() != g.values.size()) {
    throw GroundMismatch("action over mismatched ground sets");
  }
  PointedSelfMap h = zero_map(f.ground_size());
  for (std::uint32_t x = 0; x < f.ground_size(); ++x) {
    if (alpha.a.test(x)) {
      h.values[x] = f(x);
    } else if (alpha.b.test(x)) {
      h.values[x] = g(x);
    }
  }
  return h;
}

PairOfSets functional_comp(const PointedSelfMap& f, const PairOfSets& alpha) {
  if (alpha.ground_size() != f.ground_size()) {
    throw GroundMismatch("composition over mismatched ground sets");
  }
  PairOfSets r(f.ground_size());
  for (std::uint32_t x = 0; x < f.ground_size(); ++x) {
    const std::uint32_t y = f(x);
    if (y == f.base()) continue;
    if (alpha.a.test(y)) r.a.set(x);
    if (alpha.b.test(y)) r.b.set(x);
  }
  return r;
}

std::string map_name(const PointedSelfMap& f) {
  // Digits are separated once a point index can take two characters.
  const bool separate = f.ground_size() > 10;
  std::string name = "f";
  for (std::uint32_t x = 0; x < f.ground_size(); ++x) {
    if (separate && x > 0) name += '.';
    const std::uint32_t y = f(x);
    name += y == f.base() ? std::string("b") : std::to_string(y);
  }
  return name;
}

std::uint32_t map_index(const PointedSelfMap& f) {
  const std::uint32_t radix = f.base() + 1;
  std::uint32_t index = 0;
  for (std::uint32_t x = 0; x < f.ground_size(); ++x) index = index * radix + f(x);
  return index;
}

PointedSelfMap map_at_index(std::size_t ground_size, std::uint32_t index) {
  PointedSelfMap f = zero_map(ground_size);
  const auto radix = static_cast<std::uint32_t>(ground_size + 1);
  for (std::size_t x = ground_size; x-- > 0;) {
    f.values[x] = index % radix;
    index /= radix;
  }
  return f;
}

}  // namespace cmon
