#include "cmon/pairs.hpp"

#include "cmon/error.hpp"

namespace cmon {
namespace {

void require_same_ground(const PairOfSets& p, const PairOfSets& q) {
  if (p.ground_size() != q.ground_size()) {
    throw GroundMismatch("pairs of sets over ground sets of size " +
                         std::to_string(p.ground_size()) + " and " +
                         std::to_string(q.ground_size()));
  }
}

}  // namespace

char tri_letter(Tri v) {
  switch (v) {
    case Tri::T: return 'T';
    case Tri::F: return 'F';
    case Tri::U: return 'U';
  }
  return '?';
}

PairOfSets::PairOfSets(Bits first, Bits second) : a(std::move(first)), b(std::move(second)) {
  if (a.size() != b.size()) {
    throw GroundMismatch("pair components have different ground sizes");
  }
  if (a.intersects(b)) {
    throw StructuralError("pair components are not disjoint");
  }
}

PairOfSets pair_const(std::size_t ground_size, Tri value) {
  PairOfSets p(ground_size);
  if (value == Tri::T) p.a.set();
  if (value == Tri::F) p.b.set();
  return p;
}

PairOfSets pair_neg(const PairOfSets& p) {
  PairOfSets r;
  r.a = p.b;
  r.b = p.a;
  return r;
}

PairOfSets pair_and(const PairOfSets& p, const PairOfSets& q) {
  require_same_ground(p, q);
  PairOfSets r;
  r.a = p.a & q.a;
  r.b = p.b | (p.a & q.b);
  return r;
}

PairOfSets pair_or(const PairOfSets& p, const PairOfSets& q) {
  require_same_ground(p, q);
  PairOfSets r;
  r.a = p.a | (p.b & q.a);
  r.b = p.b & q.b;
  return r;
}

PairOfSets pair_down(const PairOfSets& p) {
  PairOfSets r;
  r.a = p.a;
  r.b = ~p.a;
  return r;
}

PairOfSets pair_from_function(std::span<const Tri> values) {
  PairOfSets p(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] == Tri::T) p.a.set(x);
    if (values[x] == Tri::F) p.b.set(x);
  }
  return p;
}

std::vector<Tri> function_from_pair(const PairOfSets& p) {
  std::vector<Tri> values(p.ground_size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = p.at(x);
  return values;
}

std::string pair_name(const PairOfSets& p) {
  if (p.ground_size() == 0) return "e";
  std::string name;
  for (std::size_t x = 0; x < p.ground_size(); ++x) name += tri_letter(p.at(x));
  return name;
}

std::uint32_t pair_index(const PairOfSets& p) {
  std::uint32_t index = 0;
  for (std::size_t x = 0; x < p.ground_size(); ++x) {
    index = index * 3 + static_cast<std::uint32_t>(p.at(x));
  }
  return index;
}

PairOfSets pair_at_index(std::size_t ground_size, std::uint32_t index) {
  PairOfSets p(ground_size);
  for (std::size_t x = ground_size; x-- > 0;) {
    const auto digit = static_cast<Tri>(index % 3);
    index /= 3;
    if (digit == Tri::T) p.a.set(x);
    if (digit == Tri::F) p.b.set(x);
  }
  return p;
}

}  // namespace cmon
