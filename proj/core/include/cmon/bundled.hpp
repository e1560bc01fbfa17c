#pragma once

#include <string>
#include <vector>

#include "cmon/actions.hpp"

namespace cmon {

struct NamedCMonoid {
  std::string name;
  CMonoid model;
  bool functional = false;
};

struct NamedBMonoid {
  std::string name;
  BMonoid model;
};

/// functional-1, functional-2, basic-1bot, basic-1abot, pointwise-1abot-1,
/// pointwise-1abot-2, in that order.
const std::vector<NamedCMonoid>& bundled_c_monoids();
/// bfunctional-1, bfunctional-2.
const std::vector<NamedBMonoid>& bundled_b_monoids();

}  // namespace cmon
