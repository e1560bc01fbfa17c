#include "cmon/bundled.hpp"

namespace cmon {

const std::vector<NamedCMonoid>& bundled_c_monoids() {
  static const std::vector<NamedCMonoid> models{
      {"functional-1", functional_c_monoid(1), true},
      {"functional-2", functional_c_monoid(2), true},
      {"basic-1bot", basic_c_monoid(monoid_one_bot()), false},
      {"basic-1abot", basic_c_monoid(monoid_one_a_bot()), false},
      {"pointwise-1abot-1", pointwise_c_monoid(monoid_one_a_bot(), 1), false},
      {"pointwise-1abot-2", pointwise_c_monoid(monoid_one_a_bot(), 2), false},
  };
  return models;
}

const std::vector<NamedBMonoid>& bundled_b_monoids() {
  static const std::vector<NamedBMonoid> models{
      {"bfunctional-1", functional_b_monoid(1)},
      {"bfunctional-2", functional_b_monoid(2)},
  };
  return models;
}

}  // namespace cmon
