#pragma once

#include <set>
#include <string_view>

#include "comaxg/group_spec.hpp"
#include "comaxg/subgroup.hpp"
#include "oracles.hpp"

namespace testing {

inline comaxg::GroupTable G(std::string_view spec) { return comaxg::group_from_spec(spec); }

inline oracle::ElementSet as_set(const comaxg::SubgroupMask& h) {
  const auto e = h.elements();
  return {e.begin(), e.end()};
}

inline comaxg::SubgroupMask gen(const comaxg::GroupTable& g, std::initializer_list<comaxg::Element> xs) {
  const std::vector<comaxg::Element> v(xs);
  return comaxg::generated_subgroup(g, v);
}

}  // namespace testing
