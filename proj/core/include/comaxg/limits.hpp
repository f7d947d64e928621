#pragma once

#include <cstddef>

namespace comaxg {

/// Resource caps shared by every stage of the pipeline.
struct Limits {
  std::size_t closure_cap = 10'000;
  std::size_t subgroup_cap = 100'000;
  std::size_t certificate_cap = 64;

  /// Defaults overridden by COMAXG_CLOSURE_CAP, COMAXG_SUBGROUP_CAP and
  /// COMAXG_CERT_CAP when those are set to positive integers.
  static Limits from_environment();
};

}  // namespace comaxg
