#include "comaxg/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace comaxg {

namespace {

void override_from(const char* name, std::size_t& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  std::size_t parsed = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec == std::errc{} && ptr == end && parsed > 0) value = parsed;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from("COMAXG_CLOSURE_CAP", limits.closure_cap);
  override_from("COMAXG_SUBGROUP_CAP", limits.subgroup_cap);
  override_from("COMAXG_CERT_CAP", limits.certificate_cap);
  return limits;
}

}  // namespace comaxg
