#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "comaxg/classify.hpp"
#include "comaxg/corpus.hpp"
#include "comaxg/limits.hpp"

namespace comaxg::cli {

/// Invariants used to tell groups apart without an isomorphism test.
struct GroupFingerprint {
  std::size_t order = 0;
  bool is_abelian = false;
  std::vector<std::pair<std::size_t, std::size_t>> element_order_counts;
  std::size_t subgroup_count = 0;

  static GroupFingerprint of(const GroupClassification& c);
  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
  friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

struct GroupRef {
  std::string spec;
  std::string label;
};

/// Non-nilpotent, supersolvable, trivial Frattini subgroup, isolated vertices in Gamma.
struct Q1Result {
  std::size_t max_order = 0;
  std::size_t scanned = 0;
  std::vector<GroupRef> findings;
  std::vector<std::string> errors;
};

Q1Result search_q1(std::size_t max_order, const Limits& limits = {});

struct Q2Entry {
  GroupRef group;
  bool solvable = false;
  std::size_t gamma_star_components = 0;
  std::string error;  // non-empty when construction failed
};

struct Q2Result {
  std::vector<Q2Entry> entries;
  std::vector<GroupRef> findings;  // non-solvable with Gamma* disconnected
};

Q2Result search_q2(const CorpusSpec& candidates, const Limits& limits = {});

/// Groups whose full graphs share a canonical certificate while their
/// fingerprints differ. One member per distinct fingerprint.
struct CollisionClass {
  std::vector<std::uint8_t> certificate;
  std::vector<GroupRef> members;
};

struct Q3Result {
  std::vector<CollisionClass> classes;
  std::vector<std::pair<GroupRef, std::string>> skipped;
};

Q3Result search_q3(const CorpusSpec& corpus, const Limits& limits = {});

std::string to_hex(const std::vector<std::uint8_t>& bytes);

void write_q1(std::ostream& out, const Q1Result& r);
void write_q2(std::ostream& out, const Q2Result& r);
void write_q3(std::ostream& out, const Q3Result& r);

}  // namespace comaxg::cli
