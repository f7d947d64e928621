#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "comaxg/limits.hpp"
#include "comaxg/theorems.hpp"

namespace comaxg {

struct CorpusEntry {
  std::size_t line = 0;  // 1-based line in the source; 0 for generated entries
  std::string text;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  std::string source;  // file path or "builtin"
};

/// One spec per line; blank lines and text after '#' are ignored.
CorpusSpec read_corpus(std::istream& in, std::string source);
CorpusSpec read_corpus_file(const std::string& path);

/// The shipped corpus covering every theorem's hypothesis classes.
CorpusSpec default_corpus();

/// Default candidates for the non-solvable connectivity search.
CorpusSpec default_nonsolvable_candidates();

/// Groups constructible from the built-in families with order <= max_order.
CorpusSpec family_universe(std::size_t max_order);

struct CorpusResult {
  CorpusEntry entry;
  std::string group_label;
  std::optional<std::string> error;  // parse or construction failure
  std::vector<TheoremReport> reports;
};

/// Builds, analyses and verifies every entry. Errors are recorded per entry
/// and never abort the run. Results follow corpus order regardless of
/// `threads` (0 picks the hardware concurrency).
std::vector<CorpusResult> run_corpus(const CorpusSpec& corpus, const Limits& limits = {},
                                     unsigned threads = 0);

}  // namespace comaxg
