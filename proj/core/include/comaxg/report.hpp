#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "comaxg/corpus.hpp"
#include "comaxg/theorems.hpp"

namespace comaxg {

/// THEOREM <id> GROUP <label> VERDICT <pass|fail|na> PREDICTED <json> OBSERVED <json>
std::string format_report_line(const TheoremReport& report);

nlohmann::json to_json(const TheoremReport& report);

/// JSON array mirroring the text stream, one object per report; failed
/// entries appear as {"line", "spec", "error"}.
nlohmann::json to_json(const std::vector<CorpusResult>& results);

struct RunSummary {
  std::size_t groups = 0;
  std::size_t errors = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
};

RunSummary summarize(const std::vector<CorpusResult>& results);

/// Report lines in corpus order; error entries become
/// "ERROR LINE <n> SPEC <text> MESSAGE <message>".
void write_report_stream(std::ostream& out, const std::vector<CorpusResult>& results);

}  // namespace comaxg
