#include "comaxg/report.hpp"

#include <ostream>

namespace comaxg {

std::string format_report_line(const TheoremReport& report) {
  std::string line = "THEOREM ";
  line += to_string(report.theorem);
  line += " GROUP ";
  line += report.group_label;
  line += " VERDICT ";
  line += to_string(report.verdict);
  line += " PREDICTED ";
  line += report.predicted.dump();
  line += " OBSERVED ";
  line += report.observed.dump();
  return line;
}

nlohmann::json to_json(const TheoremReport& report) {
  return {
      {"theorem", std::string(to_string(report.theorem))},
      {"group", report.group_label},
      {"verdict", std::string(to_string(report.verdict))},
      {"applicable", report.applicable},
      {"predicted", report.predicted},
      {"observed", report.observed},
      {"skipped", report.skipped},
      {"observations", report.observations},
  };
}

nlohmann::json to_json(const std::vector<CorpusResult>& results) {
  auto out = nlohmann::json::array();
  for (const auto& r : results) {
    if (r.error) {
      out.push_back({{"line", r.entry.line}, {"spec", r.entry.text}, {"error", *r.error}});
      continue;
    }
    for (const auto& report : r.reports) out.push_back(to_json(report));
  }
  return out;
}

RunSummary summarize(const std::vector<CorpusResult>& results) {
  RunSummary s;
  for (const auto& r : results) {
    if (r.error) {
      ++s.errors;
      continue;
    }
    ++s.groups;
    for (const auto& report : r.reports) {
      switch (report.verdict) {
        case Verdict::Pass: ++s.pass; break;
        case Verdict::Fail: ++s.fail; break;
        case Verdict::NotApplicable: ++s.not_applicable; break;
      }
    }
  }
  return s;
}

void write_report_stream(std::ostream& out, const std::vector<CorpusResult>& results) {
  for (const auto& r : results) {
    if (r.error) {
      out << "ERROR LINE " << r.entry.line << " SPEC " << r.entry.text << " MESSAGE " << *r.error
          << '\n';
      continue;
    }
    for (const auto& report : r.reports) out << format_report_line(report) << '\n';
  }
}

}  // namespace comaxg
