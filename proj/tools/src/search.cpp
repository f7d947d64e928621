#include "search.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "comaxg/analysis.hpp"
#include "comaxg/error.hpp"
#include "comaxg/group_spec.hpp"

namespace comaxg::cli {

GroupFingerprint GroupFingerprint::of(const GroupClassification& c) {
  return {c.order, c.is_abelian, c.element_order_counts, c.subgroup_count};
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

Q1Result search_q1(std::size_t max_order, const Limits& limits) {
  if (max_order > limits.closure_cap) throw ClosureCapExceeded(limits.closure_cap);
  Q1Result r;
  r.max_order = max_order;
  for (const auto& entry : family_universe(max_order).entries) {
    try {
      const auto a = analyze(group_from_spec(entry.text, limits), limits);
      ++r.scanned;
      const auto& c = a.classification;
      if (!c.is_nilpotent && c.is_supersolvable && c.frattini_order == 1 &&
          a.gamma_metrics.isolated_count > 0) {
        r.findings.push_back({entry.text, a.group.label()});
      }
    } catch (const Error& e) {
      r.errors.push_back(entry.text + ": " + e.what());
    }
  }
  return r;
}

Q2Result search_q2(const CorpusSpec& candidates, const Limits& limits) {
  Q2Result r;
  for (const auto& entry : candidates.entries) {
    Q2Entry e;
    e.group.spec = entry.text;
    try {
      GroupTable g = build_group(parse_group_spec(entry.text, entry.line), limits);
      e.group.label = g.label();
      e.solvable = is_solvable(g);
      if (!e.solvable) {
        const auto a = analyze(std::move(g), limits);
        e.gamma_star_components = a.gamma_star_metrics.component_count;
        if (e.gamma_star_components > 1) r.findings.push_back(e.group);
      }
    } catch (const Error& err) {
      e.error = err.what();
    }
    r.entries.push_back(std::move(e));
  }
  return r;
}

Q3Result search_q3(const CorpusSpec& corpus, const Limits& limits) {
  struct Member {
    GroupRef ref;
    GroupFingerprint fingerprint;
  };
  std::map<std::vector<std::uint8_t>, std::vector<Member>> buckets;
  Q3Result r;
  for (const auto& entry : corpus.entries) {
    GroupRef ref{entry.text, {}};
    try {
      GroupTable g = build_group(parse_group_spec(entry.text, entry.line), limits);
      ref.label = g.label();
      const auto a = analyze(std::move(g), limits);
      auto cert = canonical_certificate(a.gamma, limits.certificate_cap);
      buckets[std::move(cert)].push_back({ref, GroupFingerprint::of(a.classification)});
    } catch (const Error& e) {
      r.skipped.emplace_back(ref, e.what());
    }
  }
  for (auto& [cert, members] : buckets) {
    CollisionClass cls{cert, {}};
    std::vector<GroupFingerprint> seen;
    for (const auto& m : members) {
      if (std::find(seen.begin(), seen.end(), m.fingerprint) != seen.end()) continue;
      seen.push_back(m.fingerprint);
      cls.members.push_back(m.ref);
    }
    if (cls.members.size() >= 2) r.classes.push_back(std::move(cls));
  }
  return r;
}

void write_q1(std::ostream& out, const Q1Result& r) {
  out << "# Q1 universe: groups built from the shipped families of order <= " << r.max_order
      << "; not every group of each order is covered\n";
  out << "# criterion: non-nilpotent, supersolvable, trivial Frattini subgroup, isolated vertex\n";
  out << "SCANNED " << r.scanned << '\n';
  for (const auto& e : r.errors) out << "ERROR " << e << '\n';
  for (const auto& f : r.findings) out << "FINDING " << f.label << " SPEC " << f.spec << '\n';
  out << "FINDINGS " << r.findings.size() << '\n';
}

void write_q2(std::ostream& out, const Q2Result& r) {
  for (const auto& e : r.entries) {
    if (!e.error.empty()) {
      out << "ERROR SPEC " << e.group.spec << " MESSAGE " << e.error << '\n';
    } else if (e.solvable) {
      out << "GROUP " << e.group.label << " VERDICT na solvable\n";
    } else {
      out << "GROUP " << e.group.label << " GAMMA_STAR_COMPONENTS " << e.gamma_star_components
          << (e.gamma_star_components > 1 ? " DISCONNECTED" : " CONNECTED") << '\n';
    }
  }
  for (const auto& f : r.findings) out << "FINDING " << f.label << " SPEC " << f.spec << '\n';
  out << "FINDINGS " << r.findings.size() << '\n';
}

void write_q3(std::ostream& out, const Q3Result& r) {
  for (const auto& [ref, why] : r.skipped) {
    out << "SKIPPED " << (ref.label.empty() ? ref.spec : ref.label) << " MESSAGE " << why << '\n';
  }
  for (const auto& c : r.classes) {
    out << "CLASS " << to_hex(c.certificate) << " MEMBERS";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      out << (i == 0 ? " " : " | ") << c.members[i].label;
    }
    out << '\n';
  }
  out << "CLASSES " << r.classes.size() << '\n';
}

}  // namespace comaxg::cli
