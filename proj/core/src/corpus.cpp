#include "comaxg/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <istream>
#include <thread>

#include "comaxg/analysis.hpp"
#include "comaxg/error.hpp"
#include "comaxg/families.hpp"
#include "comaxg/group_spec.hpp"

namespace comaxg {

namespace {

void add(CorpusSpec& corpus, std::string text) {
  corpus.entries.push_back({corpus.entries.size() + 1, std::move(text)});
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Smallest r > 1 with r^q = 1 (mod p), or 0.
std::size_t root_of_unity(std::size_t p, std::size_t q) {
  for (std::size_t r = 2; r < p; ++r) {
    std::size_t x = 1;
    for (std::size_t i = 0; i < q; ++i) x = x * r % p;
    if (x == 1) return r;
  }
  return 0;
}

// Non-cyclic invariant factor lists f1, f2, ... with f(i+1) | f(i), all >= 2.
void invariant_factor_lists(std::size_t max_order, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t product,
                                                             std::size_t bound) {
    if (current.size() >= 2) out.push_back(current);
    for (std::size_t f = 2; f <= bound && product * f <= max_order; ++f) {
      if (!current.empty() && current.back() % f != 0) continue;
      current.push_back(f);
      extend(product * f, f);
      current.pop_back();
    }
  };
  extend(1, max_order);
}

std::string join_factors(const std::vector<std::size_t>& factors) {
  std::string s = "abelian";
  for (std::size_t f : factors) s += " " + std::to_string(f);
  return s;
}

struct Sized {
  std::string spec;
  std::size_t order;
};

CorpusResult run_entry(const CorpusEntry& entry, const Limits& limits) {
  CorpusResult result;
  result.entry = entry;
  try {
    GroupTable group = build_group(parse_group_spec(entry.text, entry.line), limits);
    result.group_label = group.label();
    const GroupAnalysis analysis = analyze(std::move(group), limits);
    result.reports = verify_all(analysis);
  } catch (const ParseError& e) {
    result.error = e.what();
  } catch (const Error& e) {
    result.error = "line " + std::to_string(entry.line) + ": " + e.what();
  }
  return result;
}

}  // namespace

CorpusSpec read_corpus(std::istream& in, std::string source) {
  CorpusSpec corpus;
  corpus.source = std::move(source);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    corpus.entries.push_back({number, line.substr(first, last - first + 1)});
  }
  return corpus;
}

CorpusSpec read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file " + path);
  return read_corpus(in, path);
}

CorpusSpec default_corpus() {
  CorpusSpec c;
  c.source = "builtin";
  for (std::size_t n = 4; n <= 36; ++n) add(c, "cyclic " + std::to_string(n));
  for (std::size_t n : {49, 64, 72, 81}) add(c, "cyclic " + std::to_string(n));
  for (std::size_t p : {2, 3, 5}) {
    for (std::size_t k : {2, 3}) add(c, "elementary " + std::to_string(p) + " " + std::to_string(k));
  }
  for (std::size_t n = 8; n <= 32; n += 2) add(c, "dihedral " + std::to_string(n));
  for (std::size_t n : {8, 16, 32}) add(c, "quaternion " + std::to_string(n));
  for (std::size_t n : {16, 32}) add(c, "semidihedral " + std::to_string(n));
  add(c, "modular 2 4");
  add(c, "modular 3 3");
  add(c, "abelian 4 2");
  add(c, "abelian 8 2");
  add(c, "abelian 9 3");
  add(c, "symmetric 3");
  add(c, "symmetric 4");
  add(c, "symmetric 5");
  add(c, "alternating 4");
  add(c, "alternating 5");
  add(c, "semidirect 3 2 2");
  add(c, "semidirect 7 3 2");
  add(c, "semidirect 5 2 4");
  add(c, "semidirect 7 2 6");
  return c;
}

CorpusSpec default_nonsolvable_candidates() {
  CorpusSpec c;
  c.source = "builtin";
  add(c, "alternating 5");
  add(c, "symmetric 5");
  add(c, "direct alternating 5 cyclic 2");
  add(c, "perm 7 (0 1 2 3 4 5 6);(1 2)(3 6)");
  add(c, "symmetric 4");
  return c;
}

CorpusSpec family_universe(std::size_t max_order) {
  CorpusSpec c;
  c.source = "families up to order " + std::to_string(max_order);

  for (std::size_t n = 1; n <= max_order; ++n) add(c, "cyclic " + std::to_string(n));

  std::vector<std::vector<std::size_t>> lists;
  invariant_factor_lists(max_order, lists);
  std::vector<Sized> abelian_specs;
  for (const auto& f : lists) {
    std::size_t order = 1;
    for (std::size_t x : f) order *= x;
    abelian_specs.push_back({join_factors(f), order});
    add(c, abelian_specs.back().spec);
  }

  std::vector<Sized> nonabelian;
  for (std::size_t n = 6; n <= max_order; n += 2) nonabelian.push_back({"dihedral " + std::to_string(n), n});
  for (std::size_t n = 8; n <= max_order; n *= 2) nonabelian.push_back({"quaternion " + std::to_string(n), n});
  for (std::size_t n = 16; n <= max_order; n *= 2) nonabelian.push_back({"semidihedral " + std::to_string(n), n});
  for (std::size_t p = 2; power(p, 3) <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t n = p == 2 ? 4 : 3; power(p, n) <= max_order; ++n) {
      nonabelian.push_back({"modular " + std::to_string(p) + " " + std::to_string(n), power(p, n)});
    }
  }
  for (std::size_t n = 4; factorial(n) <= max_order; ++n) {
    nonabelian.push_back({"symmetric " + std::to_string(n), factorial(n)});
  }
  for (std::size_t n = 4; factorial(n) / 2 <= max_order; ++n) {
    nonabelian.push_back({"alternating " + std::to_string(n), factorial(n) / 2});
  }
  for (std::size_t p = 3; p * 2 <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t q = 2; q < p && p * q <= max_order; ++q) {
      if (!is_prime(q) || (p - 1) % q != 0 || q == 2) continue;
      const std::size_t r = root_of_unity(p, q);
      nonabelian.push_back({"semidirect " + std::to_string(p) + " " + std::to_string(q) + " " +
                                std::to_string(r),
                            p * q});
    }
  }
  for (const auto& g : nonabelian) add(c, g.spec);

  for (const auto& g : nonabelian) {
    for (std::size_t m = 2; g.order * m <= max_order; ++m) {
      add(c, "direct " + g.spec + " cyclic " + std::to_string(m));
    }
    for (const auto& a : abelian_specs) {
      if (g.order * a.order <= max_order) add(c, "direct " + g.spec + " " + a.spec);
    }
  }
  for (std::size_t i = 0; i < nonabelian.size(); ++i) {
    for (std::size_t j = i; j < nonabelian.size(); ++j) {
      if (nonabelian[i].order * nonabelian[j].order <= max_order) {
        add(c, "direct " + nonabelian[i].spec + " " + nonabelian[j].spec);
      }
    }
  }
  return c;
}

std::vector<CorpusResult> run_corpus(const CorpusSpec& corpus, const Limits& limits,
                                     unsigned threads) {
  std::vector<CorpusResult> results(corpus.entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, corpus.entries.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.entries.size(); i = next++) {
      results[i] = run_entry(corpus.entries[i], limits);
    }
  };
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace comaxg
