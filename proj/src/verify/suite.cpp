#include <algorithm>
#include <array>
#include <map>

#include "szego/error.hpp"
#include "szego/verify.hpp"

namespace szego {

namespace {

using Family = void (*)(std::vector<CheckReport>&, const SuiteOptions&);

void add(std::vector<CheckReport>& out, CheckReport r) { out.push_back(std::move(r)); }

const std::vector<std::pair<std::string, Family>>& families() {
  static const std::vector<std::pair<std::string, Family>> table = {
      {"identities", [](auto& out, const auto&) { add(out, check_identities()); }},
      {"roundtrip",
       [](auto& out, const auto& o) { add(out, check_roundtrip(o.trials, o.seed, o.jobs)); }},
      {"utm",
       [](auto& out, const auto& o) {
         for (unsigned n = 1; n <= 4; ++n)
           for (unsigned k = 1; k <= 3; ++k) add(out, check_utm(n, k, o.trials, o.seed, o.jobs));
       }},
      {"ucor",
       [](auto& out, const auto& o) {
         for (unsigned m = 1; m <= 5; ++m) add(out, check_ucor(m, o.trials, o.seed, o.jobs));
       }},
      {"pitm",
       [](auto& out, const auto& o) {
         for (unsigned n = 2; n <= 4; ++n)
           for (unsigned k = 1; k <= 3; ++k) add(out, check_pitm(n, k, o.trials, o.seed, o.jobs));
       }},
      {"descartes",
       [](auto& out, const auto& o) {
         for (unsigned m = 1; m <= 5; ++m) add(out, check_descartes(m, o.trials, o.seed, o.jobs));
       }},
      {"descartescor",
       [](auto& out, const auto& o) {
         for (unsigned m = 1; m <= 5; ++m)
           add(out, check_descartescor(m, o.trials, o.seed, o.jobs));
       }},
      {"xiprop", [](auto& out, const auto& o) { add(out, check_xiprop(o.trials, o.seed, 5, o.jobs)); }},
      {"iter",
       [](auto& out, const auto& o) { add(out, check_iter(o.trials, o.seed, 5, 10000, o.jobs)); }},
      {"limithyp",
       [](auto& out, const auto& o) {
         add(out, check_limithyp(o.trials, o.seed, 5, 10000, o.jobs));
       }},
      {"notv", [](auto& out, const auto& o) { add(out, check_notv(std::min<std::size_t>(o.trials, 100), o.seed)); }},
      {"posneg",
       [](auto& out, const auto& o) {
         const std::array<unsigned, 6> ks{1, 2, 3, 4, 5, 6};
         add(out, check_posneg(ks, Rational(1, 100), std::min<std::size_t>(o.trials, 100), o.seed));
       }},
      {"derivative",
       [](auto& out, const auto& o) {
         add(out, check_derivative_identities(o.trials, o.seed, o.jobs));
       }},
      {"multiplicity",
       [](auto& out, const auto& o) { add(out, check_multiplicity(o.trials, o.seed, o.jobs)); }},
      {"lemma1", [](auto& out, const auto& o) { add(out, check_lemma1(o.trials, o.seed, o.jobs)); }},
      {"affinity",
       [](auto& out, const auto& o) { add(out, check_affinity(o.trials, o.seed, o.jobs)); }},
      {"conjugates",
       [](auto& out, const auto& o) { add(out, check_conjugates(o.trials, o.seed, o.jobs)); }},
      {"xirem", [](auto& out, const auto& o) { add(out, check_xirem(o.trials, o.seed, o.jobs)); }},
      {"kappa",
       [](auto& out, const auto& o) { add(out, check_kappa_recursion(o.trials, o.seed, o.jobs)); }},
      {"exploratory",
       [](auto& out, const auto& o) {
         const std::size_t t = std::min<std::size_t>(o.trials, 50);
         add(out, check_exploratory_pi(2, 1, 30, t, o.seed, o.jobs));
         add(out, check_exploratory_pi(3, 1, 30, t, o.seed, o.jobs));
         add(out, check_exploratory_pi(3, 2, 30, t, o.seed, o.jobs));
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_families() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : families()) names.push_back(name);
  return names;
}

std::vector<CheckReport> run_suite(std::string_view suite, const SuiteOptions& opts) {
  if (opts.trials == 0) fail(ErrorCode::invalid_argument, "trials must be positive");
  std::vector<std::string> wanted;
  if (suite == "all") {
    wanted = suite_families();
  } else {
    std::size_t start = 0;
    while (start <= suite.size()) {
      const std::size_t end = std::min(suite.find(',', start), suite.size());
      const std::string name(suite.substr(start, end - start));
      const auto& table = families();
      if (std::none_of(table.begin(), table.end(), [&](const auto& f) { return f.first == name; }))
        fail(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
      if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) wanted.push_back(name);
      start = end + 1;
    }
  }
  std::vector<CheckReport> out;
  for (const auto& [name, fn] : families())
    if (std::find(wanted.begin(), wanted.end(), name) != wanted.end()) fn(out, opts);
  return out;
}

}  // namespace szego
