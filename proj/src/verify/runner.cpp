#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <thread>

#include "szego/error.hpp"
#include "szego/verify.hpp"

namespace szego {

std::uint64_t TrialRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational TrialRng::rational(long max_num, long max_den) {
  return Rational(integer(-max_num, max_num), integer(1, max_den));
}

Rational TrialRng::nonnegative(long bound, long max_den) {
  const long den = integer(1, max_den);
  return Rational(integer(0, bound * den), den);
}

Rational TrialRng::positive(long bound, long max_den) {
  const long den = integer(1, max_den);
  return Rational(integer(1, bound * den), den);
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view check_id, std::size_t trial) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char ch : check_id) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  TrialRng mix(seed ^ h);
  mix.next();
  return mix.next() + 0x9e3779b97f4a7c15ULL * (trial + 1);
}

CheckReport run_trials(std::string check_id, std::size_t trials, std::uint64_t seed,
                       unsigned jobs, const TrialFn& fn) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      TrialRng rng(trial_seed(seed, check_id, t));
      try {
        outcomes[t] = fn(t, rng);
      } catch (const std::exception& e) {
        FailureRecord rec;
        rec.trial = t;
        rec.observed = std::string("error: ") + e.what();
        rec.expected = "no error";
        outcomes[t].failure = std::move(rec);
      }
      if (outcomes[t].failure) outcomes[t].failure->trial = t;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(trials)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  CheckReport report;
  report.check_id = std::move(check_id);
  report.trials = trials;
  report.seed = seed;
  std::map<std::string, std::size_t> tag_counts;
  for (auto& o : outcomes) {
    if (o.failure) report.failures.push_back(std::move(*o.failure));
    for (const auto& tag : o.tags) ++tag_counts[tag];
  }
  for (const auto& [tag, count] : tag_counts)
    report.notes.push_back(tag + ": " + std::to_string(count));
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::size_t max_interval_matching(std::span<const double> values,
                                  std::span<const std::optional<double>> lower,
                                  std::span<const double> upper, double tol) {
  const std::size_t intervals = upper.size();
  std::vector<std::vector<std::size_t>> fits(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double slack = tol * std::max(1.0, std::abs(values[i]));
    for (std::size_t s = 0; s < intervals; ++s) {
      const bool above = !lower[s] || values[i] >= *lower[s] - slack;
      if (above && values[i] <= upper[s] + slack) fits[i].push_back(s);
    }
  }
  // Kuhn's augmenting paths.
  std::vector<std::ptrdiff_t> owner(intervals, -1);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::vector<char> seen(intervals, 0);
    std::function<bool(std::size_t)> augment = [&](std::size_t v) {
      for (std::size_t s : fits[v]) {
        if (seen[s]) continue;
        seen[s] = 1;
        if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]))) {
          owner[s] = static_cast<std::ptrdiff_t>(v);
          return true;
        }
      }
      return false;
    };
    if (augment(i)) ++matched;
  }
  return matched;
}

}  // namespace szego
