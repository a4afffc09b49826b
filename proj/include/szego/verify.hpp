#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szego/poly.hpp"

namespace szego {

struct FailureRecord {
  std::size_t trial = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // exact values
  std::string observed;
  std::string expected;
};

struct CheckReport {
  std::string check_id;
  std::size_t trials = 0;
  std::vector<FailureRecord> failures;  // sorted by trial
  std::vector<std::string> notes;       // "tag: count", sorted by tag
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

/// splitmix64 stream. Raw integer draws only, so trial inputs are identical on
/// every platform.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  long integer(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned one_in) { return below(one_in) == 0; }
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 9, long max_den = 6);
  /// Uniform-ish rational in [0, bound] with denominators up to max_den.
  Rational nonnegative(long bound = 5, long max_den = 6);
  /// Strictly positive rational in (0, bound].
  Rational positive(long bound = 5, long max_den = 6);

 private:
  std::uint64_t state_;
};

/// Seed for one trial of one check; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view check_id, std::size_t trial);

struct TrialOutcome {
  std::optional<FailureRecord> failure;
  std::vector<std::string> tags;  // aggregated into CheckReport::notes
};

using TrialFn = std::function<TrialOutcome(std::size_t trial, TrialRng& rng)>;

/// Runs independent trials on `jobs` worker threads and aggregates them in
/// trial order.
CheckReport run_trials(std::string check_id, std::size_t trials, std::uint64_t seed,
                       unsigned jobs, const TrialFn& fn);

// Individual checks. Each returns failures as exact counterexamples instead of
// throwing; only usage errors throw.

CheckReport check_identities(unsigned k_max = 6);
CheckReport check_roundtrip(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_utm(unsigned n, unsigned k, std::size_t trials, std::uint64_t seed,
                      unsigned jobs = 1);
CheckReport check_ucor(unsigned m, std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_pitm(unsigned n, unsigned k, std::size_t trials, std::uint64_t seed,
                       unsigned jobs = 1);
CheckReport check_descartes(unsigned m, std::size_t trials, std::uint64_t seed,
                            unsigned jobs = 1);
CheckReport check_descartescor(unsigned m, std::size_t trials, std::uint64_t seed,
                               unsigned jobs = 1);
CheckReport check_xiprop(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                         unsigned jobs = 1);
CheckReport check_iter(const RatPoly& p, unsigned long max_nu);
CheckReport check_iter(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                       unsigned long max_nu, unsigned jobs = 1);
CheckReport check_limithyp(const RatPoly& p, unsigned long max_nu);
CheckReport check_limithyp(std::size_t trials, std::uint64_t seed, unsigned degree_max,
                           unsigned long max_nu, unsigned jobs = 1);
CheckReport check_notv(std::size_t trials = 100, std::uint64_t seed = 42);
CheckReport check_posneg(std::span<const unsigned> k_values, const Rational& eps,
                         std::size_t random_trials = 20, std::uint64_t seed = 42);
CheckReport check_derivative_identities(std::size_t trials, std::uint64_t seed,
                                        unsigned jobs = 1);
CheckReport check_multiplicity(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_lemma1(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_affinity(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_conjugates(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_xirem(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
CheckReport check_kappa_recursion(std::size_t trials, std::uint64_t seed, unsigned jobs = 1);
/// Exploratory: never fails on the iteration statistics, only on the
/// closed form of the quadratic example.
CheckReport check_exploratory_pi(unsigned n, unsigned k, unsigned nu_max, std::size_t trials,
                                 std::uint64_t seed, unsigned jobs = 1);

/// Matching of real negative numbers to pairwise distinct closed intervals.
/// Interval i is [lower[i], upper[i]] (nullopt lower = -infinity); a value
/// fits within tol * max(1, |value|) of the ends. Returns the matching size.
std::size_t max_interval_matching(std::span<const double> values,
                                  std::span<const std::optional<double>> lower,
                                  std::span<const double> upper, double tol);

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  unsigned jobs = 1;
};

/// Check families accepted by run_suite, in suite order.
std::vector<std::string> suite_families();
/// suite: "all" or a comma-separated list of families.
std::vector<CheckReport> run_suite(std::string_view suite, const SuiteOptions& opts);

/// JSON array of reports. Wall-clock data lives only under each report's
/// "metadata" key.
std::string reports_to_json(std::span<const CheckReport> reports);
/// CSV summary: check_id,trials,failures,seed,seconds.
std::string reports_to_csv(std::span<const CheckReport> reports);
/// Same CSV from a JSON document produced by reports_to_json.
std::string reports_json_to_csv(std::string_view json_text);
/// The JSON document with every "metadata" member removed, for comparisons.
std::string strip_metadata(std::string_view json_text);

}  // namespace szego
