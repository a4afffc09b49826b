// Command-line front end. Talks to the library only through szego.h.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "szego/szego.h"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailures = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failure, already formatted.
struct LibError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(szego_status status, const std::string& where) {
  if (status != SZEGO_OK) throw LibError(where + ": " + szego_last_error());
}

struct Deleter {
  void operator()(szego_poly* p) const { szego_poly_free(p); }
  void operator()(szego_decomposition* d) const { szego_decomposition_free(d); }
  void operator()(szego_affine_map* m) const { szego_affine_map_free(m); }
  void operator()(szego_report* r) const { szego_report_free(r); }
  void operator()(char* s) const { szego_string_free(s); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

std::string take(char* s) {
  Owned<char> guard(s);
  return s ? std::string(s) : std::string();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An argument is either inline text or the path of a file holding it.
std::string resolve(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && fs::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

// Inline list, or JSON {"c": [...]} / {"sigma": [...]} / [...].
std::string rational_list(const std::string& arg, const char* key) {
  std::string text = resolve(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) return text;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw LibError(std::string("input: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains(key)) throw LibError(std::string("input: missing \"") + key + "\"");
    j = j[key];
  }
  if (!j.is_array()) throw LibError(std::string("input: \"") + key + "\" must be an array");
  std::string out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string() && !j[i].is_number_integer())
      throw LibError(std::string(key) + "[" + std::to_string(i) + "]: expected a rational string");
    out += (i ? "," : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
  }
  return out;
}

Owned<szego_poly> parse_poly(const std::string& arg, const char* name) {
  szego_poly* p = nullptr;
  check(szego_poly_parse(resolve(arg).c_str(), &p), name);
  return Owned<szego_poly>(p);
}

szego_mode parse_mode(const std::string& mode) {
  if (mode == "finite") return SZEGO_MODE_FINITE;
  if (mode == "exp") return SZEGO_MODE_EXP;
  if (mode == "exp-monic") return SZEGO_MODE_EXP_MONIC;
  throw UsageError("--mode must be finite, exp or exp-monic");
}

// Write to a sibling temporary, then rename over the target.
void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    if (!out.flush()) throw UsageError("cannot write '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageError("cannot replace '" + path + "'");
  }
}

std::string poly_json(const szego_poly* p) {
  char* s = nullptr;
  check(szego_poly_to_json(p, &s), "output");
  return take(s);
}

std::string poly_list(const szego_poly* p) {
  char* s = nullptr;
  check(szego_poly_to_list(p, &s), "output");
  return take(s);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SZEGO_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto v = std::stoull(text, &used, 0);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("SZEGO_SEED must be an unsigned integer");
  }
  return 42;
}

struct ComposeArgs {
  std::string a, b, from_sigma, mode = "finite", format = "json", output;
  unsigned ambient = 0, k = 1;
  bool exp = false;
};

int run_compose(const ComposeArgs& o) {
  if (!o.from_sigma.empty()) {
    szego_decomposition* raw = nullptr;
    const std::string text = resolve(o.from_sigma);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
      check(szego_decomposition_parse(text.c_str(), &raw), "--from-sigma");
    else
      check(szego_decomposition_from_sigma(parse_mode(o.mode), o.k,
                                           rational_list(o.from_sigma, "sigma").c_str(), &raw),
            "--from-sigma");
    Owned<szego_decomposition> dec(raw);
    szego_poly* p = nullptr;
    check(szego_recompose(dec.get(), &p), "recompose");
    Owned<szego_poly> poly(p);
    char* c = nullptr;
    check(szego_recompose_coeffs(dec.get(), &c), "recompose");
    const std::string coeffs = take(c);
    if (o.format == "list") {
      emit(coeffs, o.output);
    } else {
      Json out = Json::parse(poly_json(poly.get()));
      Json list = Json::array();
      if (!coeffs.empty()) {
        std::stringstream ss(coeffs);
        for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
      }
      emit(Json{{"c", list}, {"poly", out}}.dump(), o.output);
    }
    return kExitOk;
  }
  if (o.a.empty() || o.b.empty()) throw UsageError("compose needs --a and --b, or --from-sigma");
  auto a = parse_poly(o.a, "--a");
  auto b = parse_poly(o.b, "--b");
  szego_poly* r = nullptr;
  if (o.exp || szego_poly_is_exp(a.get()) || szego_poly_is_exp(b.get())) {
    check(szego_exp_compose(a.get(), b.get(), &r), "compose");
  } else {
    long n = o.ambient;
    if (n == 0) n = std::max(szego_poly_degree(a.get()), szego_poly_degree(b.get()));
    if (n <= 0) throw UsageError("compose needs a positive ambient degree");
    check(szego_compose(a.get(), b.get(), static_cast<unsigned>(n), &r), "compose");
  }
  Owned<szego_poly> result(r);
  emit(o.format == "list" ? poly_list(result.get()) : poly_json(result.get()), o.output);
  return kExitOk;
}

struct DecomposeArgs {
  std::string mode = "finite", c, output;
  unsigned n = 0, k = 1;
  bool no_roots = false;
};

int run_decompose(const DecomposeArgs& o) {
  const std::string list = rational_list(o.c, "c");
  szego_decomposition* raw = nullptr;
  check(szego_decompose(parse_mode(o.mode), o.k, list.c_str(), o.no_roots ? 0 : 1, &raw),
        "--c");
  Owned<szego_decomposition> dec(raw);
  char* s = nullptr;
  check(szego_decomposition_to_json(dec.get(), &s), "output");
  const std::string text = take(s);
  if (o.n != 0 && Json::parse(text)["n"].get<unsigned>() != o.n)
    throw LibError("--c: expected " + std::to_string(o.n) + " coefficients");
  emit(text, o.output);
  return kExitOk;
}

struct PhiArgs {
  std::string mode = "finite", c, output;
  unsigned n = 0, k = 1;
};

int run_phi(const PhiArgs& o) {
  std::string list;
  unsigned n = o.n;
  if (!o.c.empty()) {
    list = rational_list(o.c, "c");
    const unsigned count = list.empty() ? 0 : static_cast<unsigned>(std::count(list.begin(), list.end(), ',') + 1);
    if (n != 0 && n != count)
      throw LibError("--c: expected " + std::to_string(n) + " coefficients");
    n = count;
  }
  if (n == 0) throw UsageError("phi needs --n (or --m) or --c");
  szego_affine_map* raw = nullptr;
  check(szego_affine_map_extract(parse_mode(o.mode), n, o.k, &raw), "phi");
  Owned<szego_affine_map> map(raw);
  char* s = nullptr;
  if (o.c.empty()) {
    check(szego_affine_map_to_json(map.get(), &s), "output");
  } else {
    check(szego_affine_map_apply(map.get(), list.c_str(), &s), "--c");
  }
  emit(take(s), o.output);
  return kExitOk;
}

struct XiArgs {
  std::string poly, format = "list", output;
  unsigned long nu = 1;
};

int run_xi(const XiArgs& o) {
  auto p = parse_poly(o.poly, "--poly");
  szego_poly* r = nullptr;
  check(szego_xi_iterate(p.get(), o.nu, &r), "xi-iterate");
  Owned<szego_poly> result(r);
  emit(o.format == "json" ? poly_json(result.get()) : poly_list(result.get()), o.output);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all", format = "json", output, csv;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 500;
  unsigned jobs = 1;
};

int run_verify(const VerifyArgs& o) {
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();
  if (o.trials == 0) throw UsageError("--trials must be positive");
  szego_report* raw = nullptr;
  check(szego_verify(o.suite.c_str(), seed, o.trials, o.jobs, &raw), "verify");
  Owned<szego_report> report(raw);
  char* s = nullptr;
  if (o.format == "csv")
    check(szego_report_to_csv(report.get(), &s), "output");
  else
    check(szego_report_to_json(report.get(), &s), "output");
  emit(take(s), o.output);
  if (!o.csv.empty()) {
    check(szego_report_to_csv(report.get(), &s), "output");
    emit(take(s), o.csv);
  }
  const std::size_t failures = szego_report_failure_count(report.get());
  if (failures > 0) {
    std::cerr << "verify: " << failures << " failing trial(s)\n";
    return kExitFailures;
  }
  return kExitOk;
}

struct ReportArgs {
  std::string input, format = "csv", output;
};

int run_report(const ReportArgs& o) {
  const std::string text = read_file(o.input);
  char* s = nullptr;
  if (o.format == "csv")
    check(szego_report_csv_from_json(text.c_str(), &s), o.input);
  else
    check(szego_report_strip_metadata(text.c_str(), &s), o.input);
  emit(take(s), o.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur-Szego composition toolkit"};
  app.require_subcommand(1);

  ComposeArgs compose;
  auto* c = app.add_subcommand("compose", "Compose two polynomials, or rebuild one from sigma");
  c->add_option("--a", compose.a, "First polynomial: ascending list, JSON, or file");
  c->add_option("--b", compose.b, "Second polynomial");
  c->add_option("--ambient,-N", compose.ambient, "Ambient degree (default: larger degree)");
  c->add_flag("--exp", compose.exp, "Compose e^x a with e^x b");
  c->add_option("--from-sigma", compose.from_sigma,
                "Decomposition JSON (output of decompose) or a sigma list");
  c->add_option("--mode", compose.mode, "finite | exp | exp-monic (with a sigma list)");
  c->add_option("--k", compose.k, "k for finite mode");
  c->add_option("--format", compose.format, "json | list")->check(CLI::IsMember({"json", "list"}));
  c->add_option("--output,-o", compose.output, "Output file (default stdout)");

  DecomposeArgs decompose;
  auto* d = app.add_subcommand("decompose", "Decompose into composition factors");
  d->add_option("--mode", decompose.mode, "finite | exp | exp-monic");
  d->add_option("--n,--m", decompose.n, "Number of coefficients (checked against --c)");
  d->add_option("--k", decompose.k, "k for finite mode");
  d->add_option("--c", decompose.c, "Coefficients c_1..c_n: list, JSON, or file")->required();
  d->add_flag("--no-roots", decompose.no_roots, "Skip numerical roots");
  d->add_option("--output,-o", decompose.output, "Output file (default stdout)");

  PhiArgs phi;
  auto* p = app.add_subcommand("phi", "Print the affine coefficient map, or apply it");
  p->add_option("--mode", phi.mode, "finite | exp | exp-monic");
  p->add_option("--n,--m", phi.n, "Dimension");
  p->add_option("--k", phi.k, "k for finite mode");
  p->add_option("--c", phi.c, "Apply the map to these coefficients");
  p->add_option("--output,-o", phi.output, "Output file (default stdout)");

  XiArgs xi;
  auto* x = app.add_subcommand("xi-iterate", "Apply the falling-factorial transform nu times");
  x->add_option("--poly", xi.poly, "Polynomial: ascending list, JSON, or file")->required();
  x->add_option("--nu", xi.nu, "Number of iterations");
  x->add_option("--format", xi.format, "list | json")->check(CLI::IsMember({"list", "json"}));
  x->add_option("--output,-o", xi.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite, "all, or comma-separated families");
  v->add_option("--seed", verify.seed, "Seed (default 42, or SZEGO_SEED)");
  v->add_option("--trials", verify.trials, "Trials per check");
  v->add_option("--jobs,-j", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--format", verify.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  v->add_option("--output,-o", verify.output, "Report file (default stdout)");
  v->add_option("--csv", verify.csv, "Also write the CSV summary here");

  ReportArgs report;
  auto* r = app.add_subcommand("report", "Convert a JSON report");
  r->add_option("--input,-i", report.input, "JSON report from verify")->required();
  r->add_option("--format", report.format, "csv | json (metadata stripped)")
      ->check(CLI::IsMember({"csv", "json"}));
  r->add_option("--output,-o", report.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c) return run_compose(compose);
    if (*d) return run_decompose(decompose);
    if (*p) return run_phi(phi);
    if (*x) return run_xi(xi);
    if (*v) return run_verify(verify);
    if (*r) return run_report(report);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
