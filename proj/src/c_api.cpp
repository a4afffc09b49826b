#include "szego/szego.h"

#include <cctype>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"
#include "szego/decompose.hpp"
#include "szego/error.hpp"
#include "szego/ssc.hpp"
#include "szego/verify.hpp"

struct szego_poly {
  szego::RatPoly poly;
  bool exp = false;
};

struct szego_decomposition {
  szego::Decomposition dec;
};

struct szego_affine_map {
  szego::AffineMap map;
};

struct szego_report {
  std::vector<szego::CheckReport> reports;
};

namespace {

using Json = nlohmann::ordered_json;
using szego::ErrorCode;
using szego::Rational;
using szego::RatPoly;

thread_local std::string last_error;

szego_status set_error(szego_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
szego_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SZEGO_OK;
  } catch (const szego::Error& e) {
    return set_error(static_cast<szego_status>(e.code()), e.what());
  } catch (const Json::exception& e) {
    return set_error(SZEGO_ERR_PARSE, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SZEGO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SZEGO_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) szego::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j, const char* field) {
  if (!j.is_array())
    szego::fail(ErrorCode::parse, std::string("\"") + field + "\" must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string() && !j[i].is_number_integer())
      szego::fail(ErrorCode::parse, std::string(field) + "[" + std::to_string(i) +
                                        "]: expected a rational string");
    try {
      out.push_back(j[i].is_string() ? Rational::parse(j[i].get<std::string>())
                                     : Rational(j[i].get<long>()));
    } catch (const szego::Error& e) {
      szego::fail(e.code(), std::string(field) + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

szego::PhiSpec spec_for(szego_mode mode, unsigned n, unsigned k) {
  switch (mode) {
    case SZEGO_MODE_FINITE:
      return szego::PhiSpec::finite(n, k);
    case SZEGO_MODE_EXP:
      return szego::PhiSpec::exp(n, szego::CoeffConvention::unit_constant);
    case SZEGO_MODE_EXP_MONIC:
      return szego::PhiSpec::exp(n, szego::CoeffConvention::monic);
  }
  szego::fail(ErrorCode::invalid_argument, "unknown mode");
}

std::vector<Rational> parse_list(const char* text, const char* what) {
  require(text, what);
  return szego::parse_rational_list(text);
}

szego_poly* make_poly(RatPoly p, bool exp) { return new szego_poly{std::move(p), exp}; }

Json poly_json(const szego_poly& p) {
  Json inner{{"coeffs", rationals_json(p.poly.coeffs())}};
  if (p.exp) return Json{{"exp_poly", std::move(inner)}};
  return inner;
}

}  // namespace

extern "C" {

const char* szego_last_error(void) { return last_error.c_str(); }

void szego_string_free(char* s) { delete[] s; }

szego_status szego_poly_parse(const char* text, szego_poly** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    std::string_view s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    if (!s.empty() && s.front() == '{') {
      const Json j = Json::parse(s);
      bool exp = false;
      const Json* body = &j;
      if (j.contains("exp_poly")) {
        exp = true;
        body = &j.at("exp_poly");
      }
      if (!body->is_object() || !body->contains("coeffs"))
        szego::fail(ErrorCode::parse, "polynomial JSON needs a \"coeffs\" array");
      *out = make_poly(RatPoly(rationals_from_json(body->at("coeffs"), "coeffs")), exp);
    } else {
      *out = make_poly(RatPoly(szego::parse_rational_list(s)), false);
    }
  });
}

void szego_poly_free(szego_poly* p) { delete p; }

long szego_poly_degree(const szego_poly* p) {
  if (p == nullptr || p->poly.is_zero()) return -1;
  return p->poly.degree();
}

int szego_poly_is_exp(const szego_poly* p) { return p != nullptr && p->exp ? 1 : 0; }

szego_status szego_poly_to_json(const szego_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(poly_json(*p).dump());
  });
}

szego_status szego_poly_to_list(const szego_poly* p, char** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = dup(szego::format_rational_list(p->poly.is_zero() ? std::vector<Rational>{0}
                                                              : p->poly.coeffs()));
  });
}

szego_status szego_compose(const szego_poly* a, const szego_poly* b, unsigned ambient_degree,
                           szego_poly** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    if (ambient_degree == 0) szego::fail(ErrorCode::invalid_argument, "ambient degree must be positive");
    *out = make_poly(szego::ssc_compose(a->poly, b->poly, szego::SscContext{ambient_degree}), false);
  });
}

szego_status szego_exp_compose(const szego_poly* a, const szego_poly* b, szego_poly** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const auto h = szego::exp_ssc(szego::RatExpPoly{a->poly}, szego::RatExpPoly{b->poly});
    *out = make_poly(h.poly, true);
  });
}

szego_status szego_xi_iterate(const szego_poly* p, unsigned long nu, szego_poly** out) {
  return guarded([&] {
    require(p, "poly");
    require(out, "out");
    *out = make_poly(szego::xi_iterate(p->poly, nu), p->exp);
  });
}

szego_status szego_decompose(szego_mode mode, unsigned k, const char* coeffs, int with_roots,
                             szego_decomposition** out) {
  return guarded([&] {
    require(out, "out");
    const auto c = parse_list(coeffs, "coefficients");
    if (c.empty()) szego::fail(ErrorCode::invalid_argument, "empty coefficient list");
    const auto spec = spec_for(mode, static_cast<unsigned>(c.size()), k);
    *out = new szego_decomposition{szego::decompose(spec, c, with_roots != 0)};
  });
}

szego_status szego_decomposition_from_sigma(szego_mode mode, unsigned k, const char* sigma,
                                            szego_decomposition** out) {
  return guarded([&] {
    require(out, "out");
    auto s = parse_list(sigma, "sigma");
    if (s.empty()) szego::fail(ErrorCode::invalid_argument, "empty sigma list");
    const auto spec = spec_for(mode, static_cast<unsigned>(s.size()), k);
    if (spec.mode == szego::DecompMode::finite && k == 0)
      szego::fail(ErrorCode::invalid_argument, "finite mode needs k >= 1");
    *out = new szego_decomposition{szego::Decomposition{spec, std::move(s), {}}};
  });
}

szego_status szego_decomposition_parse(const char* json, szego_decomposition** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    const Json j = Json::parse(json);
    const std::string mode = j.at("mode").get<std::string>();
    auto sigma = rationals_from_json(j.at("sigma"), "sigma");
    if (sigma.empty()) szego::fail(ErrorCode::parse, "empty sigma");
    const auto n = static_cast<unsigned>(sigma.size());
    szego::PhiSpec spec;
    if (mode == "finite") {
      spec = szego::PhiSpec::finite(n, j.at("k").get<unsigned>());
      if (spec.k == 0) szego::fail(ErrorCode::parse, "finite mode needs k >= 1");
    } else if (mode == "exp") {
      const std::string conv = j.value("convention", "unit");
      if (conv != "unit" && conv != "monic")
        szego::fail(ErrorCode::parse, "convention must be \"unit\" or \"monic\"");
      spec = szego::PhiSpec::exp(n, conv == "monic" ? szego::CoeffConvention::monic
                                                    : szego::CoeffConvention::unit_constant);
    } else {
      szego::fail(ErrorCode::parse, "mode must be \"finite\" or \"exp\"");
    }
    if (j.contains("n") && j["n"].get<unsigned>() != n)
      szego::fail(ErrorCode::parse, "\"n\" does not match the sigma length");
    *out = new szego_decomposition{szego::Decomposition{spec, std::move(sigma), {}}};
  });
}

void szego_decomposition_free(szego_decomposition* d) { delete d; }

szego_status szego_decomposition_to_json(const szego_decomposition* d, char** out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    const auto& dec = d->dec;
    Json roots = Json::array();
    // Adding 0.0 turns -0.0 into 0.0.
    for (const auto& z : dec.roots)
      roots.push_back(Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}});
    Json j{{"sigma", rationals_json(dec.sigma)}, {"roots", std::move(roots)}};
    if (dec.spec.mode == szego::DecompMode::finite) {
      j["mode"] = "finite";
      j["n"] = dec.spec.n;
      j["k"] = dec.spec.k;
    } else {
      j["mode"] = "exp";
      j["convention"] =
          dec.spec.convention == szego::CoeffConvention::monic ? "monic" : "unit";
      j["n"] = dec.spec.n;
    }
    *out = dup(j.dump());
  });
}

szego_status szego_recompose(const szego_decomposition* d, szego_poly** out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    *out = make_poly(szego::recompose(d->dec), d->dec.spec.mode == szego::DecompMode::exp);
  });
}

szego_status szego_recompose_coeffs(const szego_decomposition* d, char** out) {
  return guarded([&] {
    require(d, "decomposition");
    require(out, "out");
    *out = dup(szego::format_rational_list(szego::recompose_coeffs(d->dec)));
  });
}

szego_status szego_affine_map_extract(szego_mode mode, unsigned n, unsigned k,
                                      szego_affine_map** out) {
  return guarded([&] {
    require(out, "out");
    if (n == 0) szego::fail(ErrorCode::invalid_argument, "dimension must be positive");
    if (mode == SZEGO_MODE_FINITE && k == 0)
      szego::fail(ErrorCode::invalid_argument, "finite mode needs k >= 1");
    *out = new szego_affine_map{szego::extract_affine_map(spec_for(mode, n, k))};
  });
}

void szego_affine_map_free(szego_affine_map* m) { delete m; }

szego_status szego_affine_map_apply(const szego_affine_map* m, const char* coeffs, char** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "out");
    const auto c = parse_list(coeffs, "coefficients");
    if (c.size() != m->map.offset.size())
      szego::fail(ErrorCode::invalid_argument,
                  "expected " + std::to_string(m->map.offset.size()) + " coefficients");
    *out = dup(szego::format_rational_list(m->map.apply(c)));
  });
}

szego_status szego_affine_map_to_json(const szego_affine_map* m, char** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "out");
    Json rows = Json::array();
    for (const auto& row : m->map.matrix) rows.push_back(rationals_json(row));
    *out = dup(Json{{"matrix", std::move(rows)}, {"offset", rationals_json(m->map.offset)}}.dump());
  });
}

szego_status szego_verify(const char* suite, uint64_t seed, size_t trials, unsigned jobs,
                          szego_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    szego::SuiteOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.jobs = jobs == 0 ? 1 : jobs;
    *out = new szego_report{szego::run_suite(suite, opts)};
  });
}

szego_status szego_verify_families(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string joined;
    for (const auto& name : szego::suite_families()) joined += (joined.empty() ? "" : ",") + name;
    *out = dup(joined);
  });
}

void szego_report_free(szego_report* r) { delete r; }

size_t szego_report_check_count(const szego_report* r) { return r ? r->reports.size() : 0; }

size_t szego_report_failure_count(const szego_report* r) {
  size_t total = 0;
  if (r)
    for (const auto& c : r->reports) total += c.failures.size();
  return total;
}

szego_status szego_report_to_json(const szego_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(szego::reports_to_json(r->reports));
  });
}

szego_status szego_report_to_csv(const szego_report* r, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(szego::reports_to_csv(r->reports));
  });
}

szego_status szego_report_csv_from_json(const char* json, char** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = dup(szego::reports_json_to_csv(json));
  });
}

szego_status szego_report_strip_metadata(const char* json, char** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = dup(szego::strip_metadata(json));
  });
}

}  // extern "C"
