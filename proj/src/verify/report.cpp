#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "szego/error.hpp"
#include "szego/verify.hpp"

namespace szego {

namespace {

using Json = nlohmann::ordered_json;

Json report_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json inputs = Json::object();
    for (const auto& [name, value] : f.inputs) inputs[name] = value;
    failures.push_back(Json{{"trial", f.trial},
                            {"inputs", std::move(inputs)},
                            {"observed", f.observed},
                            {"expected", f.expected}});
  }
  return Json{{"check_id", r.check_id},
              {"trials", r.trials},
              {"seed", r.seed},
              {"passed", r.passed()},
              {"failures", std::move(failures)},
              {"notes", r.notes},
              {"metadata", Json{{"elapsed_seconds", r.elapsed_seconds}}}};
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

void strip(Json& j) {
  if (j.is_object()) {
    j.erase("metadata");
    for (auto& [key, value] : j.items()) strip(value);
  } else if (j.is_array()) {
    for (auto& v : j) strip(v);
  }
}

}  // namespace

std::string reports_to_json(std::span<const CheckReport> reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_json(r));
  return out.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const CheckReport> reports) {
  std::string out = "check_id,trials,failures,seed,seconds\n";
  for (const auto& r : reports)
    out += r.check_id + "," + std::to_string(r.trials) + "," +
           std::to_string(r.failures.size()) + "," + std::to_string(r.seed) + "," +
           seconds_text(r.elapsed_seconds) + "\n";
  return out;
}

std::string reports_json_to_csv(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("report JSON: ") + e.what());
  }
  if (!doc.is_array()) fail(ErrorCode::parse, "report JSON must be an array of reports");
  std::vector<CheckReport> reports;
  try {
    for (const auto& j : doc) {
      CheckReport r;
      r.check_id = j.at("check_id").get<std::string>();
      r.trials = j.at("trials").get<std::size_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.failures.resize(j.at("failures").size());
      if (j.contains("metadata")) r.elapsed_seconds = j["metadata"].value("elapsed_seconds", 0.0);
      reports.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("report JSON: ") + e.what());
  }
  return reports_to_csv(reports);
}

std::string strip_metadata(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::parse, std::string("report JSON: ") + e.what());
  }
  strip(doc);
  return doc.dump(2) + "\n";
}

}  // namespace szego
