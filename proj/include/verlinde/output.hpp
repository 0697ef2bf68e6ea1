#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlinde/identities.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde {

inline constexpr const char* kSchemaVersion = "verlinde/1";

enum class OutputFormat { text, json, csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw InvalidArgument("format must be text, json or csv, got '" + s + "'");
}

inline nlohmann::ordered_json value_json(const VerlindeQuery& q, const BigInt& value) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["group"] = q.group.tag();
  j["level"] = q.level;
  j["genus"] = q.genus;
  j["value"] = value.get_str();
  return j;
}

inline std::string parameters_string(const ParameterList& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? ";" : "") + params[i].first + "=" + params[i].second;
  return s;
}

inline nlohmann::ordered_json report_json(const IdentityReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["name"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["lhs"] = r.lhs.get_str();
  j["rhs"] = r.rhs.get_str();
  j["status"] = to_string(r.status);
  if (!r.label.empty()) j["label"] = r.label;
  if (timings) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline void write_reports(std::ostream& os, const std::vector<IdentityReport>& reports, OutputFormat fmt,
                          bool timings = false) {
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r, timings));
      os << arr.dump(2) << "\n";
      return;
    }
    case OutputFormat::csv:
      os << "name,parameters,lhs,rhs,status,label" << (timings ? ",elapsed_ms" : "") << "\n";
      for (const auto& r : reports) {
        os << r.name << "," << parameters_string(r.parameters) << "," << r.lhs << "," << r.rhs << ","
           << to_string(r.status) << "," << r.label;
        if (timings) os << "," << r.elapsed_ms;
        os << "\n";
      }
      return;
    case OutputFormat::text: {
      std::size_t failed = 0;
      for (const auto& r : reports) {
        os << (r.status == Status::pass ? "PASS " : "FAIL ") << r.name << " [" << parameters_string(r.parameters)
           << "] " << r.lhs << (r.status == Status::pass ? " == " : " != ") << r.rhs;
        if (!r.label.empty()) os << " (" << r.label << ")";
        if (timings) os << " " << r.elapsed_ms << " ms";
        os << "\n";
        failed += r.status == Status::fail;
      }
      os << reports.size() - failed << "/" << reports.size() << " passed\n";
      return;
    }
  }
}

}  // namespace verlinde
