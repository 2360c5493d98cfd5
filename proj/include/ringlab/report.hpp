#pragma once

// Machine-readable reports. Field order is fixed, rationals travel as
// "num/den" strings, nothing depends on clocks, addresses or hash-map
// iteration, so identical inputs produce byte-identical output.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ringlab/bounds.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/version.hpp"

namespace ringlab {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest, hex encoded; used to fingerprint inputs.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json json_of(const Rational& r) { return Json(r.str()); }

inline Json json_of(const TheoremCheck& c) {
  Json j;
  j["kind"] = "theorem_check";
  j["theorem"] = c.theorem_id;
  j["hypotheses_hold"] = c.hypotheses_hold;
  if (!c.hypotheses_hold) j["skip_reason"] = c.skip_reason;
  if (c.lhs) j["lhs"] = c.lhs->str();
  if (c.rhs) j["rhs"] = c.rhs->str();
  if (c.inequality_holds) j["inequality_holds"] = *c.inequality_holds;
  if (c.equality_attained) j["equality_attained"] = *c.equality_attained;
  if (c.equality_condition_predicted)
    j["equality_condition_predicted"] = *c.equality_condition_predicted;
  Json clauses = Json::array();
  for (const auto& cl : c.clauses) {
    Json e;
    e["label"] = cl.label;
    e["holds"] = cl.holds;
    if (!cl.detail.empty()) e["detail"] = cl.detail;
    clauses.push_back(std::move(e));
  }
  j["clauses"] = std::move(clauses);
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (c.witness) j["witness"] = *c.witness;
  j["passed"] = c.passed();
  return j;
}

struct Report {
  std::string tool{"ringlab"};
  std::string version{kVersion};
  int schema{kReportSchemaVersion};
  std::vector<std::pair<std::string, std::string>> inputs;  // (name, digest)
  Json results = Json::array();
  std::vector<std::pair<std::string, long long>> summary;
  std::string status{"ok"};

  Json to_json() const {
    Json j;
    j["tool"] = tool;
    j["version"] = version;
    j["schema"] = schema;
    Json ins = Json::array();
    for (const auto& [name, digest] : inputs) {
      Json e;
      e["name"] = name;
      e["digest"] = digest;
      ins.push_back(std::move(e));
    }
    j["inputs"] = std::move(ins);
    j["results"] = results;
    Json sum;
    for (const auto& [k, v] : summary) sum[k] = v;
    j["summary"] = std::move(sum);
    j["status"] = status;
    return j;
  }

  static Report from_json(const Json& j) {
    Report r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.schema = j.at("schema").get<int>();
    for (const auto& e : j.at("inputs"))
      r.inputs.emplace_back(e.at("name").get<std::string>(), e.at("digest").get<std::string>());
    r.results = j.at("results");
    for (const auto& [k, v] : j.at("summary").items())
      r.summary.emplace_back(k, v.get<long long>());
    r.status = j.at("status").get<std::string>();
    return r;
  }

  std::string serialize() const { return to_json().dump(2) + "\n"; }

  friend bool operator==(const Report& a, const Report& b) {
    return a.to_json() == b.to_json();
  }
};

/// Plain-text rendering, the human default.
inline std::string report_text(const Report& r) {
  std::string out;
  out += r.tool;
  out += " ";
  out += r.version;
  out += " - status: " + r.status + "\n";
  for (const auto& e : r.results) {
    const std::string kind = e.value("kind", "");
    if (kind == "theorem_check") {
      out += std::string(e.value("passed", false) ? "[PASS] " : "[FAIL] ") +
             e.value("theorem", "?");
      if (!e.value("hypotheses_hold", true))
        out += "  (skipped: " + e.value("skip_reason", "") + ")";
      if (e.contains("lhs") && e.contains("rhs"))
        out += "  " + e["lhs"].get<std::string>() + " .. " + e["rhs"].get<std::string>();
      if (e.contains("witness")) out += "\n       witness: " + e["witness"].get<std::string>();
      out += "\n";
    } else if (kind == "theorem_tally") {
      out += "theorem " + e.value("theorem", "?") + ": " +
             std::to_string(e.value("checked", 0LL)) + " checked, " +
             std::to_string(e.value("passed", 0LL)) + " passed, " +
             std::to_string(e.value("skipped", 0LL)) + " hypothesis-skips\n";
    } else if (kind == "violation") {
      out += "[FAIL] " + e.value("theorem", "?") + " at " + e.value("subject", "?") + "\n";
      if (e.contains("check") && e["check"].contains("witness"))
        out += "       witness: " + e["check"]["witness"].get<std::string>() + "\n";
    } else {
      // generic fallback: key/value pairs on one line
      out += kind.empty() ? "result" : kind;
      for (const auto& [k, v] : e.items()) {
        if (k == "kind") continue;
        out += "  " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
      }
      out += "\n";
    }
  }
  for (const auto& [k, v] : r.summary) out += k + ": " + std::to_string(v) + "\n";
  return out;
}

/// CSV rendering: one row per result with a flat column set.
inline std::string report_csv(const Report& r) {
  const auto esc = [](std::string s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "kind,theorem,subject,status,lhs,rhs,detail\n";
  for (const auto& e : r.results) {
    const std::string kind = e.value("kind", "");
    std::string theorem = e.value("theorem", "");
    std::string subject = e.value("subject", "");
    std::string status, lhs, rhs, detail;
    if (kind == "theorem_check") {
      status = !e.value("hypotheses_hold", true) ? "skipped"
               : e.value("passed", false)        ? "pass"
                                                 : "fail";
      lhs = e.contains("lhs") ? e["lhs"].get<std::string>() : "";
      rhs = e.contains("rhs") ? e["rhs"].get<std::string>() : "";
      detail = e.contains("witness") ? e["witness"].get<std::string>() : "";
    } else if (kind == "theorem_tally") {
      status = "tally";
      detail = std::to_string(e.value("checked", 0LL)) + " checked, " +
               std::to_string(e.value("passed", 0LL)) + " passed, " +
               std::to_string(e.value("skipped", 0LL)) + " skipped";
    } else if (kind == "violation") {
      status = "fail";
      if (e.contains("check") && e["check"].contains("witness"))
        detail = e["check"]["witness"].get<std::string>();
    } else {
      status = "info";
      Json copy = e;
      copy.erase("kind");
      detail = copy.dump();
    }
    out += esc(kind) + "," + esc(theorem) + "," + esc(subject) + "," + esc(status) + "," +
           esc(lhs) + "," + esc(rhs) + "," + esc(detail) + "\n";
  }
  return out;
}

inline std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") return r.serialize();
  if (format == "csv") return report_csv(r);
  return report_text(r);
}

}  // namespace ringlab
