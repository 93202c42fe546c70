#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypermod/format.hpp"
#include "hypermod/search.hpp"
#include "hypermod/theorems.hpp"

namespace hypermod {

// All machine-readable output goes through nlohmann::ordered_json so that
// key order is insertion order and reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline Json labels_json(const Carrier& c, const ElementSet& s) {
  Json arr = Json::array();
  s.for_each([&](int e) { arr.push_back(c.labels[e]); });
  return arr;
}

inline Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["theorem_id"] = v.id;
  j["pass"] = v.pass();
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["conclusion_holds"] = v.conclusion_holds;
  j["witness"] = v.witness;
  j["out_of_contract"] = v.out_of_contract;
  return j;
}

inline Json checks_json(const std::vector<AxiomCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.axiom;
    j["ok"] = c.ok;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

inline Json validation_json(const ValidationReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["checks"] = checks_json(rep.checks);
  return j;
}

inline Json assumptions_json(const AssumptionReport& rep) {
  Json j;
  j["in_contract"] = rep.in_contract();
  j["checks"] = checks_json(rep.checks);
  return j;
}

inline Json report_skeleton(const std::string& command,
                            const std::string& file) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  if (!file.empty()) j["file"] = file;
  return j;
}

}  // namespace hypermod
