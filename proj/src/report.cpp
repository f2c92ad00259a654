#include "dscsib/report.hpp"

namespace dscsib {

nlohmann::json to_json(const Cardinal& c) { return c.to_string(); }

nlohmann::json to_json(const SibCount& c) {
  if (c.is_exact()) return nlohmann::json{{"kind", "exact"}, {"value", to_string(c.atom())}};
  return nlohmann::json{
      {"kind", "range"}, {"lo", to_string(c.lo())}, {"hi", to_string(c.hi())}};
}

nlohmann::json to_json(const OrderType& t) { return to_string(t); }

nlohmann::json to_json(const Witness& w) {
  nlohmann::json j = nlohmann::json::object();
  if (w.component) j["component"] = to_json(*w.component);
  if (w.component_sib) j["component_sib"] = w.component_sib->to_string();
  if (w.i) j["i"] = *w.i;
  if (w.j) j["j"] = *w.j;
  if (w.lambda_i) j["lambda_i"] = to_json(*w.lambda_i);
  if (w.lambda_j) j["lambda_j"] = to_json(*w.lambda_j);
  if (w.capacity) j["capacity"] = to_json(*w.capacity);
  if (w.trivial_count) j["trivial_count"] = to_json(*w.trivial_count);
  if (w.bound) j["bound"] = *w.bound;
  if (w.cascade_m) j["cascade_m"] = *w.cascade_m;
  if (w.schema_tail) j["schema_tail"] = true;
  if (w.refined) j["countable_refinement"] = w.refined->to_string();
  if (w.lower) j["lower"] = w.lower->to_string();
  if (w.upper) j["upper"] = w.upper->to_string();
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

nlohmann::json to_json(const Certificate& c) {
  return nlohmann::json{{"rule", std::string(rule_name(c.rule))},
                        {"statement", std::string(rule_statement(c.rule))},
                        {"witness", to_json(c.witness)}};
}

nlohmann::json to_json(const Assignment& a) {
  nlohmann::json transfers = nlohmann::json::array();
  for (const Transfer& t : a.transfers) {
    transfers.push_back({{"source", to_string(t.source)},
                         {"target", to_string(t.target)},
                         {"amount", to_json(t.amount)}});
  }
  return nlohmann::json{{"transfers", transfers}};
}

nlohmann::json to_json(const SuiteResult& r) {
  return nlohmann::json{{"suite", r.name},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"notes", r.notes},
                        {"passed", r.passed()}};
}

nlohmann::json report_skeleton(const std::string& command,
                               const std::vector<std::string>& inputs) {
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"command", command},
                        {"inputs", inputs},
                        {"result", nlohmann::json::object()},
                        {"timing_ms", 0.0},
                        {"exit_code", 0}};
}

nlohmann::json error_report(const std::string& command, const std::string& code,
                            const std::string& message) {
  return nlohmann::json{{"schema_version", kReportSchemaVersion},
                        {"command", command},
                        {"error", {{"code", code}, {"message", message}}},
                        {"exit_code", 1}};
}

namespace {

bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "number") return value.is_number();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

bool check(const nlohmann::json& doc, const nlohmann::json& schema,
           const std::string& path, std::string* why) {
  auto complain = [&](const std::string& message) {
    if (why != nullptr) *why = path + ": " + message;
    return false;
  };

  if (schema.contains("type") &&
      !type_matches(doc, schema["type"].get<std::string>())) {
    return complain("expected type " + schema["type"].get<std::string>());
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) return complain("value not in enum");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>())) {
          return complain("missing required field " + key.get<std::string>());
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (doc.contains(key) && !check(doc[key], sub, path + "/" + key, why)) {
          return false;
        }
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!check(doc[i], schema["items"], path + "[" + std::to_string(i) + "]", why)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool matches_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                    std::string* why) {
  return check(doc, schema, "$", why);
}

}  // namespace dscsib
