#pragma once

#include <string>

#include <json.hpp>

#include "dscsib/classify.hpp"
#include "dscsib/embed.hpp"
#include "dscsib/verify.hpp"

namespace dscsib {

/// Structured report schema version; bump when the layout changes.
inline constexpr const char* kReportSchemaVersion = "1.0";

nlohmann::json to_json(const Cardinal& c);
nlohmann::json to_json(const SibCount& c);
nlohmann::json to_json(const OrderType& t);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const Assignment& a);
nlohmann::json to_json(const SuiteResult& r);

/// Skeleton of a structured report; callers fill result and certificate.
nlohmann::json report_skeleton(const std::string& command,
                               const std::vector<std::string>& inputs);

/// Report for a failed command.
nlohmann::json error_report(const std::string& command, const std::string& code,
                            const std::string& message);

/// Validates a document against the subset of JSON Schema used by
/// docs/report.schema.json (type, required, properties, items, enum).
/// On failure, `why` receives the first violation found.
bool matches_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                    std::string* why = nullptr);

}  // namespace dscsib
