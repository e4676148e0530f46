#pragma once

// JSON forms of groups, census records and oracle reports (schema 1).

#include <optional>
#include <string>

#include <json.hpp>

#include "nilprim/classify.hpp"

namespace nilprim {

inline constexpr int kSchemaVersion = 1;

using json = nlohmann::ordered_json;

json isotype_to_json(const IsoType& t);
IsoType isotype_from_json(const json& j);

/// {schema, n, q, field, case?, isotype?, generators, order}.
json group_to_json(const MatrixGroup& G, std::optional<CaseTag> tag = std::nullopt,
                   std::optional<IsoType> isotype = std::nullopt);

/// A group read back together with whatever it claims about itself.
struct GroupDocument {
  MatrixGroup group;
  std::optional<CaseTag> case_tag;
  std::optional<IsoType> isotype;
  std::optional<std::uint64_t> order;
};

/// Throws InvalidArgument on any schema or parse problem, including singular
/// generators.
GroupDocument group_from_json(const json& j);

json record_to_json(const ClassRecord& r);
json census_to_json(int n, std::uint64_t q, const std::vector<ClassRecord>& records);

json verdict_to_json(const Verdict& v);

/// {check, verdict, witness?, elapsed}.
json oracle_report(const std::string& check, const std::string& verdict, std::optional<json> witness,
                   double elapsed_seconds);

}  // namespace nilprim
