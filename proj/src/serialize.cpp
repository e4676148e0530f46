#include "nilprim/serialize.hpp"

#include "nilprim/error.hpp"

namespace nilprim {

json isotype_to_json(const IsoType& t) {
  return json{{"kind", to_string(t.sylow2_kind)},
              {"sylow2_order", t.sylow2_order},
              {"odd_order", t.odd_order},
              {"name", describe(t)}};
}

IsoType isotype_from_json(const json& j) {
  IsoType t;
  t.sylow2_kind = parse_sylow2_kind(j.at("kind").get<std::string>());
  t.sylow2_order = j.at("sylow2_order").get<std::uint64_t>();
  t.odd_order = j.at("odd_order").get<std::uint64_t>();
  validate(t);
  return t;
}

json group_to_json(const MatrixGroup& G, std::optional<CaseTag> tag, std::optional<IsoType> isotype) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = G.degree();
  j["q"] = G.field().size();
  j["field"] = G.field().descriptor();
  if (tag) j["case"] = to_string(*tag);
  if (isotype) j["isotype"] = isotype_to_json(*isotype);
  json gens = json::array();
  for (const auto& g : G.generators()) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["order"] = G.order();
  return j;
}

GroupDocument group_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidArgument("group document must be a JSON object");
    if (j.value("schema", 0) != kSchemaVersion) throw InvalidArgument("unsupported schema version");
    const FieldPtr F = parse_field_descriptor(j.at("field").get<std::string>());
    const int n = j.at("n").get<int>();
    if (j.contains("q") && j.at("q").get<std::uint64_t>() != F->size())
      throw InvalidArgument("q disagrees with the field descriptor");
    std::vector<Matrix> gens;
    for (const auto& s : j.at("generators")) {
      Matrix m = parse_matrix(F, s.get<std::string>());
      if (m.degree() != n) throw InvalidArgument("generator degree differs from n");
      gens.push_back(std::move(m));
    }
    GroupDocument doc{MatrixGroup(F, n, std::move(gens)), std::nullopt, std::nullopt, std::nullopt};
    if (j.contains("case")) doc.case_tag = parse_case_tag(j.at("case").get<std::string>());
    if (j.contains("isotype")) doc.isotype = isotype_from_json(j.at("isotype"));
    if (j.contains("order")) doc.order = j.at("order").get<std::uint64_t>();
    return doc;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed group document: ") + e.what());
  }
}

json record_to_json(const ClassRecord& r) {
  json j;
  j["case"] = to_string(r.case_tag);
  j["isotype"] = isotype_to_json(r.isotype);
  j["order"] = r.order;
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["certificate"] = r.certificate;
  if (r.oracle) {
    j["oracle"] = json{{"irreducible", r.oracle->irreducible},
                       {"block_systems", r.oracle->block_systems},
                       {"centralizer_dim", r.oracle->centralizer_dim},
                       {"enveloping_dim", r.oracle->enveloping_dim}};
  }
  return j;
}

json census_to_json(int n, std::uint64_t q, const std::vector<ClassRecord>& records) {
  json j;
  j["schema"] = kSchemaVersion;
  j["n"] = n;
  j["q"] = q;
  if (!records.empty()) j["field"] = records.front().generators.front().field().descriptor();
  json classes = json::array();
  std::size_t ab = 0;
  for (const auto& r : records) {
    if (r.case_tag == CaseTag::abelian) ++ab;
    classes.push_back(record_to_json(r));
  }
  j["classes"] = std::move(classes);
  j["counts"] = json{{"abelian", ab}, {"nonabelian", records.size() - ab}};
  return j;
}

json verdict_to_json(const Verdict& v) { return json{{"verdict", to_string(v.kind)}, {"trace", v.trace}}; }

json oracle_report(const std::string& check, const std::string& verdict, std::optional<json> witness,
                   double elapsed_seconds) {
  json j{{"check", check}, {"verdict", verdict}};
  if (witness) j["witness"] = std::move(*witness);
  j["elapsed"] = elapsed_seconds;
  return j;
}

}  // namespace nilprim
