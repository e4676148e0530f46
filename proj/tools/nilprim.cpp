#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include "nilprim/classify.hpp"
#include "nilprim/construct.hpp"
#include "nilprim/error.hpp"
#include "nilprim/oracle.hpp"
#include "nilprim/serialize.hpp"
#include "nilprim/singer.hpp"

using namespace nilprim;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Caps {
  std::uint64_t sweep = kSweepCap;
  std::size_t group = 10000;
  std::uint64_t nodes = 20'000'000;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GroupDocument load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
  return group_from_json(j);
}

void print_table(const std::vector<ClassRecord>& recs) {
  std::printf("%-9s %-16s %8s\n", "case", "isotype", "order");
  for (const auto& r : recs) std::printf("%-9s %-16s %8llu\n", std::string(to_string(r.case_tag)).c_str(),
                                         describe(r.isotype).c_str(), static_cast<unsigned long long>(r.order));
}

int cmd_enumerate(int n, std::uint64_t q, bool nonabelian_only, bool certify, bool table, int jobs, const Caps& caps) {
  EnumerateOptions o;
  o.nonabelian_only = nonabelian_only;
  o.certify = certify;
  o.jobs = jobs;
  o.decision.sweep_cap = caps.sweep;
  o.decision.oracle_group_cap = caps.group;
  const auto recs = enumerate_classes(n, q, o);
  if (table) print_table(recs);
  else std::cout << census_to_json(n, q, recs).dump(2) << "\n";
  return kPass;
}

int cmd_construct(int n, std::uint64_t q, const std::string& kind_text, int s, std::uint64_t c, bool blowup) {
  const FieldPtr F = make_field_of_size(q);
  const Sylow2Kind kind = parse_sylow2_kind(kind_text);
  std::optional<MatrixGroup> G;
  std::optional<CaseTag> tag;
  if (kind == Sylow2Kind::cyclic || kind == Sylow2Kind::trivial) {
    G = canonical_abelian(c, n, F);
    tag = CaseTag::abelian;
  } else if (n == 2) {
    G = nilprim_gl2(F, kind, s, c);
    tag = CaseTag::deg2;
  } else if (n % 2 == 0 && (n / 2) % 2 == 1) {
    const int m = n / 2;
    if (kind == Sylow2Kind::quaternion8 && !blowup) {
      G = q8_times_c(m, F, c);
      tag = CaseTag::q8_case2;
    } else {
      G = nilprim_gl2m(m, F, kind, s, c);
      tag = kind == Sylow2Kind::quaternion8 ? CaseTag::q8_case2 : CaseTag::case3;
    }
  } else {
    throw InvalidArgument("no nonabelian nilpotent primitive group in degree " + std::to_string(n) +
                          ": n must be 2 or 2m with m odd");
  }
  const IsoType t = recognize_isotype(*G);
  std::cout << group_to_json(*G, tag, t).dump(2) << "\n";
  return kPass;
}

int cmd_verify(const std::string& path, const Caps& caps) {
  const GroupDocument doc = load_group(path);
  const MatrixGroup& G = doc.group;
  json checks = json::array();
  bool pass = true;
  const auto record = [&](const std::string& check, bool ok, const std::string& verdict, std::optional<json> witness,
                          double elapsed) {
    checks.push_back(oracle_report(check, verdict, std::move(witness), elapsed));
    pass = pass && ok;
  };

  auto t0 = std::chrono::steady_clock::now();
  DecisionOptions dopts;
  dopts.sweep_cap = caps.sweep;
  dopts.oracle_group_cap = caps.group;
  const Verdict v = is_nilpotent_primitive(G, dopts);
  record("nilpotent_primitive", v.kind == VerdictKind::primitive, std::string(to_string(v.kind)), json(v.trace),
         seconds_since(t0));

  if (doc.order) {
    t0 = std::chrono::steady_clock::now();
    const bool ok = *doc.order == G.order();
    record("order", ok, ok ? "match" : "mismatch", json(G.order()), seconds_since(t0));
  }
  if (doc.isotype && v.kind != VerdictKind::not_nilpotent) {
    t0 = std::chrono::steady_clock::now();
    try {
      const IsoType t = recognize_isotype(G);
      const bool ok = t == *doc.isotype;
      record("isotype", ok, ok ? "match" : "mismatch", isotype_to_json(t), seconds_since(t0));
    } catch (const NotInFamily& e) {
      record("isotype", false, "not_in_family", json(e.what()), seconds_since(t0));
    }
  }

  t0 = std::chrono::steady_clock::now();
  const SweepResult sw = irreducibility_sweep(G, SweepMode::lines, caps.sweep);
  record("irreducible", sw.irreducible, sw.irreducible ? "irreducible" : "reducible",
         sw.witness ? std::optional<json>(vec_to_string(G.field(), *sw.witness)) : std::nullopt, seconds_since(t0));

  if (sw.irreducible && G.order() <= caps.group) {
    t0 = std::chrono::steady_clock::now();
    const auto systems = find_block_systems(G, caps.group, caps.sweep);
    std::optional<json> witness;
    if (!systems.empty()) {
      json comps = json::array();
      for (const auto& U : systems.front().components) {
        json rows = json::array();
        for (const auto& r : U.basis) rows.push_back(vec_to_string(G.field(), r));
        comps.push_back(std::move(rows));
      }
      witness = std::move(comps);
    }
    record("block_systems", systems.empty(), systems.empty() ? "none" : std::to_string(systems.size()) + " found",
           std::move(witness), seconds_since(t0));
  }

  json report{{"schema", kSchemaVersion}, {"file", path}, {"checks", std::move(checks)},
              {"verdict", pass ? "pass" : "fail"}};
  std::cout << report.dump(2) << "\n";
  return pass ? kPass : kFail;
}

int cmd_count(int n, std::uint64_t q, bool as_json) {
  const auto c = count_nonabelian_classes(n, q);
  if (as_json) std::cout << json{{"n", n}, {"q", q}, {"nonabelian", c}}.dump() << "\n";
  else std::cout << c << "\n";
  return kPass;
}

int cmd_oracle(const std::string& check, const std::string& path, const std::string& other, const Caps& caps,
               bool serial) {
  const GroupDocument doc = load_group(path);
  const MatrixGroup& G = doc.group;
  const auto t0 = std::chrono::steady_clock::now();
  json report;
  bool pass = true;
  if (check == "irreducible") {
    const auto sw = irreducibility_sweep(G, SweepMode::lines, caps.sweep);
    pass = sw.irreducible;
    report = oracle_report(check, pass ? "irreducible" : "reducible",
                           sw.witness ? std::optional<json>(vec_to_string(G.field(), *sw.witness)) : std::nullopt,
                           seconds_since(t0));
  } else if (check == "blocks") {
    const auto systems = find_block_systems(G, caps.group, caps.sweep);
    pass = systems.empty();
    json w = json::array();
    for (const auto& sys : systems) {
      json comps = json::array();
      for (const auto& U : sys.components) {
        json rows = json::array();
        for (const auto& r : U.basis) rows.push_back(vec_to_string(G.field(), r));
        comps.push_back(std::move(rows));
      }
      w.push_back(std::move(comps));
    }
    report = oracle_report(check, pass ? "primitive" : "imprimitive",
                           systems.empty() ? std::nullopt : std::optional<json>(std::move(w)), seconds_since(t0));
  } else if (check == "absolute") {
    pass = is_absolutely_irreducible(G);
    report = oracle_report(check, pass ? "absolutely_irreducible" : "not_absolutely_irreducible",
                           json(enveloping_dimension(G)), seconds_since(t0));
  } else if (check == "centralizer") {
    report = oracle_report(check, std::to_string(centralizer_dimension(G)), std::nullopt, seconds_since(t0));
  } else if (check == "conjugate") {
    if (other.empty()) throw InvalidArgument("conjugate needs a second group file");
    const GroupDocument doc2 = load_group(other);
    ConjugacyOptions o;
    o.node_budget = caps.nodes;
    o.parallel = !serial;
    const auto X = conjugacy_search(G, doc2.group, o);
    pass = X.has_value();
    report = oracle_report(check, pass ? "conjugate" : "not_conjugate",
                           X ? std::optional<json>(to_string(*X)) : std::nullopt, seconds_since(t0));
  } else {
    throw InvalidArgument("unknown check '" + check + "'");
  }
  std::cout << report.dump(2) << "\n";
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent primitive subgroups of GL(n, q)"};
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps;
  app.add_option("--sweep-cap", caps.sweep, "Maximum vectors per irreducibility sweep");
  app.add_option("--group-cap", caps.group, "Maximum group order for subgroup-lattice oracles");
  app.add_option("--node-budget", caps.nodes, "Maximum nodes in a conjugacy search");

  int n = 0;
  std::uint64_t q = 0;
  bool nonabelian_only = false, certify = false, as_json = false, as_table = false;
  int jobs = 0;
  auto* en = app.add_subcommand("enumerate", "List the conjugacy classes of nilpotent primitive subgroups");
  en->add_option("--n", n)->required();
  en->add_option("--q", q)->required();
  en->add_flag("--nonabelian-only", nonabelian_only);
  en->add_flag("--certify", certify, "Attach oracle certificates");
  auto* fj = en->add_flag("--json", as_json);
  en->add_flag("--table", as_table)->excludes(fj);
  en->add_option("--jobs", jobs, "Threads for candidate evaluation");

  std::string kind = "q8";
  int s = 0;
  std::uint64_t c = 1;
  bool blowup = false;
  auto* co = app.add_subcommand("construct", "Build one group and print it as JSON");
  co->add_option("--n", n)->required();
  co->add_option("--q", q)->required();
  co->add_option("--kind", kind, "q8, gq, dh, sd or cyclic");
  co->add_option("--s", s, "log2 of the Sylow 2-subgroup order");
  co->add_option("--c", c, "Order of the odd cyclic part (or of the whole group for cyclic)");
  co->add_flag("--blowup", blowup, "Build Q8 x C in degree 2m through the blow-up route");

  std::string file, other, check;
  bool serial = false;
  auto* ve = app.add_subcommand("verify", "Run the property battery on a group file");
  ve->add_option("file", file)->required();

  auto* cn = app.add_subcommand("count", "Number of nonabelian classes");
  cn->add_option("--n", n)->required();
  cn->add_option("--q", q)->required();
  cn->add_flag("--json", as_json);

  auto* orc = app.add_subcommand("oracle", "Run one brute-force check");
  orc->add_option("check", check, "irreducible, blocks, absolute, centralizer or conjugate")->required();
  orc->add_option("file", file)->required();
  orc->add_option("other", other);
  orc->add_flag("--serial", serial, "Use the serial conjugacy kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (jobs > 0) omp_set_num_threads(jobs);
    if (*en) return cmd_enumerate(n, q, nonabelian_only, certify, as_table, jobs, caps);
    if (*co) return cmd_construct(n, q, kind, s, c, blowup);
    if (*ve) return cmd_verify(file, caps);
    if (*cn) return cmd_count(n, q, as_json);
    if (*orc) return cmd_oracle(check, file, other, caps, serial);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotInFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
