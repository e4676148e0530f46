#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "nilprim/classify.hpp"
#include "nilprim/construct.hpp"
#include "nilprim/serialize.hpp"

using namespace nilprim;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NILPRIM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), k);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch_dir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("nilprim_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("enumerate") {
  const Run a = run("enumerate --n 2 --q 3 --nonabelian-only");
  REQUIRE(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["classes"].size() == 2);
  CHECK(j["counts"]["nonabelian"] == 2);

  const Run b = run("enumerate --n 3 --q 3 --nonabelian-only --json");
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["classes"].empty());

  const Run c = run("enumerate --n 6 --q 3 --certify");
  REQUIRE(c.code == 0);
  const json census = json::parse(c.out);
  for (const auto& rec : census["classes"]) {
    REQUIRE(rec.contains("oracle"));
    CHECK(rec["oracle"]["irreducible"] == true);
    CHECK(rec["oracle"]["block_systems"] == 0);
  }

  const Run t = run("enumerate --n 2 --q 7 --table");
  CHECK(t.code == 0);
  CHECK(t.out.find("SD32 x C3") != std::string::npos);
}

TEST_CASE("enumerate errors") {
  CHECK(run("enumerate --n 2 --q 9 --json --table").code == 2);
  CHECK(run("enumerate --n 2 --q 4").code == 2);
  CHECK(run("enumerate --n 1 --q 3").code == 2);
  CHECK(run("enumerate --q 3").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("enumerate --n 6 --q 3 --sweep-cap 10").code == 3);
}

TEST_CASE("construct") {
  const Run a = run("construct --n 2 --q 3 --kind sd --s 4");
  REQUIRE(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["order"] == 16);
  CHECK(j["isotype"]["name"] == "SD16");
  CHECK(j["case"] == "deg2");

  const Run b = run("construct --n 6 --q 3 --kind q8 --c 13");
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["order"] == 104);
  CHECK(json::parse(b.out)["generators"].size() == 3);

  CHECK(run("construct --n 4 --q 3 --kind q8 --c 5").code == 2);
  CHECK(run("construct --n 2 --q 7 --kind dh --s 3").code == 2);
  CHECK(run("construct --n 2 --q 5 --kind q8 --s 3").code == 2);
  CHECK(run("construct --n 2 --q 3 --kind zz").code == 2);
}

TEST_CASE("construct output is byte-stable") {
  for (const char* args : {"construct --n 6 --q 3 --kind q8 --c 13", "enumerate --n 6 --q 3", "enumerate --n 2 --q 11 --certify",
                           "count --n 2 --q 19 --json"}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("round trip: construct then verify for every admissible tuple") {
  for (auto [n, q] : {std::pair{2, 3u}, {2, 7u}, {2, 11u}, {6, 3u}}) {
    EnumerateOptions o;
    for (const auto& r : enumerate_classes(n, q, o)) {
      std::string args = "construct --n " + std::to_string(n) + " --q " + std::to_string(q);
      const IsoType& t = r.isotype;
      if (r.case_tag == CaseTag::abelian) {
        args += " --kind cyclic --c " + std::to_string(r.order);
      } else {
        const int s = std::countr_zero(t.sylow2_order);
        args += " --kind " + std::string(to_string(t.sylow2_kind)) + " --s " + std::to_string(s) + " --c " +
                std::to_string(t.odd_order);
      }
      CAPTURE(args);
      const Run c = run(args);
      REQUIRE(c.code == 0);
      const json doc = json::parse(c.out);
      CHECK(doc["isotype"]["name"] == describe(t));
      const auto path = write_file("rt.json", c.out);
      const Run v = run("verify " + path);
      CHECK(v.code == 0);
      CHECK(json::parse(v.out)["verdict"] == "pass");
    }
  }
}

TEST_CASE("verify failures") {
  auto F = make_field(3, 1);
  const MatrixGroup D8({Matrix::from_ints(F, {{0, 1}, {-1, 0}}), Matrix::from_ints(F, {{1, 0}, {0, -1}})});
  const Run d = run("verify " + write_file("d8.json", group_to_json(D8, std::nullopt, std::nullopt).dump()));
  CHECK(d.code == 1);
  const json report = json::parse(d.out);
  CHECK(report["verdict"] == "fail");
  CHECK(report["checks"][0]["verdict"] == "imprimitive");

  json tampered = group_to_json(D8, std::nullopt, std::nullopt);
  tampered["generators"][0] = "1,1;1,1";
  CHECK(run("verify " + write_file("bad.json", tampered.dump())).code == 2);

  json wrong_order = group_to_json(nilprim_gl2(F, Sylow2Kind::quaternion8, 3, 1), CaseTag::deg2, std::nullopt);
  wrong_order["order"] = 16;
  CHECK(run("verify " + write_file("order.json", wrong_order.dump())).code == 1);

  CHECK(run("verify " + write_file("junk.json", "{not json")).code == 2);
  CHECK(run("verify " + (scratch_dir() / "missing.json").string()).code == 2);
  json schema = group_to_json(D8, std::nullopt, std::nullopt);
  schema["schema"] = 7;
  CHECK(run("verify " + write_file("schema.json", schema.dump())).code == 2);
}

TEST_CASE("count") {
  const Run a = run("count --n 2 --q 7");
  CHECK(a.code == 0);
  CHECK(a.out == "8\n");
  CHECK(run("count --n 6 --q 3").out == "2\n");
  CHECK(run("count --n 4 --q 3").out == "0\n");
  CHECK(run("count --n 2 --q 8").code == 2);
}

TEST_CASE("oracle subcommand") {
  const auto a = write_file("q8c.json", run("construct --n 6 --q 3 --kind q8 --c 13").out);
  const auto b = write_file("q8b.json", run("construct --n 6 --q 3 --kind q8 --s 3 --c 13 --blowup").out);
  const Run conj = run("oracle conjugate " + a + " " + b);
  CHECK(conj.code == 0);
  CHECK(json::parse(conj.out)["verdict"] == "conjugate");
  const Run serial = run("oracle conjugate " + a + " " + b + " --serial");
  CHECK(json::parse(serial.out)["witness"] == json::parse(conj.out)["witness"]);
  CHECK(run("oracle irreducible " + a).code == 0);
  CHECK(run("oracle blocks " + a).code == 0);
  CHECK(run("oracle absolute " + a).code == 1);
  const Run cent = run("oracle centralizer " + a);
  CHECK(json::parse(cent.out)["verdict"] == "3");
  CHECK(run("oracle conjugate " + a).code == 2);
  CHECK(run("oracle nonsense " + a).code == 2);
  const auto sd = write_file("sd.json", run("construct --n 6 --q 3 --kind sd --s 4 --c 13").out);
  CHECK(run("oracle conjugate " + a + " " + sd).code == 1);
}
