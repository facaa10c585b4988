#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "tatlas/error.hpp"
#include "tatlas/repro.hpp"

using namespace tatlas;

TEST_CASE("GL2(F3) check") {
  const auto r = check_gl2f3_s4();
  CHECK(r.pass);
  CHECK(r.evidence["s4_subgroup_classes"] == 0);
  CHECK(r.evidence["central_quotient"] == "S4");
  CHECK(r.evidence["orbit_of_e1"] == 8);
}

TEST_CASE("applicability census") {
  const auto r = check_prop13_census();
  CHECK(r.pass);
  CHECK(r.evidence["applicable_count"] == 18);
  CHECK(r.evidence["excluded_count"] == 15);
  CHECK(r.evidence["survivor_count"] == 3);
}

TEST_CASE("index divisibility for odd p") {
  const auto r3 = check_index_divisibility(3, 1);
  CHECK(r3.pass);
  for (auto i : r3.evidence["indices"]) {
    const auto v = i.get<std::uint64_t>();
    CHECK((9 % v == 0 || 6 % v == 0));
  }
  CHECK(check_index_divisibility(5, 1).pass);
  CHECK_THROWS_AS(check_index_divisibility(2, 7), AtlasError);
  CHECK_THROWS_AS(check_index_divisibility(4, 1), AtlasError);
}

TEST_CASE("index divisibility at p = 2: indices divide 4, a cyclic quartic closure appears") {
  for (std::uint64_t n : {1, 2}) {
    const auto r = check_index_divisibility(2, n);
    CHECK(r.evidence["indices_divide"] == true);
    bool has_c4 = false;
    for (const auto& t : r.evidence["galois_closure_types"]) has_c4 = has_c4 || t == "C4";
    CHECK(has_c4);
    CHECK_FALSE(r.pass);
  }
}

TEST_CASE("quotient obstructions and tables") {
  const auto q = check_quotient_obstructions();
  CHECK(q.pass);
  CHECK(q.evidence["S4_quotient_of_subgroup_of_CnsPlus(5)"] == false);
  CHECK(check_tables_1_2().pass);
}

TEST_CASE("registry and result files") {
  CHECK(check_names().size() == 7);
  CHECK_THROWS_AS(run_check("nope"), AtlasError);
  const auto dir = std::filesystem::temp_directory_path() / "tatlas_unit_results";
  std::filesystem::remove_all(dir);
  const auto r = run_check("gl2f3-s4");
  write_result(r, dir.string());
  std::ifstream in(dir / "gl2f3-s4.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j["verdict"] == "pass");
  CHECK(j["check"] == "gl2f3-s4");
  // Deterministic evidence.
  CHECK(run_check("gl2f3-s4").evidence == r.evidence);
}
