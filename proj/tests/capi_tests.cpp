// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "tatlas/tatlas.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  tatlas_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("named groups, orders and degrees") {
  tatlas_group* g = nullptr;
  REQUIRE(tatlas_group_named("CnsPlus", 5, &g) == TATLAS_OK);
  uint64_t order = 0;
  CHECK(tatlas_group_order(g, &order) == TATLAS_OK);
  CHECK(order == 48);
  size_t count = 0;
  uint64_t buf[4] = {0, 0, 0, 0};
  CHECK(tatlas_group_degrees(g, 5, buf, 4, &count) == TATLAS_OK);
  CHECK(count == 1);
  CHECK(buf[0] == 24);
  CHECK(tatlas_group_degrees(g, 3, buf, 4, &count) == TATLAS_NON_DIVISOR);
  tatlas_group_free(g);
}

TEST_CASE("errors carry codes and messages") {
  tatlas_group* g = nullptr;
  CHECK(tatlas_group_named("G3", 5, &g) == TATLAS_SPEC_VIOLATION);
  CHECK(g == nullptr);
  CHECK(std::strstr(tatlas_last_error(), "1 mod 3") != nullptr);
  CHECK(tatlas_group_named("Nope", 5, &g) == TATLAS_PARSE_ERROR);
  CHECK(tatlas_group_named("GL2", 5, nullptr) == TATLAS_INVALID_ARGUMENT);
  const int64_t singular[] = {2, 0, 0, 1};
  CHECK(tatlas_group_from_generators(singular, 1, 4, &g) == TATLAS_NON_INVERTIBLE);
  CHECK(std::string(tatlas_status_name(TATLAS_SIZE_CAP_EXCEEDED)).size() > 0);
  // A success clears the message.
  REQUIRE(tatlas_group_named("GL2", 3, &g) == TATLAS_OK);
  CHECK(std::string(tatlas_last_error()).empty());
  tatlas_group_free(g);
}

TEST_CASE("group files round-trip through the C surface") {
  tatlas_group* g = nullptr;
  REQUIRE(tatlas_group_named("G00", 7, &g) == TATLAS_OK);
  char* s = nullptr;
  REQUIRE(tatlas_group_file(g, &s) == TATLAS_OK);
  const std::string a = take(s);
  tatlas_group_free(g);
  REQUIRE(tatlas_group_from_json(a.c_str(), &g) == TATLAS_OK);
  REQUIRE(tatlas_group_file(g, &s) == TATLAS_OK);
  CHECK(take(s) == a);
  uint64_t order = 0;
  tatlas_group_order(g, &order);
  CHECK(order == 84);
  tatlas_group_free(g);
  CHECK(tatlas_group_from_json("{\"modulus\": 5}", &g) == TATLAS_PARSE_ERROR);
}

TEST_CASE("lifted groups") {
  tatlas_group* g = nullptr;
  REQUIRE(tatlas_group_named_lifted("BorelFixLine", 3, 9, &g) == TATLAS_OK);
  uint64_t order = 0;
  tatlas_group_order(g, &order);
  CHECK(order == 6 * 81);
  tatlas_group_free(g);
  CHECK(tatlas_group_named_lifted("BorelFixLine", 3, 27, &g) == TATLAS_INVALID_ARGUMENT);
}

TEST_CASE("tables, scans and densities") {
  char* s = nullptr;
  REQUIRE(tatlas_degrees_emit(37, 0, "csv", &s) == TATLAS_OK);
  CHECK(take(s).find("37,1296,true,false") != std::string::npos);
  REQUIRE(tatlas_rqd_emit(100, "star", 0, "csv", &s) == TATLAS_OK);
  CHECK(take(s).find("81,163,") != std::string::npos);
  CHECK(tatlas_rqd_emit(10, "bogus", 0, "csv", &s) == TATLAS_PARSE_ERROR);
  CHECK(tatlas_degrees_emit(15, 0, "json", &s) == TATLAS_NON_PRIME_MODULUS);
  uint64_t v = 0;
  CHECK(tatlas_scan_bad_prime(&v) == TATLAS_OK);
  CHECK(v == 3167);
  CHECK(tatlas_scan_ambiguous_degree(&v) == TATLAS_OK);
  CHECK(v == 3343296);
  int64_t num = 0, den = 0;
  CHECK(tatlas_density_exceptional(&num, &den) == TATLAS_OK);
  CHECK((num == 1 && den == 1536));
  CHECK(tatlas_density_no_growth(&num, &den) == TATLAS_OK);
  CHECK((num == 8 && den == 35));
  int m = -1;
  CHECK(tatlas_rq_membership(3167, 3343296, &m) == TATLAS_OK);
  CHECK(m == TATLAS_CONDITIONAL);
  CHECK(tatlas_rq_membership(11, 7, &m) == TATLAS_OK);
  CHECK(m == TATLAS_NON_MEMBER);
}

TEST_CASE("checks, census and lifts") {
  CHECK(tatlas_check_count() == 7);
  CHECK(tatlas_check_name(7) == nullptr);
  int passed = 0;
  char* ev = nullptr;
  REQUIRE(tatlas_check_run("gl2f3-s4", nullptr, &passed, &ev) == TATLAS_OK);
  CHECK(passed == 1);
  CHECK(take(ev).find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(tatlas_check_run("unknown", nullptr, &passed, nullptr) == TATLAS_INVALID_ARGUMENT);
  char* s = nullptr;
  REQUIRE(tatlas_census_emit("GL2", 3, 0, "json", &s) == TATLAS_OK);
  CHECK(take(s).find("\"class_count\": 16") != std::string::npos);
  CHECK(tatlas_census_emit("GL2", 7, 0, "json", &s) == TATLAS_NOT_SOLVABLE_AND_TOO_LARGE);
  REQUIRE(tatlas_lift_emit("Cs", 3, 9, 4, "json", &s) == TATLAS_OK);
  CHECK(take(s).find("\"witness_count\"") != std::string::npos);
}
