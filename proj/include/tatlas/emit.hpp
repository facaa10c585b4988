#pragma once

// Serialization: group files, and JSON / CSV / markdown projections of the
// degree, R_Q, census, lift and check results. JSON is canonical.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "tatlas/census.hpp"
#include "tatlas/degrees.hpp"
#include "tatlas/repro.hpp"
#include "tatlas/rqd.hpp"

namespace tatlas {

enum class Format { Json, Csv, Markdown };

/// "json", "csv", "markdown" (or "md"); throws kParseError.
Format parse_format(std::string_view text);
/// "r", "star", "s", "sstar"; throws kParseError.
RQView parse_rq_view(std::string_view text);

/// {"modulus": m, "generators": [[a,b,c,d], ...]}
struct GroupFile {
  Modulus modulus = 1;
  std::vector<Mat2> generators;
};

/// Throws kParseError on malformed JSON or schema, kNonInvertible for a
/// singular generator.
GroupFile parse_group_file(std::string_view text);
/// Compact, one line, trailing newline; parse then emit reproduces it.
std::string emit_group_file(const GroupFile& file);

std::string rational_string(const boost::rational<std::int64_t>& r);

struct GroupEmission {
  std::string label;
  const MatGroup* group = nullptr;
  bool orbits = false;
};
std::string emit_group(const GroupEmission& g, Format f);

std::string emit_degrees(const DegreeReport& report, Format f);

/// Star views list only nonempty rows; markdown then closes with an
/// "other d" row. With assume_conjecture the conditional column is empty.
std::string emit_rqd(const std::vector<RQRow>& rows, RQView view, bool assume_conjecture, Format f);

std::string emit_census(const std::string& ambient, const std::vector<SubgroupClass>& classes, Format f);

struct LiftWitness {
  std::size_t class_index = 0;
  Vec2 v;
  bool normal = false;
  std::string quotient;
};
struct LiftEmission {
  std::string base;
  Modulus target = 1;
  const std::vector<SubgroupClass>* classes = nullptr;
  std::optional<std::uint64_t> orbit_index;
  std::vector<LiftWitness> witnesses;
};
std::string emit_lifts(const LiftEmission& e, Format f);

std::string emit_check(const ReproResult& r);

}  // namespace tatlas
