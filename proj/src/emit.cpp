#include "tatlas/emit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tatlas/error.hpp"

namespace tatlas {

using ojson = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown" || text == "md") return Format::Markdown;
  fail(ErrorCode::kParseError, "unknown format '" + std::string(text) + "' (json, csv, markdown)");
}

RQView parse_rq_view(std::string_view text) {
  if (text == "r") return RQView::R;
  if (text == "star") return RQView::RStar;
  if (text == "s") return RQView::S;
  if (text == "sstar") return RQView::SStar;
  fail(ErrorCode::kParseError, "unknown view '" + std::string(text) + "' (r, star, s, sstar)");
}

// ------------------------------------------------------------ group files

GroupFile parse_group_file(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kParseError, std::string("group file: ") + e.what());
  }
  if (!j.is_object() || j.size() != 2 || !j.contains("modulus") || !j.contains("generators")) {
    fail(ErrorCode::kParseError, "group file must be an object with exactly 'modulus' and 'generators'");
  }
  const auto& jm = j["modulus"];
  if (!jm.is_number_integer() || jm.get<std::int64_t>() < 1 || jm.get<std::int64_t>() > kMaxMatrixModulus) {
    fail(ErrorCode::kParseError, "'modulus' must be an integer in [1, 65535]");
  }
  GroupFile out;
  out.modulus = static_cast<Modulus>(jm.get<std::int64_t>());
  const auto& jg = j["generators"];
  if (!jg.is_array()) fail(ErrorCode::kParseError, "'generators' must be an array");
  for (const auto& g : jg) {
    if (!g.is_array() || g.size() != 4 ||
        !std::all_of(g.begin(), g.end(), [](const ojson& x) { return x.is_number_integer(); })) {
      fail(ErrorCode::kParseError, "each generator must be 4 integers, row-major");
    }
    const Mat2 A(g[0].get<std::int64_t>(), g[1].get<std::int64_t>(), g[2].get<std::int64_t>(),
                 g[3].get<std::int64_t>(), out.modulus);
    if (!is_invertible(A)) fail(ErrorCode::kNonInvertible, "generator " + to_string(A) + " is not invertible");
    out.generators.push_back(A);
  }
  return out;
}

std::string emit_group_file(const GroupFile& file) {
  ojson j;
  j["modulus"] = file.modulus;
  j["generators"] = ojson::array();
  for (const auto& A : file.generators) j["generators"].push_back({A.a(), A.b(), A.c(), A.d()});
  return j.dump() + "\n";
}

std::string rational_string(const boost::rational<std::int64_t>& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ------------------------------------------------------------ helpers

namespace {

ojson matrix_json(const Mat2& A) { return ojson::array({A.a(), A.b(), A.c(), A.d()}); }

std::string join(const std::vector<std::uint64_t>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

template <class T>
std::string join_any(const std::vector<T>& v, std::string_view sep) {
  std::vector<std::uint64_t> w(v.begin(), v.end());
  return join(w, sep);
}

std::string matrix_text(const Mat2& A) {
  return "[[" + std::to_string(A.a()) + "," + std::to_string(A.b()) + "],[" + std::to_string(A.c()) + "," +
         std::to_string(A.d()) + "]]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

// ------------------------------------------------------------ groups

std::string emit_group(const GroupEmission& g, Format f) {
  const MatGroup& G = *g.group;
  OrbitDecomposition d;
  std::vector<std::uint64_t> distinct;
  if (g.orbits) {
    d = orbit_decomposition(G);
    std::set<std::uint64_t> s;
    for (const auto& o : d.orbits) s.insert(o.length);
    distinct.assign(s.begin(), s.end());
  }
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      ojson j;
      j["label"] = g.label;
      j["modulus"] = G.modulus();
      j["order"] = G.order();
      j["generators"] = ojson::array();
      for (const auto& A : G.generators()) j["generators"].push_back(matrix_json(A));
      if (g.orbits) {
        j["orbit_lengths"] = distinct;
        j["orbits"] = ojson::array();
        for (const auto& o : d.orbits) {
          j["orbits"].push_back({{"representative", {o.representative.x, o.representative.y}},
                                 {"additive_order", additive_order(o.representative)},
                                 {"length", o.length}});
        }
      }
      return dump(j);
    }
    case Format::Csv:
      if (g.orbits) {
        os << "x,y,additive_order,length\n";
        for (const auto& o : d.orbits) {
          os << o.representative.x << "," << o.representative.y << "," << additive_order(o.representative)
             << "," << o.length << "\n";
        }
      } else {
        os << "a,b,c,d\n";
        for (const auto& A : G.generators()) os << A.a() << "," << A.b() << "," << A.c() << "," << A.d() << "\n";
      }
      return os.str();
    case Format::Markdown:
      os << "### " << g.label << "\n\n";
      os << "- modulus: " << G.modulus() << "\n- order: " << G.order() << "\n- generators:";
      for (const auto& A : G.generators()) os << " `" << matrix_text(A) << "`";
      os << "\n";
      if (g.orbits) {
        os << "- orbit lengths: " << join(distinct, ",") << "\n\n";
        os << "| representative | additive order | length |\n|---|---|---|\n";
        for (const auto& o : d.orbits) {
          os << "| (" << o.representative.x << "," << o.representative.y << ") | "
             << additive_order(o.representative) << " | " << o.length << " |\n";
        }
      }
      return os.str();
  }
  return {};
}

// ------------------------------------------------------------ degrees

std::string emit_degrees(const DegreeReport& report, Format f) {
  std::ostringstream os;
  // Compact line in the usual style: * marks CM-only, ? marks conditional.
  std::string compact;
  for (const auto& e : report.entries) {
    if (!compact.empty()) compact += ",";
    compact += std::to_string(e.degree);
    if (e.cm_only) compact += "*";
    if (e.conditional) compact += "?";
  }
  switch (f) {
    case Format::Json: {
      ojson j;
      j["prime"] = report.p;
      j["assume_conjecture"] = report.assume_conjecture;
      j["summary"] = compact;
      j["entries"] = ojson::array();
      for (const auto& e : report.entries) {
        ojson x{{"degree", e.degree}, {"cm_only", e.cm_only}, {"conditional", e.conditional},
                {"witnesses", e.witnesses}};
        if (!e.note.empty()) x["note"] = e.note;
        j["entries"].push_back(std::move(x));
      }
      const MinimalDivisorSet s = minimal_divisor_set(report.p, report.assume_conjecture);
      j["minimal_divisor_set"] = {{"elements", s.elements}, {"conditional_elements", s.conditional_elements}};
      return dump(j);
    }
    case Format::Csv:
      os << "prime,degree,cm_only,conditional\n";
      for (const auto& e : report.entries) {
        os << report.p << "," << e.degree << "," << bool_text(e.cm_only) << "," << bool_text(e.conditional) << "\n";
      }
      return os.str();
    case Format::Markdown:
      os << "### p = " << report.p << (report.assume_conjecture ? " (conjecture assumed)" : "") << "\n\n";
      os << "`" << compact << "`\n\n";
      os << "| degree | cm_only | conditional | note |\n|---|---|---|---|\n";
      for (const auto& e : report.entries) {
        os << "| " << e.degree << " | " << bool_text(e.cm_only) << " | " << bool_text(e.conditional) << " | "
           << e.note << " |\n";
      }
      return os.str();
  }
  return {};
}

// ------------------------------------------------------------ R_Q

std::string emit_rqd(const std::vector<RQRow>& rows, RQView view, bool assume_conjecture, Format f) {
  const bool star = view == RQView::RStar || view == RQView::SStar;
  std::vector<RQRow> shown;
  for (RQRow r : rows) {
    if (assume_conjecture) r.conditional.clear();
    if (star && r.members.empty() && r.conditional.empty()) continue;
    shown.push_back(std::move(r));
  }
  const char* name = view == RQView::R ? "R" : view == RQView::RStar ? "R*" : view == RQView::S ? "S" : "S*";
  const std::uint64_t max_d = rows.empty() ? 0 : rows.back().d;
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      ojson j;
      j["view"] = name;
      j["max_d"] = max_d;
      j["assume_conjecture"] = assume_conjecture;
      j["rows"] = ojson::array();
      for (const auto& r : shown) {
        j["rows"].push_back({{"d", r.d}, {"member_primes", r.members}, {"conditional_primes", r.conditional}});
      }
      return dump(j);
    }
    case Format::Csv:
      os << "d,member_primes,conditional_primes\n";
      for (const auto& r : shown) os << r.d << "," << join(r.members, ";") << "," << join(r.conditional, ";") << "\n";
      return os.str();
    case Format::Markdown:
      os << "| d | " << name << "_Q(d) | conditional |\n|---|---|---|\n";
      for (const auto& r : shown) {
        os << "| " << r.d << " | " << join(r.members, ",") << " | " << join(r.conditional, ",") << " |\n";
      }
      if (star) os << "| other d <= " << max_d << " | (empty) | |\n";
      return os.str();
  }
  return {};
}

// ------------------------------------------------------------ census

std::string emit_census(const std::string& ambient, const std::vector<SubgroupClass>& classes, Format f) {
  std::vector<SubgroupFingerprint> fps;
  for (const auto& c : classes) {
    fps.push_back(c.fingerprint.order == c.representative.order() ? c.fingerprint
                                                                   : fingerprint_of(c.representative));
  }
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      ojson j;
      j["ambient"] = ambient;
      j["class_count"] = classes.size();
      j["classes"] = ojson::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& fp = fps[i];
        ojson x{{"order", fp.order},
                {"class_size", classes[i].class_size},
                {"dv", fp.nonzero_orbit_lengths()},
                {"det_image", fp.det_image}};
        if (fp.stable_lines) x["stable_lines"] = *fp.stable_lines;
        x["generators"] = ojson::array();
        for (const auto& A : classes[i].representative.generators()) x["generators"].push_back(matrix_json(A));
        j["classes"].push_back(std::move(x));
      }
      return dump(j);
    }
    case Format::Csv:
      os << "index,order,class_size,dv,det_image,stable_lines\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& fp = fps[i];
        os << i << "," << fp.order << "," << classes[i].class_size << "," << join_any(fp.nonzero_orbit_lengths(), ";")
           << "," << fp.det_image << "," << (fp.stable_lines ? std::to_string(*fp.stable_lines) : "") << "\n";
      }
      return os.str();
    case Format::Markdown:
      os << "### " << ambient << ": " << classes.size() << " classes\n\n";
      os << "| # | order | class size | d_v | det image | stable lines |\n|---|---|---|---|---|---|\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& fp = fps[i];
        os << "| " << i << " | " << fp.order << " | " << classes[i].class_size << " | "
           << join_any(fp.nonzero_orbit_lengths(), ",") << " | " << fp.det_image << " | "
           << (fp.stable_lines ? std::to_string(*fp.stable_lines) : "") << " |\n";
      }
      return os.str();
  }
  return {};
}

// ------------------------------------------------------------ lifts

std::string emit_lifts(const LiftEmission& e, Format f) {
  const auto& classes = *e.classes;
  std::vector<std::vector<std::uint64_t>> lengths;
  for (const auto& c : classes) lengths.push_back(degrees_for_group(c.representative, e.target));
  std::ostringstream os;
  switch (f) {
    case Format::Json: {
      ojson j;
      j["base"] = e.base;
      j["target_modulus"] = e.target;
      j["class_count"] = classes.size();
      j["classes"] = ojson::array();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        ojson x{{"order", classes[i].representative.order()},
                {"class_size", classes[i].class_size},
                {"orbit_lengths_full_order", lengths[i]}};
        x["generators"] = ojson::array();
        for (const auto& A : classes[i].representative.generators()) x["generators"].push_back(matrix_json(A));
        j["classes"].push_back(std::move(x));
      }
      if (e.orbit_index) {
        j["orbit_index"] = *e.orbit_index;
        j["witness_count"] = e.witnesses.size();
        j["witnesses"] = ojson::array();
        for (const auto& w : e.witnesses) {
          j["witnesses"].push_back(
              {{"class", w.class_index}, {"v", {w.v.x, w.v.y}}, {"normal", w.normal}, {"quotient", w.quotient}});
        }
      }
      return dump(j);
    }
    case Format::Csv:
      if (e.orbit_index) {
        os << "class,x,y,normal,quotient\n";
        for (const auto& w : e.witnesses) {
          os << w.class_index << "," << w.v.x << "," << w.v.y << "," << bool_text(w.normal) << "," << w.quotient << "\n";
        }
      } else {
        os << "index,order,class_size,orbit_lengths_full_order\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
          os << i << "," << classes[i].representative.order() << "," << classes[i].class_size << ","
             << join(lengths[i], ";") << "\n";
        }
      }
      return os.str();
    case Format::Markdown:
      os << "### lifts of " << e.base << " to modulus " << e.target << ": " << classes.size() << " classes\n\n";
      os << "| # | order | class size | orbit lengths (order " << e.target << ") |\n|---|---|---|---|\n";
      for (std::size_t i = 0; i < classes.size(); ++i) {
        os << "| " << i << " | " << classes[i].representative.order() << " | " << classes[i].class_size << " | "
           << join(lengths[i], ",") << " |\n";
      }
      if (e.orbit_index) {
        os << "\nwitnesses with orbit length " << *e.orbit_index << ": " << e.witnesses.size() << "\n\n";
        if (!e.witnesses.empty()) {
          os << "| class | v | normal | quotient |\n|---|---|---|---|\n";
          for (const auto& w : e.witnesses) {
            os << "| " << w.class_index << " | (" << w.v.x << "," << w.v.y << ") | " << bool_text(w.normal) << " | "
               << w.quotient << " |\n";
          }
        }
      }
      return os.str();
  }
  return {};
}

std::string emit_check(const ReproResult& r) {
  ojson j;
  j["check"] = r.name;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["evidence"] = r.evidence;
  return dump(j);
}

}  // namespace tatlas
