#include "tatlas/tatlas.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "tatlas/catalog.hpp"
#include "tatlas/census.hpp"
#include "tatlas/degrees.hpp"
#include "tatlas/emit.hpp"
#include "tatlas/error.hpp"
#include "tatlas/isotype.hpp"
#include "tatlas/lifts.hpp"
#include "tatlas/repro.hpp"
#include "tatlas/rqd.hpp"

struct tatlas_group {
  tatlas::MatGroup group;
  std::string label;
};

namespace {

thread_local std::string last_error;

// Runs f, mapping exceptions onto status codes.
template <class F>
int guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return TATLAS_OK;
  } catch (const tatlas::AtlasError& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TATLAS_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TATLAS_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) tatlas::fail(tatlas::ErrorCode::kInvalidArgument, what);
}

tatlas::NamedGroupSpec spec_of(const char* name, uint64_t p) {
  require(name != nullptr, "name is null");
  tatlas::NamedGroupSpec spec{tatlas::parse_group_name(name), p, {}};
  tatlas::validate(spec);
  return spec;
}

tatlas::Format format_of(const char* f) {
  require(f != nullptr, "format is null");
  return tatlas::parse_format(f);
}

}  // namespace

extern "C" {

const char* tatlas_last_error(void) { return last_error.c_str(); }

const char* tatlas_status_name(int status) {
  if (status == TATLAS_OK) return "ok";
  return tatlas::error_code_name(static_cast<tatlas::ErrorCode>(status));
}

void tatlas_string_free(char* s) { std::free(s); }

// ------------------------------------------------------------ groups

int tatlas_group_named(const char* name, uint64_t p, tatlas_group** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto spec = spec_of(name, p);
    *out = new tatlas_group{tatlas::build_named(spec), spec.label()};
  });
}

int tatlas_group_named_lifted(const char* name, uint64_t p, uint32_t modulus, tatlas_group** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto spec = spec_of(name, p);
    tatlas::MatGroup H = tatlas::build_named(spec);
    if (modulus == p) {
      *out = new tatlas_group{std::move(H), spec.label()};
      return;
    }
    if (modulus != p * p) tatlas::fail(tatlas::ErrorCode::kInvalidArgument, "modulus must be p or p^2");
    *out = new tatlas_group{tatlas::full_preimage(H, modulus), spec.label() + " mod " + std::to_string(modulus)};
  });
}

int tatlas_group_from_generators(const int64_t* entries, size_t count, uint32_t modulus, tatlas_group** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(entries != nullptr || count == 0, "entries is null");
    require(modulus >= 1 && modulus <= tatlas::kMaxMatrixModulus, "modulus out of range");
    std::vector<tatlas::Mat2> gens;
    for (size_t i = 0; i < count; ++i) {
      const int64_t* e = entries + 4 * i;
      gens.emplace_back(e[0], e[1], e[2], e[3], modulus);
    }
    *out = new tatlas_group{tatlas::MatGroup::closure(gens, modulus), "custom"};
  });
}

int tatlas_group_from_json(const char* group_file, tatlas_group** out) {
  return guarded([&] {
    require(out != nullptr && group_file != nullptr, "null argument");
    const auto file = tatlas::parse_group_file(group_file);
    tatlas::MatGroup G = tatlas::MatGroup::closure(file.generators, file.modulus);
    // Keep the supplied generators so the group file round-trips.
    G = tatlas::MatGroup::from_elements(G.elements(), file.generators, file.modulus);
    *out = new tatlas_group{std::move(G), "ingested"};
  });
}

void tatlas_group_free(tatlas_group* g) { delete g; }

int tatlas_group_order(const tatlas_group* g, uint64_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = g->group.order();
  });
}

int tatlas_group_modulus(const tatlas_group* g, uint32_t* out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = g->group.modulus();
  });
}

int tatlas_group_degrees(const tatlas_group* g, uint64_t n, uint64_t* buf, size_t cap, size_t* count) {
  return guarded([&] {
    require(g && count, "null argument");
    const auto d = tatlas::degrees_for_group(g->group, n);
    *count = d.size();
    for (size_t i = 0; buf && i < d.size() && i < cap; ++i) buf[i] = d[i];
  });
}

int tatlas_group_emit(const tatlas_group* g, const char* format, int orbits, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(tatlas::emit_group({g->label, &g->group, orbits != 0}, format_of(format)));
  });
}

int tatlas_group_file(const tatlas_group* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_out(tatlas::emit_group_file({g->group.modulus(), g->group.generators()}));
  });
}

// ------------------------------------------------------------ degrees and R_Q

int tatlas_degrees_emit(uint64_t p, int assume_conjecture, const char* format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto f = format_of(format);
    *out = copy_out(tatlas::emit_degrees(tatlas::degrees_for_prime(p, assume_conjecture != 0), f));
  });
}

int tatlas_rq_membership(uint64_t p, uint64_t d, int* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    switch (tatlas::rq_membership(p, d)) {
      case tatlas::Membership3::Member: *out = TATLAS_MEMBER; break;
      case tatlas::Membership3::NonMember: *out = TATLAS_NON_MEMBER; break;
      case tatlas::Membership3::ConditionalOnConjecture: *out = TATLAS_CONDITIONAL; break;
    }
  });
}

int tatlas_rqd_emit(uint64_t max_d, const char* view, int assume_conjecture, const char* format, char** out) {
  return guarded([&] {
    require(out && view, "null argument");
    require(max_d >= 1, "max_d must be positive");
    const auto v = tatlas::parse_rq_view(view);
    const auto f = format_of(format);
    *out = copy_out(tatlas::emit_rqd(tatlas::rq_table(max_d, v), v, assume_conjecture != 0, f));
  });
}

int tatlas_scan_bad_prime(uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = tatlas::scan_smallest_exceptional_prime();
  });
}

int tatlas_scan_ambiguous_degree(uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = tatlas::first_ambiguous_degree();
  });
}

int tatlas_density_exceptional(int64_t* num, int64_t* den) {
  return guarded([&] {
    require(num && den, "null argument");
    const auto r = tatlas::exceptional_prime_density();
    *num = r.numerator();
    *den = r.denominator();
  });
}

int tatlas_density_no_growth(int64_t* num, int64_t* den) {
  return guarded([&] {
    require(num && den, "null argument");
    const auto r = tatlas::no_growth_density();
    *num = r.numerator();
    *den = r.denominator();
  });
}

// ------------------------------------------------------------ checks

size_t tatlas_check_count(void) { return tatlas::check_names().size(); }

const char* tatlas_check_name(size_t index) {
  const auto& names = tatlas::check_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int tatlas_check_run(const char* name, const char* results_dir, int* passed, char** evidence) {
  return guarded([&] {
    require(name && passed, "null argument");
    const auto r = tatlas::run_check(name);
    if (results_dir) tatlas::write_result(r, results_dir);
    *passed = r.pass ? 1 : 0;
    if (evidence) *evidence = copy_out(tatlas::emit_check(r));
  });
}

// ------------------------------------------------------------ census and lifts

int tatlas_census_emit(const char* ambient, uint64_t p, int applicable_only, const char* format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto spec = spec_of(ambient, p);
    const auto f = format_of(format);
    auto classes = tatlas::subgroups_up_to_conjugacy(tatlas::build_named(spec));
    if (applicable_only) {
      std::erase_if(classes, [](const tatlas::SubgroupClass& c) { return !tatlas::is_applicable(c.representative); });
    }
    *out = copy_out(tatlas::emit_census(spec.label(), classes, f));
  });
}

int tatlas_lift_emit(const char* base, uint64_t p, uint32_t target_modulus, int64_t orbit_index,
                     const char* format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    const auto spec = spec_of(base, p);
    const auto f = format_of(format);
    const auto classes = tatlas::enumerate_lifts(tatlas::build_named(spec), target_modulus);
    tatlas::LiftEmission e{spec.label(), target_modulus, &classes, {}, {}};
    if (orbit_index >= 0) {
      e.orbit_index = static_cast<std::uint64_t>(orbit_index);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& G = classes[i].representative;
        for (const auto& o : tatlas::orbit_decomposition(G).orbits) {
          if (o.length != e.orbit_index || tatlas::additive_order(o.representative) != target_modulus) continue;
          const auto S = tatlas::stabilizer(G, o.representative);
          const bool normal = tatlas::is_normal(G, S);
          e.witnesses.push_back(
              {i, o.representative, normal, normal ? tatlas::quotient_iso_type(G, S).describe() : "not normal"});
        }
      }
    }
    *out = copy_out(tatlas::emit_lifts(e, f));
  });
}

}  // extern "C"
