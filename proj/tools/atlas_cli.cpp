// atlas: command-line front end over the tatlas C interface.
//
// Exit codes: 0 ok, 1 failed check, 2 usage or invalid input, 3 size cap,
// 4 I/O or internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tatlas/tatlas.h"

namespace {

int exit_code_for(int status) {
  switch (status) {
    case TATLAS_OK: return 0;
    case TATLAS_SIZE_CAP_EXCEEDED:
    case TATLAS_NOT_SOLVABLE_AND_TOO_LARGE: return 3;
    case TATLAS_IO_ERROR:
    case TATLAS_INTERNAL: return 4;
    default: return 2;
  }
}

int report(int status) {
  if (status != TATLAS_OK) {
    std::cerr << "error (" << tatlas_status_name(status) << "): " << tatlas_last_error() << "\n";
  }
  return exit_code_for(status);
}

// Prints and frees a library string.
int print_owned(int status, char* s) {
  if (status == TATLAS_OK && s != nullptr) {
    std::fputs(s, stdout);
    tatlas_string_free(s);
  }
  return report(status);
}

struct GroupOut {
  std::string format = "json";
  bool orbits = false;
  bool emit_file = false;
};

int emit_group(tatlas_group* g, const GroupOut& o) {
  char* s = nullptr;
  const int st = o.emit_file ? tatlas_group_file(g, &s) : tatlas_group_emit(g, o.format.c_str(), o.orbits, &s);
  tatlas_group_free(g);
  return print_owned(st, s);
}

int run_checks(const std::string& which, const std::string& dir) {
  std::vector<std::string> names;
  if (which == "all") {
    for (size_t i = 0; i < tatlas_check_count(); ++i) names.emplace_back(tatlas_check_name(i));
  } else {
    names.push_back(which);
  }
  // Checks are independent; results are printed in registry order.
  std::vector<int> status(names.size()), passed(names.size());
  std::vector<std::string> errors(names.size());
  std::vector<std::thread> jobs;
  for (size_t i = 0; i < names.size(); ++i) {
    jobs.emplace_back([&, i] {
      status[i] = tatlas_check_run(names[i].c_str(), dir.c_str(), &passed[i], nullptr);
      if (status[i] != TATLAS_OK) errors[i] = tatlas_last_error();
    });
  }
  for (auto& t : jobs) t.join();
  int code = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    if (status[i] != TATLAS_OK) {
      std::cerr << "error (" << tatlas_status_name(status[i]) << ") in " << names[i] << ": " << errors[i] << "\n";
      code = std::max(code, exit_code_for(status[i]));
      continue;
    }
    std::cout << (passed[i] ? "pass " : "FAIL ") << names[i] << "\n";
    if (!passed[i]) code = std::max(code, 1);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit, degree and R_Q tables for points of prime order on elliptic curves over Q"};
  app.require_subcommand(1);
  int code = 0;

  // group
  auto* group = app.add_subcommand("group", "Build a named subgroup of GL2(F_p)");
  std::string g_name;
  std::uint64_t g_p = 0;
  std::uint32_t g_modulus = 0;
  GroupOut g_out;
  group->add_option("--name", g_name, "Cs, CsPlus, Cns, CnsPlus, G0, G3, G00, G10, G01, BorelFull, ...")->required();
  group->add_option("--p", g_p, "prime")->required();
  group->add_option("--modulus", g_modulus, "p (default) or p^2 for the full preimage");
  group->add_option("--format", g_out.format, "json, csv or markdown");
  group->add_flag("--orbits", g_out.orbits, "include the orbit decomposition");
  group->add_flag("--emit-file", g_out.emit_file, "print the group file JSON instead");
  group->callback([&] {
    tatlas_group* g = nullptr;
    const int st = g_modulus == 0 ? tatlas_group_named(g_name.c_str(), g_p, &g)
                                  : tatlas_group_named_lifted(g_name.c_str(), g_p, g_modulus, &g);
    code = st == TATLAS_OK ? emit_group(g, g_out) : report(st);
  });

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Read a group file: {\"modulus\": m, \"generators\": [[a,b,c,d], ...]}");
  std::string i_path;
  GroupOut i_out;
  ingest->add_option("file", i_path, "path, or - for stdin")->required();
  ingest->add_option("--format", i_out.format, "json, csv or markdown");
  ingest->add_flag("--orbits", i_out.orbits, "include the orbit decomposition");
  ingest->add_flag("--emit-file", i_out.emit_file, "re-emit the group file");
  ingest->callback([&] {
    std::stringstream buf;
    if (i_path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(i_path);
      if (!in) {
        std::cerr << "error: cannot read " << i_path << "\n";
        code = 4;
        return;
      }
      buf << in.rdbuf();
    }
    tatlas_group* g = nullptr;
    const int st = tatlas_group_from_json(buf.str().c_str(), &g);
    code = st == TATLAS_OK ? emit_group(g, i_out) : report(st);
  });

  // degrees
  auto* degrees = app.add_subcommand("degrees", "Possible degrees [Q(P):Q] for P of order p");
  std::uint64_t d_p = 0;
  bool d_assume = false;
  std::string d_format = "json";
  degrees->add_option("--p", d_p, "prime")->required();
  degrees->add_flag("--assume-conjecture", d_assume, "drop images that need the uniformity conjecture to fail");
  degrees->add_option("--format", d_format, "json, csv or markdown");
  degrees->callback([&] {
    char* s = nullptr;
    const int st = tatlas_degrees_emit(d_p, d_assume, d_format.c_str(), &s);
    code = print_owned(st, s);
  });

  // rqd
  auto* rqd = app.add_subcommand("rqd", "R_Q(d) tables");
  std::uint64_t r_max = 100;
  std::string r_view = "star", r_format = "json";
  bool r_assume = false;
  rqd->add_option("--max-d", r_max, "largest degree")->required();
  rqd->add_option("--view", r_view, "r, star, s or sstar")->capture_default_str();
  rqd->add_flag("--assume-conjecture", r_assume, "drop conditional primes");
  rqd->add_option("--format", r_format, "json, csv or markdown");
  rqd->callback([&] {
    char* s = nullptr;
    const int st = tatlas_rqd_emit(r_max, r_view.c_str(), r_assume, r_format.c_str(), &s);
    code = print_owned(st, s);
  });

  // scan
  auto* scan = app.add_subcommand("scan", "Exact scans and densities");
  std::string s_what;
  scan->add_option("what", s_what, "bad-prime, ambiguous-degree, exceptional-density or no-growth-density")
      ->required()
      ->check(CLI::IsMember({"bad-prime", "ambiguous-degree", "exceptional-density", "no-growth-density"}));
  scan->callback([&] {
    std::uint64_t v = 0;
    std::int64_t num = 0, den = 1;
    int st = TATLAS_OK;
    if (s_what == "bad-prime") {
      st = tatlas_scan_bad_prime(&v);
    } else if (s_what == "ambiguous-degree") {
      st = tatlas_scan_ambiguous_degree(&v);
    } else {
      st = s_what == "exceptional-density" ? tatlas_density_exceptional(&num, &den)
                                           : tatlas_density_no_growth(&num, &den);
    }
    if (st == TATLAS_OK) {
      if (s_what.find("density") != std::string::npos) {
        std::cout << num << "/" << den << "\n";
      } else {
        std::cout << v << "\n";
      }
    }
    code = report(st);
  });

  // check
  auto* check = app.add_subcommand("check", "Run reproduction checks; evidence goes to <results>/<name>.json");
  std::string c_which, c_dir = "results";
  check->add_option("which", c_which, "all or a check name")->required();
  check->add_option("--results", c_dir, "results directory")->capture_default_str();
  check->callback([&] { code = run_checks(c_which, c_dir); });

  // census
  auto* census = app.add_subcommand("census", "Subgroup classes of a named group");
  std::string ce_ambient, ce_format = "json";
  std::uint64_t ce_p = 0;
  bool ce_applicable = false;
  census->add_option("--ambient", ce_ambient, "group name")->required();
  census->add_option("--p", ce_p, "prime")->required();
  census->add_flag("--applicable-only", ce_applicable, "keep classes with -I, full det and a trace-0 det -1 element");
  census->add_option("--format", ce_format, "json, csv or markdown");
  census->callback([&] {
    char* s = nullptr;
    const int st = tatlas_census_emit(ce_ambient.c_str(), ce_p, ce_applicable, ce_format.c_str(), &s);
    code = print_owned(st, s);
  });

  // lift
  auto* lift = app.add_subcommand("lift", "Subgroups of GL2(Z/p^2) reducing onto a named group");
  std::string l_base, l_format = "json";
  std::uint64_t l_p = 0;
  std::uint32_t l_target = 0;
  std::int64_t l_index = -1;
  lift->add_option("--base", l_base, "group name")->required();
  lift->add_option("--p", l_p, "prime")->required();
  lift->add_option("--target-modulus", l_target, "p^2")->required();
  lift->add_option("--orbit-index", l_index, "list vectors of full order whose orbit has this length");
  lift->add_option("--format", l_format, "json, csv or markdown");
  lift->callback([&] {
    char* s = nullptr;
    const int st = tatlas_lift_emit(l_base.c_str(), l_p, l_target, l_index, l_format.c_str(), &s);
    code = print_owned(st, s);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return code;
}
