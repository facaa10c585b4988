#include "tatlas/degrees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "tatlas/catalog.hpp"
#include "tatlas/error.hpp"

namespace tatlas {

std::vector<std::uint64_t> degrees_for_generators(std::span<const Mat2> generators, Modulus m,
                                                  std::uint64_t N) {
  if (N == 0 || m % N != 0) fail(ErrorCode::kNonDivisor, "N must divide the modulus");
  const auto lengths = orbit_decomposition(generators, m).lengths_of_order(N);
  return {lengths.begin(), lengths.end()};
}

std::vector<std::uint64_t> degrees_for_group(const MatGroup& G, std::uint64_t N) {
  return degrees_for_generators(G.generators(), G.modulus(), N);
}

std::vector<std::uint64_t> DegreeReport::degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) out.push_back(e.degree);
  return out;
}

std::vector<std::uint64_t> DegreeReport::unconditional_degrees() const {
  std::vector<std::uint64_t> out;
  for (const auto& e : entries) {
    if (!e.conditional) out.push_back(e.degree);
  }
  return out;
}

namespace {

struct Witness {
  std::string label;
  bool cm = false;
  bool conditional = false;
  bool j_zero = false;  // CM by the maximal order of Q(sqrt(-3))
};

}  // namespace

DegreeReport degrees_for_prime(std::uint64_t p, bool assume_conjecture) {
  if (!is_prime(p)) fail(ErrorCode::kNonPrimeModulus, "p must be prime");
  const Modulus m = static_cast<Modulus>(p);
  std::map<std::uint64_t, std::vector<Witness>> by_degree;
  // Generator lists can repeat across CM pairs; orbit work is done once each.
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> memo;
  auto degrees_of = [&](const ImagePossibility& x) {
    std::vector<std::uint64_t> key;
    for (const auto& g : x.generators) key.push_back(g.key());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, degrees_for_generators(x.generators, m, p)).first;
    return it->second;
  };

  for (const auto& x : noncm_possible_images(p, assume_conjecture)) {
    const bool cond = x.conditionality == Conditionality::OnlyIfConjectureFails;
    for (auto d : degrees_of(x)) by_degree[d].push_back({x.label, false, cond, false});
  }
  for (const auto& cm : rational_cm_pairs()) {
    for (const auto& x : cm_possible_images(cm, p)) {
      const std::string label = "CM(" + std::to_string(cm.D) + "," + std::to_string(cm.f) + ") " + x.label;
      const bool j0 = cm.D == 3 && cm.f == 1;
      for (auto d : degrees_of(x)) by_degree[d].push_back({label, true, false, j0});
    }
  }

  DegreeReport report{p, assume_conjecture, {}};
  for (auto& [d, ws] : by_degree) {
    DegreeEntry e;
    e.degree = d;
    e.conditional = std::all_of(ws.begin(), ws.end(), [](const Witness& w) { return w.conditional; });
    e.cm_only = !e.conditional &&
                std::none_of(ws.begin(), ws.end(), [](const Witness& w) { return !w.cm && !w.conditional; });
    std::set<std::string> labels;
    for (const auto& w : ws) labels.insert(w.label);
    e.witnesses.assign(labels.begin(), labels.end());
    const bool only_j0 = std::all_of(ws.begin(), ws.end(), [](const Witness& w) {
      return w.conditional || (w.cm && w.j_zero);
    });
    if (e.cm_only && only_j0) e.note = "j-invariant 0 only";
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::vector<std::uint64_t> divisor_minimal(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::uint64_t> out;
  for (auto v : values) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](std::uint64_t a) { return v % a == 0; });
    if (!covered) out.push_back(v);
  }
  return out;
}

MinimalDivisorSet minimal_divisor_set(std::uint64_t p, bool assume_conjecture) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, bool>, MinimalDivisorSet> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, assume_conjecture});
    if (it != cache.end()) return it->second;
  }
  const DegreeReport r = degrees_for_prime(p, assume_conjecture);
  MinimalDivisorSet out{p, divisor_minimal(r.unconditional_degrees()), {}};
  for (auto a : divisor_minimal(r.degrees())) {
    if (std::find(out.elements.begin(), out.elements.end(), a) == out.elements.end()) {
      out.conditional_elements.push_back(a);
    }
  }
  std::lock_guard lock(mu);
  cache.emplace(std::pair{p, assume_conjecture}, out);
  return out;
}

}  // namespace tatlas
