// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fmlog/blowup_kn.hpp"
#include "fmlog/campaigns.hpp"
#include "fmlog/log_verify.hpp"
#include "fmlog/nested.hpp"
#include "oracles.hpp"

using namespace fmlog;

namespace {

constexpr std::uint64_t kSeed = 20261018;
constexpr double kTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string summary;
};

// Accumulates campaign results; the summary names the first failure.
struct Tally {
  Outcome out;
  long cases = 0;
  int campaigns = 0;
  void add(const CheckResult& r) {
    ++campaigns;
    cases += r.cases;
    if (!r.ok && out.ok) out.summary = r.name + ": " + r.detail;
    out.ok = out.ok && r.ok;
  }
  Outcome finish(const std::string& what) {
    if (out.ok) out.summary = what + "; " + std::to_string(campaigns) + " campaigns, " + std::to_string(cases) + " cases";
    return out;
  }
};

Outcome criterion_fm() {
  Tally t;
  for (int dim = 1; dim <= 4; ++dim)
    for (int n = 1; n <= 5; ++n) {
      t.add(fm_associativity(dim, n, 500, kSeed));
      t.add(fm_unit(dim, n, 500, kSeed));
      t.add(fm_equivariance(dim, n, 500, kSeed));
    }
  return t.finish("exact; D in 1..4, n in 1..5, 500 instances per axiom");
}

Outcome criterion_coordinates() {
  Tally t;
  for (int dim = 1; dim <= 4; ++dim)
    for (int n = 1; n <= 5; ++n) t.add(fm_coordinate_law(dim, n, 500, kSeed));
  return t.finish("exact; every I of every composite");
}

Outcome criterion_framed() {
  Tally t;
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= 5; ++n) {
      t.add(framed_associativity(d, n, 200, kSeed));
      t.add(framed_unit(d, n, 200, kSeed));
      t.add(framed_equivariance(d, n, 200, kSeed));
    }
  return t.finish("exact; d in 1..2, n in 1..5, 200 instances per axiom");
}

Outcome criterion_strata() {
  Outcome o;
  const long expected[] = {1, 1, 4, 26};
  std::ostringstream counts;
  for (int n = 1; n <= 4; ++n) {
    const long trees = static_cast<long>(enumerate_stable_trees(n).size());
    const long brute = oracle::nested_family_count(n);
    counts << (n > 1 ? "," : "") << trees;
    if (trees != expected[n - 1] || brute != expected[n - 1]) {
      o.ok = false;
      o.summary = "n=" + std::to_string(n) + ": " + std::to_string(trees) + " trees, oracle " + std::to_string(brute);
      return o;
    }
  }
  const CheckResult r = strata_consistency(6);
  if (!r.ok) return {false, r.detail};
  o.summary = "counts " + counts.str() + " match the power-set oracle; bijection and order verified for n <= 6";
  return o;
}

Outcome criterion_screens() {
  Tally t;
  t.add(screen_bijection(4, 3, 300, kSeed));
  return t.finish("exact; n <= 4, d <= 3, both round trips and fiber vanishing");
}

Outcome criterion_log() {
  Tally t;
  for (Variant v : {Variant::Log, Variant::VLog}) {
    LogVerifyOptions o;
    o.max_arity = 6;
    o.variant = v;
    for (auto c : verify_log_calculus(o).checks) {
      c.name = std::string(v == Variant::Log ? "log " : "vlog ") + c.name;
      t.add(c);
    }
  }
  const StrictUnitSearch s = search_strict_unit(3);
  std::ostringstream extra;
  extra << "|M| <= 6 both variants; strict-unit search: " << s.candidates << " candidates, " << s.unit_solutions
        << " unit solutions, " << s.df_legal_solutions << " DF-legal";
  if (s.df_legal_solutions != 0) {
    t.out.ok = false;
    t.out.summary = "a DF-legal strict unit was found";
  }
  return t.finish(extra.str());
}

Outcome criterion_kn() {
  Outcome o;
  double worst = 0;
  long checked = 0;
  auto take = [&](const kn::Report& r) {
    worst = std::max(worst, r.max_error);
    checked += r.checked;
    if (!r.ok() && o.ok) {
      o.ok = false;
      o.summary = r.name + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front());
    }
  };
  for (int m = 0; m <= 2; ++m) take(kn::hopf_verify(m, 10000, kTol, kSeed));
  for (const auto& c : kn::circle_split_catalog()) take(kn::circle_split_verify(c, 1000, kTol, kSeed));
  for (int n = 1; n <= 3; ++n) take(kn::s1_action_verify(n, 1000, kTol, kSeed));
  for (const auto& c : kn::strict_cartesian_catalog()) take(kn::strict_cartesian_verify(c, 1000, kTol, kSeed));
  take(kn::order_independence_verify(1000, kTol, kSeed));
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "tol 1e-9; %ld sample checks, max error %.2e", checked, worst);
    o.summary = buf;
  }
  return o;
}

Outcome criterion_bridge() {
  Tally t;
  t.add(screen_fm_bridge(100, kSeed));
  return t.finish("100 rational configurations, projective agreement");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_determinism() {
  const std::string dir = FMLOG_ACCEPTANCE_WORKDIR;
  std::string files[2];
  for (int run = 0; run < 2; ++run) {
    files[run] = dir + "/verify_all_run" + std::to_string(run + 1) + ".json";
    const std::string cmd = std::string("\"") + FMLOG_CLI_PATH + "\" --seed 42 verify all --out \"" + files[run] + "\"";
    const int status = std::system(cmd.c_str());
    if (status != 0) return {false, "verify all exited with status " + std::to_string(status)};
  }
  const std::string a = slurp(files[0]), b = slurp(files[1]);
  if (a.empty()) return {false, "empty report"};
  if (a != b) return {false, "reports differ"};
  return {true, "verify all --seed 42 twice: " + std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"FM operad axioms", criterion_fm},
      {"coordinate law", criterion_coordinates},
      {"framed semidirect axioms", criterion_framed},
      {"strata counts and bijection", criterion_strata},
      {"screen bijection", criterion_screens},
      {"log calculus", criterion_log},
      {"KN numerics", criterion_kn},
      {"screen/FM bridge", criterion_bridge},
      {"determinism of verify all", criterion_determinism},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", o.ok ? "PASS" : "FAIL", index, name.c_str(),
                o.summary.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
