// Runs the acceptance criteria with the default suite configuration and
// prints one line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "ogc/suites.hpp"

using namespace ogc;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteResult r = run_suite(name, cfg);
  Outcome o;
  o.passed = r.passed;
  o.detail = "suite " + name + ", " + std::to_string(r.checks.size()) + " checks, " +
             std::to_string(r.failures.size()) + " failures";
  if (!r.passed) std::cerr << r.to_json(cfg).dump(2) << "\n";
  return o;
}

Outcome determinism(const SuiteConfig& base) {
  Outcome o{true, ""};
  for (const std::string name : {"d2zero", "minus-acyclic", "main", "grt"}) {
    SuiteConfig one = base, four = base;
    one.threads = 1;
    four.threads = 4;
    std::string a = run_suite(name, one).to_json(one).dump();
    std::string b = run_suite(name, four).to_json(four).dump();
    if (a != b) {
      o.passed = false;
      std::cerr << "reports differ for suite " << name << "\n";
    }
    o.detail += (o.detail.empty() ? "" : ", ") + name + (a == b ? " identical" : " differs");
  }
  return o;
}

}  // namespace

int main() {
  SuiteConfig cfg;
  struct Criterion {
    int number;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "differential squares to zero", [&] { return from_suite("d2zero", cfg); }},
      {2, "coinvariant sign law and zero verdicts", [&] { return from_suite("coinvariant", cfg); }},
      {3, "basis equals brute-force oracle", [&] { return from_suite("oracle", cfg); }},
      {4, "involution laws", [&] { return from_suite("involution", cfg); }},
      {5, "minus part acyclic", [&] { return from_suite("minus-acyclic", cfg); }},
      {6, "full Betti equals plus Betti", [&] { return from_suite("main", cfg); }},
      {7, "skeleton inclusion quasi-isomorphism", [&] { return from_suite("skeleton-qiso", cfg); }},
      {8, "proof machinery on core sweep", [&] { return from_suite("proof", cfg); }},
      {9, "degree zero cohomology for d=3", [&] { return from_suite("grt", cfg); }},
      {10, "Lie bracket identities", [&] { return from_suite("lie", cfg); }},
      {11, "determinism across thread counts", [&] { return determinism(cfg); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[512];
    std::snprintf(line, sizeof line, "criterion %2d: %s  %s (%s; %.1fs)", c.number, o.passed ? "PASS" : "FAIL",
                  c.title, o.detail.c_str(), secs);
    std::cout << line << std::endl;
    if (!o.passed) ++failed;
  }

  // Euler characteristic of the finite skeleton complexes, reported alongside
  Outcome euler;
  try {
    euler = from_suite("euler", cfg);
  } catch (const std::exception& e) {
    euler = {false, e.what()};
  }
  std::cout << "extra euler: " << (euler.passed ? "PASS" : "FAIL") << "  " << euler.detail << std::endl;
  if (!euler.passed) ++failed;

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failing") << std::endl;
  return failed == 0 ? 0 : 1;
}
