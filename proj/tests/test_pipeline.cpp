#include <doctest.h>

#include <filesystem>

#include <unistd.h>

#include "ogc/pipeline.hpp"
#include "ogc/suites.hpp"

using namespace ogc;
namespace fs = std::filesystem;

TEST_CASE("skeleton loop complexes are complete and satisfy the Euler identity") {
  CoreCatalog cores;
  for (int d : {2, 3}) {
    auto c = skeleton_loop_complex(d, 2, cores);
    CHECK(c.complete);
    CHECK(c.e_top == skeleton_max_edges(2));
    CHECK(c.e_bottom == min_edges(2));
    for (Part p : {Part::All, Part::Plus, Part::Minus}) {
      CHECK(c.blocks_closed(p));
      CHECK(euler_check(c, p).agrees());
    }
    for (int k = 0; k < c.degrees(); ++k) CHECK(c.vertices_at(k) - c.edges_at(k) == 1 - c.loop_order);
  }
}

TEST_CASE("truncated full complexes refuse the Euler identity") {
  CoreCatalog cores;
  auto c = full_loop_complex(3, 2, 3, 6, cores);
  CHECK_FALSE(c.complete);
  CHECK(c.first_final_degree() == 1);
  try {
    euler_check(c, Part::All);
    FAIL("expected IncompleteRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteRange);
  }
  auto rows = betti_rows(c, Part::All);
  for (const auto& r : rows) CHECK(r.e < 6);
}

TEST_CASE("cached and fresh full complexes agree") {
  CoreCatalog cores;
  fs::path dir = fs::temp_directory_path() / ("ogc_test_pipeline_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  PipelineOptions opts;
  opts.cache_dir = dir;
  auto fresh = full_loop_complex(2, 3, 4, 8, cores);
  auto stored = full_loop_complex(2, 3, 4, 8, cores, opts);
  auto loaded = full_loop_complex(2, 3, 4, 8, cores, opts);
  CHECK(fresh.complex.dims == loaded.complex.dims);
  CHECK(fresh.complex.diff == loaded.complex.diff);
  CHECK(stored.complex.diff == loaded.complex.diff);
  CHECK(fs::exists(dir / "manifest.json"));
  fs::remove_all(dir);
}

TEST_CASE("suite registry and reports") {
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run_suite("nonsense", SuiteConfig{}), std::invalid_argument);
  SuiteConfig a, b;
  b.threads = 3;
  CHECK(a.hash() == b.hash());
  b.seed = 1;
  CHECK(a.hash() != b.hash());
  auto r = run_suite("grt", a);
  CHECK(r.passed);
  auto j = r.to_json(a);
  CHECK(j["config_hash"] == a.hash());
  CHECK(j["failures"].empty());
}
