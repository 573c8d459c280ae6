#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <unistd.h>

#include "ogc/basis.hpp"
#include "ogc/cache.hpp"

using namespace ogc;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("ogc_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

std::set<std::string> brute_keys(const FullBasis& b) {
  std::set<std::string> out;
  for (const auto& g : b.classes) out.insert(graph_key(brute_canonical(g)));
  return out;
}

}  // namespace

TEST_CASE("small slices") {
  CoreCatalog cores;
  CHECK(enumerate_basis(3, 2, 2, cores).size() == 1);
  CHECK(enumerate_basis(2, 2, 2, cores).size() == 0);
  CHECK(enumerate_basis(3, 1, 0, cores).size() == 0);
  CHECK(brute_force_basis(3, 2, 2).size() == 1);
  CHECK(brute_force_basis(2, 2, 2).size() == 0);
}

TEST_CASE("enumeration equals the brute-force oracle") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (int v = 1; v <= 4; ++v)
      for (int e = 0; e <= 6; ++e) {
        CAPTURE(d);
        CAPTURE(v);
        CAPTURE(e);
        auto fast = enumerate_basis(d, v, e, cores);
        auto brute = brute_force_basis(d, v, e);
        CHECK(fast.size() == brute.size());
        CHECK(brute_keys(fast) == brute_keys(brute));
      }
}

TEST_CASE("classes are admissible, nonzero, sorted and distinct") {
  CoreCatalog cores;
  for (int d : {2, 3}) {
    auto b = enumerate_basis(d, 4, 6, cores);
    std::vector<std::string> keys;
    for (const auto& g : b.classes) {
      CHECK_FALSE(check_admissible(g));
      auto c = canonicalize(g, parity_of(d));
      REQUIRE(c);
      CHECK(c->cls.canonical == g);
      keys.push_back(graph_key(g));
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
  }
}

TEST_CASE("reversal permutes the classes of a slice") {
  CoreCatalog cores;
  for (int d : {2, 3})
    for (auto [v, e] : {std::pair{4, 6}, std::pair{5, 7}}) {
      auto b = enumerate_basis(d, v, e, cores);
      std::set<int> image;
      for (const auto& g : b.classes) {
        auto c = canonicalize(reverse_all(g), parity_of(d));
        REQUIRE(c);
        int i = b.find(graph_key(c->cls.canonical));
        CHECK(i >= 0);
        image.insert(i);
      }
      CHECK(image.size() == b.size());
    }
}

TEST_CASE("candidate guard") {
  CoreCatalog cores;
  EnumerationLimits tight;
  tight.max_candidates = 10;
  try {
    enumerate_basis(3, 5, 8, cores, tight);
    FAIL("expected ResourceLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimitExceeded);
  }
  CHECK_THROWS_AS(brute_force_basis(3, 6, 9), Error);
}

TEST_CASE("cache round trip, missing, corruption and staleness") {
  CoreCatalog cores;
  fs::path dir = fresh_dir("cache");
  CHECK_FALSE(cache::load_full_basis(3, 2, 2, dir));

  auto b = enumerate_basis(3, 4, 6, cores);
  fs::path file = cache::store_basis(b, dir);
  CHECK(file.filename() == "basis_d3_v4_e6_full.jsonl");
  auto loaded = cache::load_full_basis(3, 4, 6, dir);
  REQUIRE(loaded);
  CHECK(loaded->classes == b.classes);
  CHECK(cache::basis_checksum(*loaded) == cache::basis_checksum(b));
  CHECK_FALSE(cache::load_full_basis(3, 4, 5, dir));

  // storing the same slice twice gives identical bytes
  std::ifstream first(file, std::ios::binary);
  std::string before((std::istreambuf_iterator<char>(first)), {});
  cache::store_basis(b, dir);
  std::ifstream second(file, std::ios::binary);
  CHECK(std::string((std::istreambuf_iterator<char>(second)), {}) == before);

  fs::resize_file(file, fs::file_size(file) / 2);
  try {
    cache::load_full_basis(3, 4, 6, dir);
    FAIL("expected CorruptCache");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CorruptCache);
  }
  fs::remove_all(dir);
}

TEST_CASE("cache versions") {
  CoreCatalog cores;
  fs::path dir = fresh_dir("version");
  auto b = enumerate_basis(3, 3, 5, cores);
  fs::path file = cache::store_basis(b, dir);

  // a slice whose header disagrees with the current manifest
  std::ifstream in(file);
  std::string header, rest, line;
  std::getline(in, header);
  while (std::getline(in, line)) rest += line + "\n";
  auto h = nlohmann::json::parse(header);
  h["format_version"] = kFormatVersion + 1;
  std::string bytes = h.dump() + "\n" + rest;
  std::ofstream(file, std::ios::binary | std::ios::trunc) << bytes;
  auto manifest = nlohmann::json::parse(std::ifstream(dir / "manifest.json"));
  manifest["checksums"][file.filename().string()] = cache::hex64(cache::fnv1a64(bytes));
  std::ofstream(dir / "manifest.json", std::ios::trunc) << manifest.dump();
  try {
    cache::load_full_basis(3, 3, 5, dir);
    FAIL("expected VersionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VersionMismatch);
  }

  // a manifest from another format version makes the whole cache stale
  manifest["format_version"] = kFormatVersion + 1;
  std::ofstream(dir / "manifest.json", std::ios::trunc) << manifest.dump();
  CHECK_FALSE(cache::load_full_basis(3, 3, 5, dir));
  fs::remove_all(dir);
}
