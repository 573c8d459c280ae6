#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ogc/basis.hpp"
#include "ogc/cache.hpp"
#include "ogc/complex.hpp"
#include "ogc/involution.hpp"
#include "ogc/pipeline.hpp"
#include "ogc/proofcheck.hpp"
#include "ogc/suites.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ogc;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  int d = 3;
  std::optional<int> v, e;
  int max_v = 5;
  int max_e = 7;
  int loop_order = 3;
  std::string flavor = "full";
  std::string part = "all";
  std::string cache_dir;
  std::vector<std::uint32_t> primes{kPrimeA, kPrimeB};
  int threads = 1;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t max_candidates = EnumerationLimits{}.max_candidates;
  std::string output;

  json to_json() const {
    json j = {{"d", d},         {"max_v", max_v},   {"max_e", max_e},   {"loop_order", loop_order},
              {"flavor", flavor}, {"part", part},   {"primes", primes}, {"format", format},
              {"seed", seed},   {"max_candidates", max_candidates}};
    if (v) j["v"] = *v;
    if (e) j["e"] = *e;
    return j;
  }
  std::string hash() const { return cache::hex64(cache::fnv1a64(to_json().dump())); }

  std::optional<fs::path> cache() const {
    if (!cache_dir.empty()) return fs::path(cache_dir);
    return std::nullopt;
  }
  RankOptions rank() const {
    RankOptions r;
    r.primes = primes;
    r.seed = seed;
    return r;
  }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + cfg.output);
  out << text;
}

void validate(const RunConfig& cfg) {
  for (auto p : cfg.primes)
    if (p <= (1u << 20) || p >= (1u << 31)) throw UsageError("primes must lie in (2^20, 2^31)");
  if (cfg.primes.empty()) throw UsageError("at least one prime is required");
  if (cfg.max_v < 1 || cfg.max_e < 1 || cfg.loop_order < 1) throw UsageError("limits must be positive");
  if (cfg.threads < 1) throw UsageError("--threads must be positive");
}

std::string betti_text(const BettiTable& t) {
  std::ostringstream os;
  for (const auto& r : t.rows)
    os << "d=" << r.d << " v=" << r.v << " e=" << r.e << " " << to_string(r.flavor) << " " << to_string(r.part)
       << " dim=" << r.dim << " betti=" << r.betti << " deg_ogc=" << grade(r.d, r.v, r.e).degree_ogc << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg) {
  fs::path dir = cfg.cache().value_or(cache::default_dir());
  CoreCatalog cores;
  EnumerationLimits limits;
  limits.max_candidates = cfg.max_candidates;
  json slices = json::array();
  Flavor flavor = parse_flavor(cfg.flavor);
  if (flavor == Flavor::Skeleton1) {
    SkeletonComplexBases sk = o1_basis_by_loop_order(cfg.d, cfg.loop_order, cores);
    for (const auto& [e, b] : sk.slices) {
      cache::store_basis(b, dir);
      slices.push_back({{"v", b.v}, {"e", b.e}, {"count", b.size()}, {"checksum", cache::basis_checksum(b)}});
    }
  } else if (flavor == Flavor::Full) {
    int v_lo = cfg.v.value_or(2), v_hi = cfg.v.value_or(cfg.max_v);
    for (int v = v_lo; v <= v_hi; ++v) {
      int e_lo = cfg.e.value_or(v), e_hi = cfg.e.value_or(cfg.max_e);
      for (int e = e_lo; e <= e_hi; ++e) {
        auto b = cache::load_full_basis(cfg.d, v, e, dir);
        if (!b) {
          b = enumerate_basis(cfg.d, v, e, cores, limits);
          cache::store_basis(*b, dir);
        }
        slices.push_back({{"v", v}, {"e", e}, {"count", b->size()}, {"checksum", cache::basis_checksum(*b)}});
      }
    }
  } else {
    throw UsageError("enumerate supports --flavor full or skeleton1; core complexes are built by proofcheck");
  }
  json out = {{"command", "enumerate"},
              {"config", cfg.to_json()},
              {"config_hash", cfg.hash()},
              {"cache_dir", dir.string()},
              {"slices", slices}};
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& s : slices) os << "v=" << s["v"] << " e=" << s["e"] << " count=" << s["count"] << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, out.dump(2) + "\n");
  }
  return kOk;
}

LoopComplex loop_complex(const RunConfig& cfg, CoreCatalog& cores) {
  PipelineOptions opts;
  opts.threads = cfg.threads;
  opts.rank = cfg.rank();
  opts.cache_dir = cfg.cache();
  Flavor flavor = parse_flavor(cfg.flavor);
  if (flavor == Flavor::Skeleton1) return skeleton_loop_complex(cfg.d, cfg.loop_order, cores, 1, -1, -1, opts);
  if (flavor == Flavor::Full)
    return full_loop_complex(cfg.d, cfg.loop_order, min_edges(cfg.loop_order), cfg.max_e + 1, cores, opts);
  throw UsageError("homology supports --flavor full or skeleton1");
}

int cmd_homology(const RunConfig& cfg) {
  CoreCatalog cores;
  LoopComplex c = loop_complex(cfg, cores);
  BettiTable table;
  table.rows = betti_rows(c, parse_part(cfg.part), cfg.rank());
  if (cfg.format == "csv") {
    emit(cfg, table.to_csv());
  } else if (cfg.format == "text") {
    emit(cfg, betti_text(table));
  } else {
    json out = {{"command", "homology"},
                {"config", cfg.to_json()},
                {"config_hash", cfg.hash()},
                {"complete", c.complete},
                {"betti", table.to_json()}};
    emit(cfg, out.dump(2) + "\n");
  }
  return kOk;
}

int cmd_split(const RunConfig& cfg) {
  CoreCatalog cores;
  LoopComplex c = loop_complex(cfg, cores);
  json slices = json::array();
  std::ostringstream text;
  for (int k = c.degrees() - 1; k >= c.first_final_degree(); --k) {
    const EigenSplit& s = c.split[k];
    json j = {{"v", c.vertices_at(k)},
              {"e", c.edges_at(k)},
              {"dim", s.source_size},
              {"plus", s.dimension(Part::Plus)},
              {"minus", s.dimension(Part::Minus)}};
    if (cfg.format == "json") j["eigenvectors"] = to_json(s);
    slices.push_back(j);
    text << "v=" << j["v"] << " e=" << j["e"] << " dim=" << j["dim"] << " plus=" << j["plus"]
         << " minus=" << j["minus"] << "\n";
  }
  if (cfg.format == "text") {
    emit(cfg, text.str());
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "d,v,e,flavor,dim,plus,minus\n";
    for (const auto& s : slices)
      os << cfg.d << ',' << s["v"] << ',' << s["e"] << ',' << cfg.flavor << ',' << s["dim"] << ',' << s["plus"] << ','
         << s["minus"] << "\n";
    emit(cfg, os.str());
  } else {
    json out = {{"command", "split"},
                {"config", cfg.to_json()},
                {"config_hash", cfg.hash()},
                {"blocks_closed", c.blocks_closed(Part::Plus) && c.blocks_closed(Part::Minus)},
                {"slices", slices}};
    emit(cfg, out.dump(2) + "\n");
  }
  return kOk;
}

SuiteConfig suite_config(const RunConfig& cfg, bool d_given) {
  SuiteConfig s;
  if (d_given) s.ds = {cfg.d};
  s.max_v = cfg.max_v;
  s.max_e = cfg.max_e;
  s.max_loop_order = cfg.loop_order;
  s.threads = cfg.threads;
  s.seed = cfg.seed;
  s.rank = cfg.rank();
  s.cache_dir = cfg.cache();
  return s;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool d_given) {
  SuiteConfig s = suite_config(cfg, d_given);
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names = {suite};
  }
  json reports = json::array();
  bool passed = true;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, s);
    passed &= r.passed;
    reports.push_back(r.to_json(s));
    if (!r.passed) {
      json record = {{"suite", name}, {"config_hash", s.hash()}, {"failures", r.failures}};
      std::cerr << record.dump() << "\n";
    }
    if (auto dir = cfg.cache()) {
      fs::create_directories(*dir / "reports");
      std::ofstream(*dir / "reports" / (name + ".json")) << r.to_json(s).dump(2) << "\n";
    }
  }
  json out = names.size() == 1 ? reports.front() : json{{"passed", passed}, {"reports", reports}};
  emit(cfg, out.dump(2) + "\n");
  return passed ? kOk : kFailed;
}

int cmd_proofcheck(const RunConfig& cfg, bool d_given) {
  CoreCatalog cores(1);
  std::vector<int> ds = d_given ? std::vector<int>{cfg.d} : std::vector<int>{2, 3};
  json records = json::array();
  bool passed = true;
  std::ostringstream text;
  for (int d : ds)
    for (int n = 1; n <= cfg.max_v; ++n)
      for (int m = n - 1; m <= cfg.max_e; ++m)
        for (const auto& core : cores.cores(n, m)) {
          if (n == 1 && m == 0) continue;
          PhiReport rep = verify_phi_chain(core, d, cfg.rank(), cfg.max_candidates);
          passed &= rep.passed();
          json j = rep.to_json();
          j["d"] = d;
          records.push_back(j);
          text << "d=" << d << " core=" << cache::hex64(cache::fnv1a64(to_text(core))) << " n=" << n << " m=" << m
               << (rep.passed() ? " pass" : " FAIL") << "\n";
        }
  if (cfg.format == "text") {
    emit(cfg, text.str());
  } else {
    json out = {{"command", "proofcheck"},
                {"config", cfg.to_json()},
                {"config_hash", cfg.hash()},
                {"passed", passed},
                {"cores", records}};
    emit(cfg, out.dump(2) + "\n");
  }
  if (!passed) std::cerr << json{{"command", "proofcheck"}, {"passed", false}}.dump() << "\n";
  return passed ? kOk : kFailed;
}

int cmd_report(const RunConfig& cfg) {
  fs::path dir = cfg.cache().value_or(cache::default_dir());
  json out = {{"command", "report"}, {"config_hash", cfg.hash()}, {"cache_dir", dir.string()}};
  std::ifstream mf(dir / "manifest.json");
  if (mf) {
    try {
      out["manifest"] = json::parse(mf);
    } catch (const json::exception& ex) {
      throw Error(ErrorKind::CorruptCache, std::string("manifest: ") + ex.what());
    }
  } else {
    out["manifest"] = nullptr;
  }
  json reports = json::object();
  if (fs::is_directory(dir / "reports")) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir / "reports"))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::ifstream in(f);
      try {
        reports[f.stem().string()] = json::parse(in);
      } catch (const json::exception& ex) {
        throw Error(ErrorKind::CorruptCache, f.string() + ": " + ex.what());
      }
    }
  }
  out["reports"] = reports;
  emit(cfg, out.dump(2) + "\n");
  return kOk;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ResourceLimitExceeded: return kResource;
    case ErrorKind::OutOfRangeEndpoint:
    case ErrorKind::SelfLoop:
    case ErrorKind::InadmissibleInput:
    case ErrorKind::EdgeOutOfRange:
    case ErrorKind::UnsupportedLoopOrder:
    case ErrorKind::Disconnected:
    case ErrorKind::ParseError:
      return kUsage;
    default:
      return kFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented graph complexes: bases, homology, involution split and verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("OGC_CACHE_DIR")) cfg.cache_dir = env;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", cfg.d, "degree parameter d");
    sub->add_option("--max-v", cfg.max_v, "largest vertex count");
    sub->add_option("--max-e", cfg.max_e, "largest edge count");
    sub->add_option("--loop-order", cfg.loop_order, "loop order (largest loop order for verify)");
    sub->add_option("--flavor", cfg.flavor, "full | skeleton1")->check(CLI::IsMember({"full", "skeleton1", "corephi"}));
    sub->add_option("--part", cfg.part, "all | plus | minus")->check(CLI::IsMember({"all", "plus", "minus"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "basis cache directory (default $OGC_CACHE_DIR)");
    sub->add_option("--primes", cfg.primes, "primes for modular ranks")->delimiter(',');
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--seed", cfg.seed, "seed for sampling and pivot tie-breaks");
    sub->add_option("--max-candidates", cfg.max_candidates, "enumeration resource guard");
    sub->add_option("-o,--output", cfg.output, "write the artifact to a file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "materialise bases into the cache");
  common(enumerate);
  int v_opt = 0, e_opt = 0;
  enumerate->add_option("--v", v_opt, "single vertex count");
  enumerate->add_option("--e", e_opt, "single edge count");
  auto* homology = app.add_subcommand("homology", "Betti numbers of one loop order");
  common(homology);
  auto* split = app.add_subcommand("split", "involution eigenspace dimensions");
  common(split);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  std::string suite;
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(choices));
  auto* proofcheck = app.add_subcommand("proofcheck", "core complex chain over a core sweep");
  common(proofcheck);
  auto* report = app.add_subcommand("report", "aggregate cached bases and reports");
  common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex);
    return code == 0 ? kOk : kUsage;
  }
  if (enumerate->count("--v")) cfg.v = v_opt;
  if (enumerate->count("--e")) cfg.e = e_opt;
  CLI::App* sub = app.get_subcommands().front();
  bool d_given = sub->count("--d") > 0;

  try {
    validate(cfg);
    if (sub == enumerate) return cmd_enumerate(cfg);
    if (sub == homology) return cmd_homology(cfg);
    if (sub == split) return cmd_split(cfg);
    if (sub == verify) return cmd_verify(cfg, suite, d_given);
    if (sub == proofcheck) {
      if (!sub->count("--max-v")) cfg.max_v = 4;
      return cmd_proofcheck(cfg, d_given);
    }
    if (sub == report) return cmd_report(cfg);
  } catch (const UsageError& ex) {
    std::cerr << json{{"error", "usage"}, {"message", ex.what()}}.dump() << "\n";
    return kUsage;
  } catch (const Error& ex) {
    std::cerr << json{{"error", to_string(ex.kind())}, {"message", ex.what()}, {"config", cfg.to_json()}}.dump()
              << "\n";
    return exit_for(ex.kind());
  }
  return kUsage;
}
