#include "ogc/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace ogc::cache {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string slice_file_name(int d, int v, int e, Flavor flavor) {
  return "basis_d" + std::to_string(d) + "_v" + std::to_string(v) + "_e" + std::to_string(e) + "_" +
         to_string(flavor) + ".jsonl";
}

fs::path default_dir() {
  if (const char* env = std::getenv("OGC_CACHE_DIR"); env && *env) return env;
  return ".ogc-cache";
}

std::string rules_hash() {
  AdmissibilityRules r;
  std::ostringstream os;
  os << kFormatVersion << ';' << r.min_valence << ';' << r.forbid_passing << ';' << r.forbid_directed_cycles << ';'
     << r.require_connected;
  return hex64(fnv1a64(os.str()));
}

namespace {

json rules_json() {
  AdmissibilityRules r;
  return {{"min_valence", r.min_valence},
          {"forbid_passing", r.forbid_passing},
          {"forbid_directed_cycles", r.forbid_directed_cycles},
          {"require_connected", r.require_connected}};
}

char type_char(SkEdgeType t) {
  switch (t) {
    case SkEdgeType::Ed: return '>';
    case SkEdgeType::dE: return '<';
    case SkEdgeType::Ess: return 'S';
    case SkEdgeType::EE: return 'E';
  }
  return '?';
}

SkEdgeType type_from(const std::string& s) {
  if (s == ">") return SkEdgeType::Ed;
  if (s == "<") return SkEdgeType::dE;
  if (s == "S") return SkEdgeType::Ess;
  if (s == "E") return SkEdgeType::EE;
  throw Error(ErrorKind::CorruptCache, "unknown skeleton edge type '" + s + "'");
}

json skeleton_json(const SkeletonGraph& s) {
  json edges = json::array();
  for (const auto& e : s.edges) edges.push_back({e.tail + 1, e.head + 1, std::string(1, type_char(e.type))});
  return {{"v", s.vertex_count}, {"edges", std::move(edges)}};
}

SkeletonGraph skeleton_from_json(const json& j) {
  SkeletonGraph s;
  s.vertex_count = j.at("v").get<int>();
  for (const auto& e : j.at("edges")) {
    int t = e.at(0).get<int>(), h = e.at(1).get<int>();
    if (t < 1 || h < 1 || t > s.vertex_count || h > s.vertex_count)
      throw Error(ErrorKind::CorruptCache, "skeleton endpoint out of range");
    s.edges.push_back({t - 1, h - 1, type_from(e.at(2).get<std::string>())});
  }
  return s;
}

json header(int d, int v, int e, Flavor f, std::size_t count) {
  return {{"format_version", kFormatVersion}, {"d", d}, {"v", v}, {"e", e}, {"flavor", to_string(f)}, {"count", count}};
}

std::string serialise(const FullBasis& b) {
  std::string out = header(b.d, b.v, b.e, Flavor::Full, b.size()).dump() + "\n";
  for (const auto& g : b.classes) out += to_json(g).dump() + "\n";
  return out;
}

std::string serialise(const SkeletonBasis& b) {
  std::string out = header(b.d, b.v, b.e, Flavor::Skeleton1, b.size()).dump() + "\n";
  for (const auto& s : b.classes) out += skeleton_json(s).dump() + "\n";
  return out;
}

std::string unique_suffix() {
  static std::atomic<unsigned> counter{0};
  std::ostringstream os;
  os << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
     << counter.fetch_add(1);
  return os.str();
}

void atomic_write(const fs::path& target, const std::string& bytes) {
  fs::path tmp = target;
  tmp += unique_suffix();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Advisory lock on a sibling lock file, held for one manifest update.
class ManifestLock {
 public:
  explicit ManifestLock(const fs::path& dir) {
    fd_ = ::open((dir / "manifest.lock").c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~ManifestLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  ManifestLock(const ManifestLock&) = delete;
  ManifestLock& operator=(const ManifestLock&) = delete;

 private:
  int fd_ = -1;
};

json fresh_manifest() {
  return {{"format_version", kFormatVersion},
          {"rules", rules_json()},
          {"rules_hash", rules_hash()},
          {"checksums", json::object()}};
}

bool manifest_current(const json& m) {
  return m.value("format_version", -1) == kFormatVersion && m.value("rules_hash", std::string()) == rules_hash();
}

fs::path store(const std::string& name, const std::string& bytes, const fs::path& dir) {
  fs::create_directories(dir);
  fs::path file = dir / name;
  atomic_write(file, bytes);
  ManifestLock lock(dir);
  json manifest = fresh_manifest();
  if (auto text = read_file(dir / "manifest.json")) {
    try {
      json old = json::parse(*text);
      if (manifest_current(old)) manifest = std::move(old);
    } catch (const json::exception&) {
      // an unreadable manifest is rebuilt; stale entries simply reload as missing
    }
  }
  manifest["checksums"][name] = hex64(fnv1a64(bytes));
  atomic_write(dir / "manifest.json", manifest.dump(2) + "\n");
  return file;
}

// Returns the slice lines after the header, or nullopt when missing/stale.
std::optional<std::vector<std::string>> load_lines(int d, int v, int e, Flavor f, const fs::path& dir) {
  auto mtext = read_file(dir / "manifest.json");
  if (!mtext) return std::nullopt;
  json manifest;
  try {
    manifest = json::parse(*mtext);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::CorruptCache, std::string("manifest: ") + ex.what());
  }
  if (!manifest_current(manifest)) return std::nullopt;
  const std::string name = slice_file_name(d, v, e, f);
  auto sums = manifest.value("checksums", json::object());
  if (!sums.contains(name)) return std::nullopt;
  auto bytes = read_file(dir / name);
  if (!bytes) return std::nullopt;
  if (hex64(fnv1a64(*bytes)) != sums[name].get<std::string>())
    throw Error(ErrorKind::CorruptCache, name + ": checksum mismatch");

  std::vector<std::string> lines;
  std::istringstream in(*bytes);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  if (lines.empty()) throw Error(ErrorKind::CorruptCache, name + ": empty file");
  json h;
  try {
    h = json::parse(lines.front());
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::CorruptCache, name + ": " + ex.what());
  }
  if (h.value("format_version", -1) != kFormatVersion)
    throw Error(ErrorKind::VersionMismatch, name + ": format_version " + h.value("format_version", json()).dump());
  if (h != header(d, v, e, f, lines.size() - 1))
    throw Error(ErrorKind::CorruptCache, name + ": header does not match contents");
  lines.erase(lines.begin());
  return lines;
}

template <class Fn>
auto parse_or_corrupt(const std::string& line, Fn fn) {
  try {
    return fn(json::parse(line));
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::CorruptCache, ex.what());
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::CorruptCache) throw;
    throw Error(ErrorKind::CorruptCache, ex.what());
  }
}

}  // namespace

fs::path store_basis(const FullBasis& b, const fs::path& dir) {
  return store(slice_file_name(b.d, b.v, b.e, Flavor::Full), serialise(b), dir);
}

fs::path store_basis(const SkeletonBasis& b, const fs::path& dir) {
  return store(slice_file_name(b.d, b.v, b.e, Flavor::Skeleton1), serialise(b), dir);
}

std::optional<FullBasis> load_full_basis(int d, int v, int e, const fs::path& dir) {
  auto lines = load_lines(d, v, e, Flavor::Full, dir);
  if (!lines) return std::nullopt;
  FullBasis b;
  b.d = d;
  b.v = v;
  b.e = e;
  for (const auto& line : *lines) b.classes.push_back(parse_or_corrupt(line, graph_from_json));
  b.reindex();
  return b;
}

std::optional<SkeletonBasis> load_skeleton_basis(int d, int v, int e, const fs::path& dir) {
  auto lines = load_lines(d, v, e, Flavor::Skeleton1, dir);
  if (!lines) return std::nullopt;
  SkeletonBasis b;
  b.d = d;
  b.v = v;
  b.e = e;
  for (const auto& line : *lines) b.classes.push_back(parse_or_corrupt(line, skeleton_from_json));
  b.reindex();
  return b;
}

std::string basis_checksum(const FullBasis& b) { return hex64(fnv1a64(serialise(b))); }
std::string basis_checksum(const SkeletonBasis& b) { return hex64(fnv1a64(serialise(b))); }

FullBasis full_basis(int d, int v, int e, CoreCatalog& cores, const std::optional<fs::path>& dir) {
  if (dir) {
    if (auto b = load_full_basis(d, v, e, *dir)) return std::move(*b);
  }
  FullBasis b = enumerate_basis(d, v, e, cores);
  if (dir) store_basis(b, *dir);
  return b;
}

}  // namespace ogc::cache
