#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ogc/basis.hpp"
#include "ogc/skeleton.hpp"

namespace ogc {

/// On-disk basis cache. One JSON-lines file per slice, named
/// basis_d{d}_v{v}_e{e}_{flavor}.jsonl: a header object, then one graph per
/// line. manifest.json records the format version, the admissibility rules
/// and an FNV-1a-64 checksum for every slice file.
///
/// A cache written under another format version or other rules is stale and
/// loads as missing. A slice whose header disagrees with the manifest throws
/// VersionMismatch; a checksum or parse failure throws CorruptCache.
namespace cache {

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t x);

std::string slice_file_name(int d, int v, int e, Flavor flavor);

/// $OGC_CACHE_DIR, else ".ogc-cache" in the working directory.
std::filesystem::path default_dir();

std::filesystem::path store_basis(const FullBasis& basis, const std::filesystem::path& dir);
std::filesystem::path store_basis(const SkeletonBasis& basis, const std::filesystem::path& dir);

std::optional<FullBasis> load_full_basis(int d, int v, int e, const std::filesystem::path& dir);
std::optional<SkeletonBasis> load_skeleton_basis(int d, int v, int e, const std::filesystem::path& dir);

/// Checksum of the serialised slice, independent of any file on disk.
std::string basis_checksum(const FullBasis& basis);
std::string basis_checksum(const SkeletonBasis& basis);

/// Hash of the default admissibility rules and format version.
std::string rules_hash();

/// Enumerate-or-load helpers used by the command line and the suites.
FullBasis full_basis(int d, int v, int e, CoreCatalog& cores, const std::optional<std::filesystem::path>& dir);

}  // namespace cache
}  // namespace ogc
