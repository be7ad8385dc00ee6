#pragma once

// Sp(2g, Z/2) for small g: closed-form orders, the hyperelliptic orbit-count
// formula, brute-force enumeration, and orbits of quadratic forms.

#include "torelli/integer.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

/// 2g x 2g bit matrix, row i stored in bits [2g i, 2g (i + 1)); column j of
/// row i is bit 2g i + j. Fits g <= 3 (36 bits).
class F2Matrix {
 public:
  F2Matrix(std::size_t genus, std::uint64_t packed);
  static F2Matrix identity(std::size_t genus);
  /// x -> x + (x . v) v for a nonzero v in F2^{2g} (bit k = coordinate k).
  static F2Matrix transvection(std::size_t genus, std::uint32_t v);

  std::size_t genus() const { return genus_; }
  std::size_t dim() const { return 2 * genus_; }
  std::uint64_t packed() const { return packed_; }

  std::uint32_t row(std::size_t i) const;
  std::uint32_t column(std::size_t j) const;
  bool at(std::size_t i, std::size_t j) const { return (row(i) >> j) & 1u; }

  /// M x with x packed as coordinate bits.
  std::uint32_t apply(std::uint32_t x) const;
  bool is_symplectic() const;

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t genus_;
  std::uint64_t packed_;
};

/// Intersection of packed F2 vectors mod 2.
unsigned f2_intersection(std::uint32_t x, std::uint32_t y);

/// Value of the form with basis-value bits `form_bits` on packed x.
unsigned f2_form_value(std::uint32_t form_bits, std::uint32_t x);

/// 2^{g^2} prod_{i=1}^{g} (2^{2i} - 1).
Integer sp_order_mod2(std::size_t genus);

struct OrbitCount {
  Integer value;
  std::optional<std::string> warning;  // set when g < 3
};

/// |Sp(2g, Z/2)| / (2g + 2)!. Throws an arithmetic error if not divisible.
OrbitCount hyperelliptic_orbit_count(std::size_t genus);

inline constexpr std::size_t kMaxEnumerableGenus = 3;

/// Sorted list of packed elements of Sp(2g, Z/2).
class SpMod2Group {
 public:
  SpMod2Group(std::size_t genus, std::vector<std::uint64_t> sorted_elements);

  std::size_t genus() const { return genus_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  F2Matrix operator[](std::size_t i) const { return F2Matrix(genus_, elements_[i]); }

 private:
  std::size_t genus_;
  std::vector<std::uint64_t> elements_;
};

/// Transvections along a_i, b_i, a_i + a_{i+1} and b_i + b_{i+1}.
std::vector<F2Matrix> mod2_generators(std::size_t genus);

/// Breadth-first closure of the generators; g <= 3, otherwise a resource error.
SpMod2Group enumerate_sp_mod2(std::size_t genus);

inline constexpr std::uint32_t kCacheVersion = 1;

/// Cache layout (little-endian): magic "TSPMOD2\0", u32 version, u32 genus,
/// u64 count, count x u64 packed elements ascending, u64 FNV-1a checksum of
/// the element bytes.
void save_group_cache(const SpMod2Group& group, const std::filesystem::path& file);

/// Returns nullopt when the file is absent, truncated, corrupted, from another
/// version or genus, or does not describe a sorted set of symplectic matrices
/// of the expected order.
std::optional<SpMod2Group> load_group_cache(const std::filesystem::path& file,
                                            std::size_t genus);

enum class CacheStatus { disabled, loaded, created, regenerated };
std::string to_string(CacheStatus status);

struct CachedGroup {
  SpMod2Group group;
  CacheStatus status;
  std::optional<std::filesystem::path> file;
};

std::filesystem::path cache_file_name(const std::filesystem::path& dir, std::size_t genus);

/// Loads from `cache_dir` when valid; otherwise enumerates and (re)writes.
CachedGroup load_or_enumerate(std::size_t genus,
                              const std::optional<std::filesystem::path>& cache_dir);

struct FormOrbit {
  std::uint8_t arf;
  std::size_t size;
  std::uint64_t representative;  // smallest form bits in the orbit
  bool arf_constant;             // every member shares the representative's Arf value
};

/// Orbits of all 2^{2g} forms under (M . omega)(x) = omega(M^{-1} x), found by
/// sweeping the whole group from each unvisited form. Ordered by representative.
std::vector<FormOrbit> form_orbit_census(const SpMod2Group& group);

}  // namespace torelli
