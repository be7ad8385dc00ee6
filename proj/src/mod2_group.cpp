#include "torelli/mod2_group.hpp"

#include "torelli/error.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <unordered_set>

namespace torelli {

namespace {

std::uint32_t row_mask(std::size_t dim) { return (std::uint32_t{1} << dim) - 1; }

// Bits at the a-positions 0, 2, 4, ...
constexpr std::uint32_t kEvenBits = 0x55555555u;

}  // namespace

unsigned f2_intersection(std::uint32_t x, std::uint32_t y) {
  // sum_i x_{a_i} y_{b_i} + x_{b_i} y_{a_i}
  const std::uint32_t cross = x & (y >> 1);
  const std::uint32_t cross2 = ((x >> 1) & y);
  return std::popcount((cross ^ cross2) & kEvenBits) & 1u;
}

unsigned f2_form_value(std::uint32_t form_bits, std::uint32_t x) {
  return (std::popcount(x & form_bits) + std::popcount(x & (x >> 1) & kEvenBits)) & 1u;
}

F2Matrix::F2Matrix(std::size_t genus, std::uint64_t packed) : genus_(genus), packed_(packed) {
  require(genus >= 1 && genus <= kMaxEnumerableGenus, ErrorKind::resource,
          "packed F2 matrices support genus 1..3");
}

F2Matrix F2Matrix::identity(std::size_t genus) {
  std::uint64_t packed = 0;
  const std::size_t dim = 2 * genus;
  for (std::size_t i = 0; i < dim; ++i) packed |= std::uint64_t{1} << (dim * i + i);
  return F2Matrix(genus, packed);
}

F2Matrix F2Matrix::transvection(std::size_t genus, std::uint32_t v) {
  const std::size_t dim = 2 * genus;
  require(v != 0 && v <= row_mask(dim), ErrorKind::domain, "transvection vector out of range");
  // Column j = e_j + (e_j . v) v; assembled row by row.
  std::uint64_t packed = F2Matrix::identity(genus).packed();
  for (std::size_t j = 0; j < dim; ++j) {
    if (!f2_intersection(std::uint32_t{1} << j, v)) continue;
    for (std::size_t i = 0; i < dim; ++i)
      if ((v >> i) & 1u) packed ^= std::uint64_t{1} << (dim * i + j);
  }
  return F2Matrix(genus, packed);
}

std::uint32_t F2Matrix::row(std::size_t i) const {
  const std::size_t d = dim();
  return static_cast<std::uint32_t>(packed_ >> (d * i)) & row_mask(d);
}

std::uint32_t F2Matrix::column(std::size_t j) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < dim(); ++i) out |= ((row(i) >> j) & 1u) << i;
  return out;
}

std::uint32_t F2Matrix::apply(std::uint32_t x) const {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    out |= static_cast<std::uint32_t>(std::popcount(row(i) & x) & 1) << i;
  return out;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  const std::size_t d = a.dim();
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < d; ++i) {
    std::uint32_t r = 0;
    std::uint32_t ai = a.row(i);
    while (ai) {
      const int k = std::countr_zero(ai);
      r ^= b.row(static_cast<std::size_t>(k));
      ai &= ai - 1;
    }
    packed |= static_cast<std::uint64_t>(r) << (d * i);
  }
  return F2Matrix(a.genus(), packed);
}

bool F2Matrix::is_symplectic() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) {
      const unsigned expected = (i / 2 == j / 2 && i != j) ? 1u : 0u;
      if (f2_intersection(column(i), column(j)) != expected) return false;
    }
  return true;
}

Integer sp_order_mod2(std::size_t genus) {
  require(genus >= 1, ErrorKind::domain, "genus must be positive");
  Integer order = Integer(1) << (genus * genus);
  for (std::size_t i = 1; i <= genus; ++i) order *= (Integer(1) << (2 * i)) - 1;
  return order;
}

OrbitCount hyperelliptic_orbit_count(std::size_t genus) {
  const Integer order = sp_order_mod2(genus);
  Integer factorial = 1;
  for (std::size_t k = 2; k <= 2 * genus + 2; ++k) factorial *= k;
  require(order % factorial == 0, ErrorKind::arithmetic,
          "|Sp(2g, Z/2)| is not divisible by (2g + 2)! for g = " + std::to_string(genus));
  OrbitCount out{order / factorial, std::nullopt};
  if (genus < 3)
    out.warning = "orbit-count formula is stated for g >= 3; g = " + std::to_string(genus) +
                  " is outside that range";
  return out;
}

SpMod2Group::SpMod2Group(std::size_t genus, std::vector<std::uint64_t> sorted_elements)
    : genus_(genus), elements_(std::move(sorted_elements)) {}

std::vector<F2Matrix> mod2_generators(std::size_t genus) {
  std::vector<F2Matrix> gens;
  for (std::size_t i = 0; i < genus; ++i) {
    gens.push_back(F2Matrix::transvection(genus, 1u << (2 * i)));
    gens.push_back(F2Matrix::transvection(genus, 1u << (2 * i + 1)));
  }
  for (std::size_t i = 0; i + 1 < genus; ++i) {
    gens.push_back(F2Matrix::transvection(genus, (1u << (2 * i)) | (1u << (2 * i + 2))));
    gens.push_back(F2Matrix::transvection(genus, (1u << (2 * i + 1)) | (1u << (2 * i + 3))));
  }
  return gens;
}

SpMod2Group enumerate_sp_mod2(std::size_t genus) {
  require(genus >= 1, ErrorKind::domain, "genus must be positive");
  require(genus <= kMaxEnumerableGenus, ErrorKind::resource,
          "Sp(2g, Z/2) enumeration is limited to g <= 3");
  const auto gens = mod2_generators(genus);
  const auto expected = static_cast<std::size_t>(sp_order_mod2(genus));

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(expected * 2);
  std::vector<std::uint64_t> frontier{F2Matrix::identity(genus).packed()};
  seen.insert(frontier.front());
  // Levels are sorted before expansion, so the discovery order is deterministic.
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t packed : frontier) {
      const F2Matrix m(genus, packed);
      for (const auto& g : gens) {
        const std::uint64_t product = (m * g).packed();
        if (seen.insert(product).second) next.push_back(product);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::uint64_t> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return SpMod2Group(genus, std::move(elements));
}

namespace {

constexpr char kMagic[8] = {'T', 'S', 'P', 'M', 'O', 'D', '2', '\0'};

std::uint64_t fnv1a(const std::vector<std::uint64_t>& values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t v : values)
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  return h;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(buf, 8);
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(buf, 4);
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return true;
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char buf[4];
  if (!in.read(reinterpret_cast<char*>(buf), 4)) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
  return true;
}

}  // namespace

void save_group_cache(const SpMod2Group& group, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::io, "cannot write cache file " + tmp);
    out.write(kMagic, sizeof kMagic);
    put_u32(out, kCacheVersion);
    put_u32(out, static_cast<std::uint32_t>(group.genus()));
    put_u64(out, group.size());
    for (std::uint64_t v : group.elements()) put_u64(out, v);
    put_u64(out, fnv1a(group.elements()));
    require(static_cast<bool>(out), ErrorKind::io, "failed writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<SpMod2Group> load_group_cache(const std::filesystem::path& file,
                                            std::size_t genus) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0)
    return std::nullopt;
  std::uint32_t version = 0, stored_genus = 0;
  std::uint64_t count = 0;
  if (!get_u32(in, version) || version != kCacheVersion) return std::nullopt;
  if (!get_u32(in, stored_genus) || stored_genus != genus) return std::nullopt;
  if (!get_u64(in, count) || count != static_cast<std::uint64_t>(sp_order_mod2(genus)))
    return std::nullopt;
  std::vector<std::uint64_t> elements(count);
  for (auto& v : elements)
    if (!get_u64(in, v)) return std::nullopt;
  std::uint64_t checksum = 0;
  if (!get_u64(in, checksum) || checksum != fnv1a(elements)) return std::nullopt;
  if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0 && elements[i] <= elements[i - 1]) return std::nullopt;
    if (elements[i] >> (4 * genus * genus) != 0) return std::nullopt;
    if (!F2Matrix(genus, elements[i]).is_symplectic()) return std::nullopt;
  }
  return SpMod2Group(genus, std::move(elements));
}

std::string to_string(CacheStatus status) {
  switch (status) {
    case CacheStatus::disabled: return "disabled";
    case CacheStatus::loaded: return "loaded";
    case CacheStatus::created: return "created";
    case CacheStatus::regenerated: return "regenerated";
  }
  return "unknown";
}

std::filesystem::path cache_file_name(const std::filesystem::path& dir, std::size_t genus) {
  return dir / ("sp_mod2_g" + std::to_string(genus) + ".v" + std::to_string(kCacheVersion) +
                ".bin");
}

CachedGroup load_or_enumerate(std::size_t genus,
                              const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return {enumerate_sp_mod2(genus), CacheStatus::disabled, std::nullopt};
  const auto file = cache_file_name(*cache_dir, genus);
  const bool existed = std::filesystem::exists(file);
  if (existed) {
    if (auto group = load_group_cache(file, genus)) return {*std::move(group), CacheStatus::loaded, file};
  }
  SpMod2Group group = enumerate_sp_mod2(genus);
  save_group_cache(group, file);
  return {std::move(group), existed ? CacheStatus::regenerated : CacheStatus::created, file};
}

std::vector<FormOrbit> form_orbit_census(const SpMod2Group& group) {
  const std::size_t genus = group.genus();
  const std::size_t form_count = std::size_t{1} << (2 * genus);
  std::vector<bool> visited(form_count, false);
  std::vector<FormOrbit> orbits;

  auto arf_of = [genus](std::uint64_t bits) {
    unsigned total = 0;
    for (std::size_t i = 0; i < genus; ++i) total += (bits >> (2 * i)) & (bits >> (2 * i + 1)) & 1u;
    return static_cast<std::uint8_t>(total & 1u);
  };

  for (std::uint64_t start = 0; start < form_count; ++start) {
    if (visited[start]) continue;
    // The group is closed under inverses, so {omega o M} over all M is the orbit.
    std::vector<bool> in_orbit(form_count, false);
    for (std::uint64_t packed : group.elements()) {
      const F2Matrix m(genus, packed);
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < 2 * genus; ++k)
        image |= static_cast<std::uint64_t>(
                     f2_form_value(static_cast<std::uint32_t>(start), m.column(k)))
                 << k;
      in_orbit[image] = true;
    }
    FormOrbit orbit{arf_of(start), 0, start, true};
    for (std::uint64_t f = 0; f < form_count; ++f) {
      if (!in_orbit[f]) continue;
      visited[f] = true;
      ++orbit.size;
      if (arf_of(f) != orbit.arf) orbit.arf_constant = false;
    }
    orbits.push_back(orbit);
  }
  return orbits;
}

}  // namespace torelli
