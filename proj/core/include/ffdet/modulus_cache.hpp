#ifndef FFDET_MODULUS_CACHE_HPP
#define FFDET_MODULUS_CACHE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ffdet/field.hpp"

namespace ffdet {

/// Append-only text cache of field moduli.  One line per field:
///
///   p r c0,c1,...,cr
///
/// with decimal integers and coefficients listed constant term first.
/// Lines that fail to parse or validate (wrong coefficient count,
/// non-monic, coefficients out of range, reducible polynomial) are
/// skipped with a warning on stderr.  Lookup is an exact match on (p, r);
/// when a pair occurs on several lines the earliest valid line wins.
/// Thread-safe.
class ModulusCache {
 public:
  ModulusCache() = default;

  /// Binds the cache to `path` and loads any existing entries.
  /// A missing file is not an error (it is created on first store).
  explicit ModulusCache(std::string path);

  std::optional<std::vector<std::int64_t>> find(std::int64_t p, int r) const;

  /// Remembers the modulus for (p, r) and appends it to the backing file
  /// when one is bound.  A pair that is already present is left unchanged.
  void store(std::int64_t p, int r, const std::vector<std::int64_t>& modulus);

  const std::string& path() const { return path_; }
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::string path_;
  std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> entries_;
};

/// F_{p^r}, consulting `cache` (when given and r >= 2) for the modulus
/// before falling back to canonical_irreducible; newly computed moduli are
/// stored back.  Prime fields never touch the cache.
FieldCtx make_field(std::int64_t p, int r, ModulusCache* cache = nullptr);

}  // namespace ffdet

#endif  // FFDET_MODULUS_CACHE_HPP
