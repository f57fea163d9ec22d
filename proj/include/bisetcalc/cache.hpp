#pragma once

#include <memory>
#include <optional>
#include <string>

namespace bisetcalc {

class FiniteGroup;
struct CharacterTable;
class Cyclotomic;

// Disk cache for character tables: one JSON document per group fingerprint
// (hash of the literal multiplication table) under the cache directory.
// Directory resolution: explicit override, else BISETCALC_CACHE, else
// ./.bisetcalc-cache. Puts are idempotent (write to temp file + rename).
struct TableCache {
  static std::string directory();
  static void set_directory(const std::string& dir);
  static void set_enabled(bool on);
  static bool enabled();

  // Returns a verified table or nothing (missing, unreadable, or failing the
  // stored-vs-computed class check).
  static std::optional<CharacterTable> load(
      const std::shared_ptr<const FiniteGroup>& g);
  static void store(const CharacterTable& table);
};

}  // namespace bisetcalc
