#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "weylkit/freudenthal.hpp"

namespace weylkit {

inline constexpr int kCacheSchemaVersion = 1;

std::string serialize_table(const MultiplicityTable& table);
// Throws ValidationError when the text is not a well-formed entry for (t, lambda).
MultiplicityTable deserialize_table(std::string_view text, const LieType& t, const Weight& lambda);

// On-disk store of multiplicity tables keyed by (schema, family, rank,
// coefficients). Writes go to a temporary file that is renamed into place.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root);

  // The explicit directory wins; otherwise WEYLKIT_CACHE; otherwise no cache.
  static std::optional<ResultCache> configure(const std::optional<std::string>& directory);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path entry_path(const LieType& t, const Weight& lambda) const;

  struct Lookup {
    std::shared_ptr<const MultiplicityTable> table;
    bool hit = false;
  };

  // Hit and miss lines and warnings go to log. With verify set, a hit is
  // recomputed and a differing entry is replaced.
  Lookup fetch(const LieType& t, const Weight& lambda, bool verify, std::ostream& log) const;

 private:
  void store(const std::filesystem::path& path, const std::string& text) const;
  std::filesystem::path root_;
};

}  // namespace weylkit
