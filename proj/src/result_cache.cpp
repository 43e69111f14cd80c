#include "weylkit/result_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "json.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

using nlohmann::ordered_json;

ordered_json coeffs_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (const auto& c : w.coeffs()) a.push_back(to_decimal(c));
  return a;
}

Weight coeffs_from_json(const ordered_json& a, int rank) {
  if (!a.is_array() || static_cast<int>(a.size()) != rank) throw ValidationError("coefficient list has the wrong length");
  std::vector<BigInt> c;
  for (const auto& x : a) c.push_back(parse_decimal(x.get<std::string>()));
  return Weight(std::move(c));
}

}  // namespace

std::string serialize_table(const MultiplicityTable& table) {
  ordered_json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["family"] = std::string(1, family_letter(table.type().family()));
  j["rank"] = table.type().rank();
  j["lambda"] = coeffs_json(table.highest());
  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows()) {
    rows.push_back({{"mu", coeffs_json(r.mu)},
                    {"multiplicity", to_decimal(r.multiplicity)},
                    {"orbit_length", to_decimal(r.orbit_length)},
                    {"depth", r.depth}});
  }
  j["rows"] = std::move(rows);
  return j.dump() + "\n";
}

MultiplicityTable deserialize_table(std::string_view text, const LieType& t, const Weight& lambda) {
  try {
    auto j = ordered_json::parse(text);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) throw ValidationError("schema version differs");
    if (j.at("family").get<std::string>() != std::string(1, family_letter(t.family())) ||
        j.at("rank").get<int>() != t.rank()) {
      throw ValidationError("entry is for another type");
    }
    if (coeffs_from_json(j.at("lambda"), t.rank()) != lambda) throw ValidationError("entry is for another weight");
    std::vector<MultiplicityRow> rows;
    for (const auto& r : j.at("rows")) {
      rows.push_back({coeffs_from_json(r.at("mu"), t.rank()), parse_decimal(r.at("multiplicity").get<std::string>()),
                      parse_decimal(r.at("orbit_length").get<std::string>()), r.at("depth").get<int>()});
    }
    if (rows.empty() || rows.front().mu != lambda) throw ValidationError("entry does not start at the highest weight");
    return MultiplicityTable(t, lambda, std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed cache entry: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("malformed cache entry: ") + e.what());
  }
}

ResultCache::ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<ResultCache> ResultCache::configure(const std::optional<std::string>& directory) {
  if (directory && !directory->empty()) return ResultCache(*directory);
  if (const char* env = std::getenv("WEYLKIT_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

std::filesystem::path ResultCache::entry_path(const LieType& t, const Weight& lambda) const {
  std::string name;
  for (const auto& c : lambda.coeffs()) name += (name.empty() ? "" : "_") + to_decimal(c);
  return root_ / ("v" + std::to_string(kCacheSchemaVersion)) / t.name() / (name + ".json");
}

void ResultCache::store(const std::filesystem::path& path, const std::string& text) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ResultCache::Lookup ResultCache::fetch(const LieType& t, const Weight& lambda, bool verify, std::ostream& log) const {
  const auto path = entry_path(t, lambda);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    try {
      auto cached = std::make_shared<const MultiplicityTable>(deserialize_table(text, t, lambda));
      if (!verify) {
        log << "weylkit: cache hit " << path.string() << "\n";
        return {cached, true};
      }
      auto fresh = multiplicity_table(t, lambda);
      std::string recomputed = serialize_table(*fresh);
      if (recomputed == text) {
        log << "weylkit: cache hit " << path.string() << " (verified)\n";
        return {cached, true};
      }
      log << "weylkit: warning: cache entry " << path.string() << " differs from recomputation; replaced\n";
      store(path, recomputed);
      return {fresh, false};
    } catch (const ValidationError& e) {
      log << "weylkit: warning: discarding corrupt cache entry " << path.string() << ": " << e.what() << "\n";
    }
  }
  log << "weylkit: cache miss " << path.string() << "\n";
  auto table = multiplicity_table(t, lambda);
  try {
    store(path, serialize_table(*table));
  } catch (const std::exception& e) {
    log << "weylkit: warning: cache write failed: " << e.what() << "\n";
  }
  return {table, false};
}

}  // namespace weylkit
