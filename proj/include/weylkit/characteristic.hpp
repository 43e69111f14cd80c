#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace weylkit {

// A prime p, or "generic" (large enough that no p-divisibility condition holds).
class Characteristic {
 public:
  static Characteristic generic() { return Characteristic(); }
  static Characteristic prime(std::uint64_t p);
  // "generic" or a decimal prime.
  static Characteristic parse(std::string_view text);

  bool is_generic() const { return !p_.has_value(); }
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Characteristic&, const Characteristic&) = default;

 private:
  Characteristic() = default;
  std::optional<std::uint64_t> p_;
};

}  // namespace weylkit
