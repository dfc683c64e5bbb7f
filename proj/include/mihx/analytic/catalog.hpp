#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mihx::analytic {

/// A row of the signaling message-size table. Sizes that depend on the
/// number of neighboring networks n and preferred PoAs m are affine in
/// n, m and n*m.
struct MessageCatalogEntry {
  std::string name;
  std::string abbrev;
  std::int64_t base = 0;
  std::int64_t per_n = 0;
  std::int64_t per_m = 0;
  std::int64_t per_nm = 0;

  bool is_constant() const { return per_n == 0 && per_m == 0 && per_nm == 0; }
  std::int64_t size(int n, int m) const {
    return base + per_n * n + per_m * m + per_nm * static_cast<std::int64_t>(n) * m;
  }
};

class Catalog {
 public:
  explicit Catalog(std::vector<MessageCatalogEntry> entries);

  /// The 27 message sizes used by the signaling analysis.
  static const Catalog& table5();

  std::span<const MessageCatalogEntry> entries() const { return entries_; }
  /// Throws UnknownMessage.
  const MessageCatalogEntry& entry(std::string_view abbrev) const;
  bool contains(std::string_view abbrev) const;
  std::int64_t size(std::string_view abbrev, int n, int m) const {
    return entry(abbrev).size(n, m);
  }

  /// Copy with `abbrev` replaced by a constant size.
  Catalog with_override(std::string_view abbrev, std::int64_t octets) const;

 private:
  std::vector<MessageCatalogEntry> entries_;
};

/// Message size by abbreviation (e.g. "M_PBU", "M_5") from the stock table.
std::int64_t message_size(std::string_view abbrev, int n, int m);

}  // namespace mihx::analytic
