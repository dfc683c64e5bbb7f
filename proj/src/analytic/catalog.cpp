#include "mihx/analytic/catalog.hpp"

#include <algorithm>

#include "mihx/analytic/errors.hpp"

namespace mihx::analytic {

Catalog::Catalog(std::vector<MessageCatalogEntry> entries) : entries_(std::move(entries)) {}

const Catalog& Catalog::table5() {
  static const Catalog c({
      {"MIH_Link_Going_down", "M_1", 78},
      {"MIH_Link_Up", "M_2", 95},
      {"MIH_Get_Information_request", "M_3", 1500},
      {"MIH_Get_Information_response", "M_4", 1500},
      {"MIH_Net_HO_Candidate_Query_request", "M_5", 63, 11, 0, 8},
      {"MIH_Net_HO_Candidate_Query_response", "M_6", 77, 0, 101, 0},
      {"MIH_N2N_HO_Query_Resource_request", "M_7", 150, 0, 11, 0},
      {"MIH_N2N_HO_Query_Resource_response", "M_8", 165},
      {"MIH_N2N_HO_Commit_request", "M_9", 213},
      {"MIH_N2N_HO_Commit_request (Extended)", "M_9e", 264},
      {"MIH_N2N_HO_Commit_response", "M_10", 92},
      {"MIH_N2N_HO_Commit_response (Extended)", "M_10e", 92},
      {"MIH_Net_HO_Commit_request", "M_11", 122},
      {"MIH_Net_HO_Commit_response", "M_12", 103},
      {"MIH_N2N_HO_Complete_request", "M_13", 109},
      {"MIH_N2N_HO_Complete_response", "M_14", 112},
      {"MIH_MN_HO_Commit_request", "M_15", 75},
      {"MIH_MN_HO_Commit_response", "M_16", 78},
      {"AAA Query", "M_17", 32},
      {"AAA Reply", "M_18", 60},
      {"HI", "M_HI", 72},
      {"HACK", "M_HACK", 32},
      {"PBU", "M_PBU", 76},
      {"PBA", "M_PBA", 52},
      {"RS", "M_RS", 16},
      {"RA", "M_RA", 64},
      {"UNA", "M_UNA", 52},
  });
  return c;
}

bool Catalog::contains(std::string_view abbrev) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.abbrev == abbrev; });
}

const MessageCatalogEntry& Catalog::entry(std::string_view abbrev) const {
  for (const auto& e : entries_) {
    if (e.abbrev == abbrev) return e;
  }
  throw UnknownMessage("unknown message abbreviation " + std::string(abbrev));
}

Catalog Catalog::with_override(std::string_view abbrev, std::int64_t octets) const {
  Catalog copy = *this;
  for (auto& e : copy.entries_) {
    if (e.abbrev == abbrev) {
      e.base = octets;
      e.per_n = e.per_m = e.per_nm = 0;
      return copy;
    }
  }
  throw UnknownMessage("unknown message abbreviation " + std::string(abbrev));
}

std::int64_t message_size(std::string_view abbrev, int n, int m) {
  return Catalog::table5().size(abbrev, n, m);
}

}  // namespace mihx::analytic
