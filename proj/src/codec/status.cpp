#include "mihx/codec/status.hpp"

#include <array>

namespace mihx::codec {

namespace {

struct Row {
  std::uint8_t value;
  std::string_view meaning;
  std::string_view reference;
};

constexpr std::array<Row, 12> kIana{{
    {0, "Handover accept or success", ""},
    {1, "Handover Accepted, NCoA not valid", "RFC5568"},
    {2, "Handover Accepted, NCoA assigned", "RFC5568"},
    {3, "Handover Accepted, use PCoA", "RFC5568"},
    {4, "Message sent unsolicited", "RFC5568"},
    {5, "Context Transfer Accepted or Successful", "RFC5949"},
    {6, "All available Context Transferred", "RFC5949"},
    {128, "Handover Not Accepted, reason unspecified", "RFC5568"},
    {129, "Administratively prohibited", "RFC5568"},
    {130, "Insufficient resources", "RFC5568"},
    {131, "Requested Context Not Available", "RFC5949"},
    {132, "Forwarding Not Available", "RFC5949"},
}};

const Row* find(std::uint8_t v) {
  for (const auto& r : kIana) {
    if (r.value == v) return &r;
  }
  return nullptr;
}

}  // namespace

std::string_view StatusCode::meaning() const {
  const Row* r = find(value);
  return r ? r->meaning : kUnassigned;
}

std::string_view StatusCode::reference() const {
  const Row* r = find(value);
  return r ? r->reference : std::string_view{};
}

bool StatusCode::assigned() const { return find(value) != nullptr; }

std::string_view StatusCode::mih_meaning() const {
  switch (value) {
    case 0: return "success";
    case 1: return "Unspecified Failure";
    case 2: return "Rejected";
    case 3: return "Authorization failure";
    case 4: return "Network error";
    default: return kUnassigned;
  }
}

}  // namespace mihx::codec
