#include "mihx/codec/values.hpp"

#include <arpa/inet.h>

#include <charconv>
#include <cstdio>

#include "mihx/codec/error.hpp"

namespace mihx::codec {

namespace {

Bytes parse_plain_hex(std::string_view hex, std::string_view what) {
  Bytes out;
  std::string digits;
  for (char c : hex) {
    if (c != ':' && c != '-') digits.push_back(c);
  }
  if (digits.size() % 2 != 0) {
    throw CodecError(Errc::BadHex, 0, std::string(what) + ": odd number of hex digits");
  }
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(digits.data() + i, digits.data() + i + 2, v, 16);
    if (ec != std::errc() || p != digits.data() + i + 2) {
      throw CodecError(Errc::BadHex, i / 2, std::string(what) + ": bad hex digit");
    }
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace

LinkAddress LinkAddress::interface_id(std::uint64_t iid) {
  LinkAddress a;
  a.kind = Kind::InterfaceId;
  for (int shift = 56; shift >= 0; shift -= 8) {
    a.octets.push_back(static_cast<std::uint8_t>(iid >> shift));
  }
  return a;
}

LinkAddress LinkAddress::mac48(std::span<const std::uint8_t, 6> mac) {
  return LinkAddress{Kind::Mac48, Bytes(mac.begin(), mac.end())};
}

std::string LinkAddress::to_string() const {
  std::string out = kind == Kind::Mac48 ? "mac:" : "iid:";
  char buf[4];
  for (std::size_t i = 0; i < octets.size(); ++i) {
    if (kind == Kind::Mac48 && i != 0) out.push_back(':');
    std::snprintf(buf, sizeof buf, "%02x", octets[i]);
    out += buf;
  }
  return out;
}

LinkAddress LinkAddress::parse(std::string_view text) {
  LinkAddress a;
  if (text.starts_with("mac:")) {
    a.kind = Kind::Mac48;
    a.octets = parse_plain_hex(text.substr(4), "mac");
    if (a.octets.size() != 6) {
      throw CodecError(Errc::InvalidTlvValue, 0, "MAC-48 address needs 6 octets");
    }
  } else if (text.starts_with("iid:")) {
    a.kind = Kind::InterfaceId;
    a.octets = parse_plain_hex(text.substr(4), "iid");
    if (a.octets.size() != 8) {
      throw CodecError(Errc::InvalidTlvValue, 0, "interface identifier needs 8 octets");
    }
  } else {
    throw CodecError(Errc::InvalidTlvValue, 0,
                     "link address must start with 'mac:' or 'iid:': " + std::string(text));
  }
  return a;
}

IpAddress IpAddress::parse(std::string_view text) {
  const std::string s(text);
  IpAddress a;
  std::array<std::uint8_t, 16> buf{};
  if (inet_pton(AF_INET6, s.c_str(), buf.data()) == 1) {
    a.family = Family::V6;
    a.octets.assign(buf.begin(), buf.end());
  } else if (inet_pton(AF_INET, s.c_str(), buf.data()) == 1) {
    a.family = Family::V4;
    a.octets.assign(buf.begin(), buf.begin() + 4);
  } else {
    throw CodecError(Errc::InvalidTlvValue, 0, "not an IP address: " + s);
  }
  return a;
}

std::string IpAddress::to_string() const {
  char buf[INET6_ADDRSTRLEN] = {};
  inet_ntop(family == Family::V6 ? AF_INET6 : AF_INET, octets.data(), buf, sizeof buf);
  return buf;
}

Prefix Prefix::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw CodecError(Errc::InvalidTlvValue, 0, "prefix needs '/len': " + std::string(text));
  }
  Prefix p;
  unsigned len = 0;
  const auto len_text = text.substr(slash + 1);
  auto [ptr, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
  if (ec != std::errc() || ptr != len_text.data() + len_text.size() || len > 128) {
    throw CodecError(Errc::InvalidTlvValue, 0, "bad prefix length: " + std::string(text));
  }
  const std::string addr(text.substr(0, slash));
  if (inet_pton(AF_INET6, addr.c_str(), p.octets.data()) != 1) {
    throw CodecError(Errc::InvalidTlvValue, 0, "bad IPv6 prefix: " + addr);
  }
  p.length = static_cast<std::uint8_t>(len);
  return p;
}

std::string Prefix::to_string() const {
  char buf[INET6_ADDRSTRLEN] = {};
  inet_ntop(AF_INET6, octets.data(), buf, sizeof buf);
  return std::string(buf) + "/" + std::to_string(length);
}

Tlv make_lla_iid_tlv(const LinkAddress& addr) {
  Tlv t{tlv_code::kMnLlaIid, {}};
  t.value.reserve(1 + addr.octets.size());
  t.value.push_back(static_cast<std::uint8_t>(addr.kind));
  for (auto o : addr.octets) t.value.push_back(o);
  validate_tlv_value(t);
  return t;
}

Tlv make_lma_address_tlv(const IpAddress& addr) {
  Tlv t{tlv_code::kLmaAddress, {}};
  t.value.reserve(1 + addr.octets.size());
  t.value.push_back(static_cast<std::uint8_t>(addr.family));
  for (auto o : addr.octets) t.value.push_back(o);
  validate_tlv_value(t);
  return t;
}

Tlv make_hnp_list_tlv(std::span<const Prefix> hnps) {
  if (hnps.empty()) throw CodecError(Errc::EmptyHnpList, 0, "HNP list is empty");
  if (hnps.size() > 255) {
    throw CodecError(Errc::FieldOutOfRange, 0, "at most 255 HNPs fit the count octet");
  }
  Tlv t{tlv_code::kHomeNetworkPrefix, {static_cast<std::uint8_t>(hnps.size())}};
  for (const auto& p : hnps) {
    if (p.length > 128) {
      throw CodecError(Errc::InvalidTlvValue, 0, "prefix length above 128");
    }
    t.value.push_back(p.length);
    t.value.insert(t.value.end(), p.octets.begin(), p.octets.end());
  }
  return t;
}

LinkAddress decode_lla_iid(std::span<const std::uint8_t> value, std::size_t offset) {
  if (value.empty()) throw CodecError(Errc::Truncated, offset, "MN LLA-IID without kind octet");
  LinkAddress a;
  std::size_t want = 0;
  switch (value[0]) {
    case static_cast<std::uint8_t>(LinkAddress::Kind::Mac48):
      a.kind = LinkAddress::Kind::Mac48;
      want = 6;
      break;
    case static_cast<std::uint8_t>(LinkAddress::Kind::InterfaceId):
      a.kind = LinkAddress::Kind::InterfaceId;
      want = 8;
      break;
    default:
      throw CodecError(Errc::InvalidTlvValue, offset,
                       "unknown link address kind " + std::to_string(value[0]));
  }
  if (value.size() - 1 != want) {
    throw CodecError(value.size() - 1 < want ? Errc::Truncated : Errc::MalformedLength,
                     offset + 1,
                     "link address kind " + std::to_string(value[0]) + " needs " +
                         std::to_string(want) + " octets, got " +
                         std::to_string(value.size() - 1));
  }
  a.octets.assign(value.begin() + 1, value.end());
  return a;
}

IpAddress decode_lma_address(std::span<const std::uint8_t> value, std::size_t offset) {
  if (value.empty()) throw CodecError(Errc::Truncated, offset, "LMA address without family");
  IpAddress a;
  std::size_t want = 0;
  switch (value[0]) {
    case static_cast<std::uint8_t>(IpAddress::Family::V4):
      a.family = IpAddress::Family::V4;
      want = 4;
      break;
    case static_cast<std::uint8_t>(IpAddress::Family::V6):
      a.family = IpAddress::Family::V6;
      want = 16;
      break;
    default:
      throw CodecError(Errc::InvalidTlvValue, offset,
                       "unknown address family " + std::to_string(value[0]));
  }
  if (value.size() - 1 != want) {
    throw CodecError(value.size() - 1 < want ? Errc::Truncated : Errc::MalformedLength,
                     offset + 1,
                     "address family " + std::to_string(value[0]) + " needs " +
                         std::to_string(want) + " octets");
  }
  a.octets.assign(value.begin() + 1, value.end());
  return a;
}

std::vector<Prefix> decode_hnp_list(std::span<const std::uint8_t> value, std::size_t offset) {
  if (value.empty()) throw CodecError(Errc::Truncated, offset, "HNP list without count octet");
  const std::size_t count = value[0];
  if (count == 0) throw CodecError(Errc::EmptyHnpList, offset, "HNP count is zero");
  constexpr std::size_t kElem = 17;
  const std::size_t body = value.size() - 1;
  if (body < count * kElem) {
    throw CodecError(Errc::Truncated, offset + value.size(),
                     "HNP count " + std::to_string(count) + " needs " +
                         std::to_string(count * kElem) + " octets, got " + std::to_string(body));
  }
  if (body > count * kElem) {
    throw CodecError(Errc::MalformedLength, offset + 1 + count * kElem,
                     "trailing octets after " + std::to_string(count) + " HNPs");
  }
  std::vector<Prefix> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = 1 + i * kElem;
    if (value[at] > 128) {
      throw CodecError(Errc::InvalidTlvValue, offset + at,
                       "prefix length " + std::to_string(value[at]) + " above 128");
    }
    out[i].length = value[at];
    std::copy(value.begin() + static_cast<std::ptrdiff_t>(at + 1),
              value.begin() + static_cast<std::ptrdiff_t>(at + kElem), out[i].octets.begin());
  }
  return out;
}

void validate_tlv_value(const Tlv& tlv, std::size_t offset) {
  switch (tlv.code) {
    case tlv_code::kMnLlaIid: decode_lla_iid(tlv.value, offset); break;
    case tlv_code::kLmaAddress: decode_lma_address(tlv.value, offset); break;
    case tlv_code::kHomeNetworkPrefix: decode_hnp_list(tlv.value, offset); break;
    case tlv_code::kStatus:
      if (tlv.value.size() != 1) {
        throw CodecError(Errc::InvalidTlvValue, offset, "status TLV carries exactly one octet");
      }
      break;
    default: break;
  }
}

}  // namespace mihx::codec
