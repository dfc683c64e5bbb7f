#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mihx/codec/error.hpp"
#include "mihx/codec/header.hpp"
#include "mihx/codec/hex.hpp"
#include "mihx/codec/message.hpp"
#include "mihx/codec/registry.hpp"
#include "mihx/codec/status.hpp"
#include "mihx/codec/tlv.hpp"
#include "mihx/codec/values.hpp"

using namespace mihx::codec;

namespace {

Bytes golden(const std::string& name) {
  std::ifstream in(std::string(MIHX_TESTDATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_hex(ss.str());
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const CodecError& e) {
    return e.code();
  }
  FAIL("expected CodecError");
  return Errc::BadHex;
}

std::size_t offset_of(auto&& fn) {
  try {
    fn();
  } catch (const CodecError& e) {
    return e.offset();
  }
  FAIL("expected CodecError");
  return 0;
}

Bytes v6(const char* text) { return IpAddress::parse(text).octets; }

}  // namespace

TEST_CASE("TLV 101 with an interface identifier") {
  const auto t = make_lla_iid_tlv(LinkAddress::interface_id(0x0011223344556677ULL));
  const Bytes want{0x65, 0x09, 0x02, 0x00, 0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77};
  CHECK(encode_tlv(t) == want);
}

TEST_CASE("TLV 102 with an IPv6 LMA address") {
  const auto enc = encode_tlv(make_lma_address_tlv(IpAddress::parse("2001:db8::1")));
  REQUIRE(enc.size() == 19);
  CHECK(enc[0] == 0x66);
  CHECK(enc[1] == 0x11);
  CHECK(enc[2] == 0x02);
}

TEST_CASE("TLV 103 with one prefix, assembled by hand") {
  const Prefix p = Prefix::parse("2001:db8::/64");
  const std::vector<Prefix> one{p};
  Bytes want{0x67, 0x12, 0x01, 0x40};
  const auto addr = v6("2001:db8::");
  want.insert(want.end(), addr.begin(), addr.end());
  const auto enc = encode_tlv(make_hnp_list_tlv(one));
  CHECK(enc == want);
  const auto dec = decode_tlv(enc);
  CHECK(dec.rest.empty());
  CHECK(decode_hnp_list(dec.tlv.value) == one);
}

TEST_CASE("length field forms") {
  SUBCASE("128 octets fit the short form") {
    Tlv t{1, Bytes(128, 0xaa)};
    const auto enc = encode_tlv(t);
    CHECK(enc[1] == 128);
    CHECK(enc.size() == 130);
  }
  SUBCASE("129 octets take 0x81 plus one octet") {
    const auto enc = encode_tlv(Tlv{1, Bytes(129, 0)});
    CHECK(enc[1] == 0x81);
    CHECK(enc[2] == 129);
  }
  SUBCASE("300 octets take 0x82 plus two octets") {
    const auto enc = encode_tlv(Tlv{1, Bytes(300, 0)});
    CHECK(enc[1] == 0x82);
    CHECK(enc[2] == 0x01);
    CHECK(enc[3] == 0x2c);
    CHECK(decode_tlv(enc).tlv.value.size() == 300);
  }
  SUBCASE("65535 octets is the maximum") {
    CHECK(encode_tlv(Tlv{1, Bytes(65535, 1)}).size() == 65535 + 4);
    CHECK(error_of([] { encode_tlv(Tlv{1, Bytes(65536, 1)}); }) == Errc::ValueTooLong);
  }
}

TEST_CASE("decode_tlv rejects bad input") {
  SUBCASE("declared length beyond input") {
    const Bytes b{0x65, 0x09, 0x02, 0x00, 0x11, 0x22, 0x33};
    CHECK(error_of([&] { decode_tlv(b); }) == Errc::Truncated);
  }
  SUBCASE("long form for a length that fits the short form") {
    const Bytes b{0x01, 0x81, 0x05, 1, 2, 3, 4, 5};
    CHECK(error_of([&] { decode_tlv(b); }) == Errc::MalformedLength);
  }
  SUBCASE("leading zero length octet") {
    Bytes b{0x01, 0x82, 0x00, 0xc8};
    b.resize(4 + 200);
    CHECK(error_of([&] { decode_tlv(b); }) == Errc::MalformedLength);
  }
  SUBCASE("missing length octet") {
    const Bytes b{0x01};
    CHECK(error_of([&] { decode_tlv(b); }) == Errc::Truncated);
  }
  SUBCASE("error offsets include the base offset") {
    const Bytes b{0x65, 0x09, 0x02};
    CHECK(offset_of([&] { decode_tlv(b, 40); }) >= 40);
  }
}

TEST_CASE("HNP count larger than the elements present") {
  auto tlv = make_hnp_list_tlv(std::vector<Prefix>{Prefix::parse("2001:db8:1::/64")});
  tlv.value[0] = 2;
  CHECK(error_of([&] { decode_hnp_list(tlv.value); }) == Errc::Truncated);
  auto msg = build_commit_request_ext("mn", LinkAddress::interface_id(1),
                                      IpAddress::parse("2001:db8::1"),
                                      std::vector<Prefix>{Prefix::parse("2001:db8:1::/64")});
  msg.tlvs[3] = tlv;
  CHECK(error_of([&] { validate_message(msg); }) == Errc::Truncated);
}

TEST_CASE("extended value shapes are enforced") {
  CHECK(error_of([] { validate_tlv_value(Tlv{101, {0x02, 1, 2, 3}}); }) == Errc::Truncated);
  CHECK(error_of([] { validate_tlv_value(Tlv{101, {0x07, 1, 2, 3, 4, 5, 6}}); }) ==
        Errc::InvalidTlvValue);
  CHECK(error_of([] { validate_tlv_value(Tlv{102, {0x01, 10, 0, 0, 1, 9}}); }) ==
        Errc::MalformedLength);
  CHECK(error_of([] { validate_tlv_value(Tlv{103, {0x00}}); }) == Errc::EmptyHnpList);
  Bytes bad_len{0x01, 129};
  bad_len.resize(18);
  CHECK(error_of([&] { validate_tlv_value(Tlv{103, bad_len}); }) == Errc::InvalidTlvValue);
  // IPv4 LMA address and MAC-48 link address are both legal shapes
  validate_tlv_value(make_lma_address_tlv(IpAddress::parse("192.0.2.1")));
  const std::array<std::uint8_t, 6> mac{0, 1, 2, 3, 4, 5};
  validate_tlv_value(make_lla_iid_tlv(LinkAddress::mac48(mac)));
}

TEST_CASE("message framing") {
  SUBCASE("an empty message is exactly the header") {
    const auto m = make_message("MIH_Link_Going_Down_indication", {});
    CHECK(encode_message(m).size() == kHeaderSize);
  }
  SUBCASE("payload_len is the sum of encoded TLV sizes") {
    const auto m = build_commit_request_ext(
        "mn1@example", LinkAddress::interface_id(0x0011223344556677ULL),
        IpAddress::parse("2001:db8::1"), std::vector<Prefix>{Prefix::parse("2001:db8:1::/64")}, 7);
    const auto enc = encode_message(m);
    std::size_t sum = 0;
    for (const auto& t : m.tlvs) sum += encoded_tlv_size(t);
    const auto h = decode_header(enc);
    CHECK(h.payload_len == sum);
    CHECK(enc.size() == kHeaderSize + sum);
  }
  SUBCASE("header fields out of range") {
    MihHeader h;
    h.transaction_id = 4096;
    CHECK(error_of([&] { encode_header(h); }) == Errc::FieldOutOfRange);
  }
}

TEST_CASE("decode_message errors") {
  const auto enc = encode_message(build_commit_response_ext(StatusCode{0}, 1));
  SUBCASE("payload_len beyond input") {
    Bytes cut(enc.begin(), enc.end() - 1);
    CHECK(error_of([&] { decode_message(cut); }) == Errc::Truncated);
  }
  SUBCASE("short header") {
    Bytes cut(enc.begin(), enc.begin() + 5);
    CHECK(error_of([&] { decode_message(cut); }) == Errc::Truncated);
  }
  SUBCASE("unknown aid") {
    Bytes b = enc;
    b[3] = 0xff;  // aid low octet
    CHECK(error_of([&] { decode_message(b); }) == Errc::UnknownMessageKind);
    CHECK(offset_of([&] { decode_message(b); }) == 2);
  }
  SUBCASE("missing mandatory status") {
    MihMessage m = make_message("MIH_N2N_HO_Commit_response_ext", {});
    CHECK(error_of([&] { encode_message(m); }) == Errc::MissingMandatoryTlv);
    Bytes b = encode_message(make_message("MIH_Link_Going_Down_indication", {}));
    const auto* k = Registry::builtin().find(kCommitResponseExt);
    const unsigned mid = unsigned(k->sid) << 12 | unsigned(k->opcode) << 10 | k->aid;
    b[2] = static_cast<std::uint8_t>(mid >> 8);
    b[3] = static_cast<std::uint8_t>(mid);
    CHECK(error_of([&] { decode_message(b); }) == Errc::MissingMandatoryTlv);
  }
}

TEST_CASE("extended commit request") {
  const std::vector<Prefix> hnps{Prefix::parse("2001:db8:1::/64")};
  const auto lla = LinkAddress::interface_id(0x0011223344556677ULL);
  const auto lmaa = IpAddress::parse("2001:db8::1");
  const auto m = build_commit_request_ext("mn1@example", lla, lmaa, hnps, 7);

  std::vector<std::uint8_t> codes;
  for (const auto& t : m.tlvs) codes.push_back(t.code);
  CHECK(codes == std::vector<std::uint8_t>{4, 101, 102, 103});

  CHECK(encode_message(m) == golden("commit_request_ext.hex"));
  const auto back = parse_commit_request_ext(decode_message(golden("commit_request_ext.hex")));
  CHECK(back.mn_id == "mn1@example");
  CHECK(back.lla_iid == lla);
  CHECK(back.lmaa == lmaa);
  CHECK(back.hnps == hnps);

  CHECK(error_of([&] { build_commit_request_ext("mn", lla, lmaa, {}); }) == Errc::EmptyHnpList);

  const std::vector<Prefix> two{Prefix::parse("2001:db8:1::/64"), Prefix::parse("2001:db8:2::/48")};
  const auto m2 = build_commit_request_ext("mn", lla, lmaa, two);
  CHECK(m2.find(103)->value[0] == 0x02);
}

TEST_CASE("extended commit response and status codes") {
  CHECK(build_commit_response_ext(StatusCode{0}).find(3)->value == Bytes{0});
  CHECK(StatusCode{0}.meaning() == "Handover accept or success");
  CHECK(StatusCode{130}.meaning() == "Insufficient resources");

  const auto m = decode_message(golden("commit_response_ext_130.hex"));
  CHECK(m.kind == kCommitResponseExt);
  CHECK(parse_status(m).value == 130);
  CHECK_FALSE(parse_status(m).accepted());
  CHECK(encode_message(build_commit_response_ext(StatusCode{130}, 7)) ==
        golden("commit_response_ext_130.hex"));

  const auto unassigned = decode_message(encode_message(build_commit_response_ext(StatusCode{50})));
  CHECK(parse_status(unassigned).value == 50);
  CHECK(parse_status(unassigned).meaning() == kUnassigned);
}

TEST_CASE("status totality") {
  const std::set<int> named{0, 1, 2, 3, 4, 5, 6, 128, 129, 130, 131, 132};
  int assigned = 0;
  for (int v = 0; v < 256; ++v) {
    const StatusCode s{static_cast<std::uint8_t>(v)};
    const auto m = decode_message(encode_message(build_commit_response_ext(s)));
    CHECK(parse_status(m) == s);
    CHECK(s.assigned() == (named.count(v) == 1));
    CHECK((s.meaning() != kUnassigned) == (named.count(v) == 1));
    assigned += s.assigned() ? 1 : 0;
  }
  CHECK(assigned == 12);
}

TEST_CASE("golden vectors decode and re-encode") {
  for (const char* name : {"link_going_down.hex", "long_length.hex", "commit_request_ext.hex",
                           "commit_response_ext_130.hex"}) {
    CAPTURE(name);
    const auto b = golden(name);
    CHECK(encode_message(decode_message(b)) == b);
  }
  const auto m = decode_message(golden("long_length.hex"));
  CHECK(m.header.transaction_id == 0x123);
  CHECK(m.tlvs.at(0).value.size() == 200);
}

TEST_CASE("registry is a bijection and rejects duplicates") {
  const auto& reg = Registry::builtin();
  std::set<std::tuple<int, int, int>> ids;
  for (const auto& k : reg.kinds()) {
    CHECK(ids.insert({k.sid, k.opcode, k.aid}).second);
    CHECK(reg.find(k.sid, k.opcode, k.aid)->name == k.name);
    CHECK(reg.find(k.name) != nullptr);
  }
  CHECK_THROWS_AS(Registry::parse("kind A 3 1 5 - -\nkind B 3 1 5 - -\n"), std::invalid_argument);
  CHECK_THROWS_AS(Registry::parse("kind A 3 1 5 - -\nkind A 3 1 6 - -\n"), std::invalid_argument);
}

TEST_CASE("hex dumps") {
  CHECK(from_hex("0a ff\n# comment\n10") == Bytes{0x0a, 0xff, 0x10});
  CHECK(error_of([] { from_hex("0a f"); }) == Errc::BadHex);
  CHECK(error_of([] { from_hex("0a zz"); }) == Errc::BadHex);
  CHECK(from_hex(to_hex(Bytes{1, 2, 3})) == Bytes{1, 2, 3});
}

namespace {

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

Prefix random_prefix(std::mt19937_64& rng) {
  Prefix p;
  p.length = static_cast<std::uint8_t>(rng() % 129);
  for (auto& o : p.octets) o = static_cast<std::uint8_t>(rng());
  return p;
}

Tlv random_tlv(std::mt19937_64& rng, std::uint8_t code) {
  switch (code) {
    case 3: return Tlv{3, {static_cast<std::uint8_t>(rng())}};
    case 101:
      if (rng() % 2) return make_lla_iid_tlv(LinkAddress::interface_id(rng()));
      else {
        std::array<std::uint8_t, 6> mac{};
        for (auto& o : mac) o = static_cast<std::uint8_t>(rng());
        return make_lla_iid_tlv(LinkAddress::mac48(mac));
      }
    case 102: {
      IpAddress a;
      a.family = rng() % 2 ? IpAddress::Family::V4 : IpAddress::Family::V6;
      a.octets = random_bytes(rng, a.family == IpAddress::Family::V4 ? 4 : 16);
      return make_lma_address_tlv(a);
    }
    case 103: {
      std::vector<Prefix> ps(1 + rng() % 4);
      for (auto& p : ps) p = random_prefix(rng);
      return make_hnp_list_tlv(ps);
    }
    default: {
      // mostly short values, sometimes long enough for the multi-octet length form
      const std::size_t n = rng() % 8 == 0 ? 129 + rng() % 600 : rng() % 129;
      return Tlv{code, random_bytes(rng, n)};
    }
  }
}

MihMessage random_message(std::mt19937_64& rng) {
  const auto kinds = Registry::builtin().kinds();
  const auto& kind = kinds[rng() % kinds.size()];
  std::vector<Tlv> tlvs;
  for (auto code : kind.mandatory_tlvs) tlvs.push_back(random_tlv(rng, code));
  const int extra = static_cast<int>(rng() % 5);
  for (int i = 0; i < extra; ++i) {
    std::uint8_t code;
    do {
      code = static_cast<std::uint8_t>(rng());
    } while (code == 3 && rng() % 2);  // keep some status TLVs, always well-formed
    tlvs.push_back(random_tlv(rng, code));
  }
  std::shuffle(tlvs.begin(), tlvs.end(), rng);
  auto m = make_message(kind.name, std::move(tlvs), static_cast<std::uint16_t>(rng() % 4096));
  m.header.version = static_cast<std::uint8_t>(rng() % 16);
  m.header.ack_req = rng() % 2;
  m.header.ack_rsp = rng() % 2;
  m.header.uir = rng() % 2;
  m.header.more = rng() % 2;
  m.header.fragment_no = static_cast<std::uint8_t>(rng() % 128);
  return m;
}

}  // namespace

TEST_CASE("property: message roundtrip over 1000 random messages") {
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_message(rng);
    const auto enc = encode_message(m);
    const auto back = decode_message(enc);
    REQUIRE(back == m);
    REQUIRE(enc.size() == kHeaderSize + back.header.payload_len);
  }
}

TEST_CASE("property: TLV roundtrip over 2000 random TLVs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto t = random_tlv(rng, static_cast<std::uint8_t>(rng()));
    const auto enc = encode_tlv(t);
    const auto dec = decode_tlv(enc);
    REQUIRE(dec.tlv == t);
    REQUIRE(dec.rest.empty());
  }
}

TEST_CASE("property: truncating an encoded message never decodes") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto enc = encode_message(random_message(rng));
    const auto cut = rng() % enc.size();
    Bytes b(enc.begin(), enc.begin() + static_cast<std::ptrdiff_t>(cut));
    CHECK_THROWS_AS(decode_message(b), CodecError);
  }
}
