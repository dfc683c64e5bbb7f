#include "mihx/analytic/cost.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "mihx/analytic/errors.hpp"

namespace mihx::analytic {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a decimal number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_rational(text.substr(0, slash));
    const Rational den = parse_rational(text.substr(slash + 1));
    if (den.numerator() == 0) throw bad();
    return num / den;
  }
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw bad();
    if (num > (INT64_MAX - 9) / 10 || (seen_point && den > INT64_MAX / 10)) {
      throw std::invalid_argument("too many digits: '" + std::string(text) + "'");
    }
    seen_digit = true;
    num = num * 10 + (c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) throw bad();
  return Rational(negative ? -num : num, den);
}

std::string format_rational(const Rational& r, int digits) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, to_double(r));
  return buf;
}

void CostParams::validate() const {
  if (p_f < Rational(0) || p_f >= Rational(1)) throw DomainError("CostParams: p_f must be in [0, 1)");
  if (wired_unit <= Rational(0) || wireless_unit <= Rational(0)) {
    throw DomainError("CostParams: unit costs must be > 0");
  }
  if (h_mn_mag < 1 || h_mag_lma < 1 || h_mag_mag < 1 || h_mag_miis < 1) {
    throw DomainError("CostParams: hop counts must be >= 1");
  }
  if (n < 0 || m < 0) throw DomainError("CostParams: n and m must be >= 0");
}

Rational CostParams::retx_factor() const {
  return retx == RetxFactor::Odds ? p_f / (Rational(1) - p_f) : Rational(1) / (Rational(1) - p_f);
}

SignalingTerms signaling_terms(Solution s, const CostParams& c, const Catalog& catalog) {
  auto M = [&](std::string_view abbrev) { return catalog.size(abbrev, c.n, c.m); };
  const std::int64_t resource_check = c.m * (M("M_7") + M("M_8"));
  const std::int64_t pbu_pba = M("M_PBU") + M("M_PBA");

  SignalingTerms t;
  t.mag_miis = M("M_3") + M("M_4");
  switch (s) {
    case Solution::Standard:
      t.air = M("M_3") + M("M_4") + M("M_5") + M("M_6") + M("M_15") + M("M_16") +
              M("M_RS") + M("M_RA");
      t.mag_mag = resource_check + M("M_9") + M("M_10") + M("M_13") + M("M_14");
      t.mag_lma = M("M_17") + M("M_18") + 3 * pbu_pba;
      break;
    case Solution::Fast:
      t.air = M("M_1") + M("M_5") + M("M_6") + M("M_11") + M("M_12") + M("M_RS") + M("M_RA");
      t.mag_mag = resource_check + M("M_9") + M("M_10") + M("M_13") + M("M_14") +
                  M("M_HI") + M("M_HACK");
      t.mag_lma = 3 * pbu_pba;
      break;
    case Solution::Proposed:
      t.air = M("M_1") + M("M_2") + M("M_5") + M("M_6") + M("M_11") + M("M_12") + M("M_UNA");
      t.mag_mag = resource_check + M("M_9e") + M("M_10e") + M("M_13") + M("M_14");
      t.mag_lma = 2 * pbu_pba;
      break;
  }
  return t;
}

HandoverCost per_handover_cost(Solution s, const CostParams& c, const Catalog& catalog) {
  c.validate();
  const SignalingTerms t = signaling_terms(s, c, catalog);
  HandoverCost out;
  out.wireless = c.wireless_unit * c.retx_factor() * Rational(t.air_octet_hops(c));
  out.wired = c.wired_unit * Rational(t.wired_octet_hops(c));
  return out;
}

double total_cost(Solution s, const CostParams& c, const MobilityParams& mob,
                  const Catalog& catalog) {
  return handover_rate(mob) * to_double(per_handover_cost(s, c, catalog).total());
}

}  // namespace mihx::analytic
