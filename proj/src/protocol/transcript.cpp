#include "mihx/protocol/transcript.hpp"

#include <fmt/format.h>

#include <charconv>
#include <stdexcept>

namespace mihx::protocol {

namespace {

constexpr std::pair<LinkKind, std::string_view> kLinkNames[] = {
    {LinkKind::Air, "air"},          {LinkKind::MagMag, "mag-mag"}, {LinkKind::MagLma, "mag-lma"},
    {LinkKind::MagMiis, "mag-miis"}, {LinkKind::Local, "local"},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view to_string(LinkKind k) {
  for (const auto& [v, n] : kLinkNames) {
    if (v == k) return n;
  }
  return "?";
}

LinkKind parse_link_kind(std::string_view text) {
  for (const auto& [v, n] : kLinkNames) {
    if (n == text) return v;
  }
  throw std::invalid_argument("unknown link kind '" + std::string(text) + "'");
}

std::size_t Transcript::count(std::string_view kind) const {
  std::size_t n = 0;
  for (const auto& e : events_) n += e.kind == kind ? 1 : 0;
  return n;
}

std::optional<std::size_t> Transcript::index_of(std::string_view kind, std::size_t from) const {
  for (std::size_t i = from; i < events_.size(); ++i) {
    if (events_[i].kind == kind) return i;
  }
  return std::nullopt;
}

const TranscriptEvent* Transcript::find(std::string_view kind, std::string_view needle) const {
  for (const auto& e : events_) {
    if (e.kind == kind && e.note.find(needle) != std::string::npos) return &e;
  }
  return nullptr;
}

std::string Transcript::to_text() const {
  std::string out;
  for (const auto& e : events_) {
    out += fmt::format("{:.6f} | {} | {} | {} | {} | {} | {}\n", e.t_ms, e.src, e.dst, e.kind,
                       e.size, to_string(e.link), e.note);
  }
  return out;
}

Transcript Transcript::parse(std::string_view text) {
  Transcript t;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    for (int i = 0; i < 6; ++i) {
      auto bar = line.find('|');
      if (bar == std::string_view::npos) break;
      fields.push_back(trim(line.substr(0, bar)));
      line = line.substr(bar + 1);
    }
    fields.push_back(trim(line));
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("transcript line " + std::to_string(line_no) + ": " + why);
    };
    if (fields.size() != 7) fail("expected 7 fields");

    TranscriptEvent e;
    try {
      std::size_t used = 0;
      e.t_ms = std::stod(std::string(fields[0]), &used);
      if (used != fields[0].size()) fail("bad time");
    } catch (const std::logic_error&) {
      fail("bad time");
    }
    e.src = fields[1];
    e.dst = fields[2];
    e.kind = fields[3];
    auto sz = fields[4];
    auto [p, ec] = std::from_chars(sz.data(), sz.data() + sz.size(), e.size);
    if (ec != std::errc() || p != sz.data() + sz.size()) fail("bad size");
    try {
      e.link = parse_link_kind(fields[5]);
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    e.note = fields[6];
    t.add(std::move(e));
  }
  return t;
}

}  // namespace mihx::protocol
