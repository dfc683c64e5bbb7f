#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mihx::protocol {

enum class LinkKind { Air, MagMag, MagLma, MagMiis, Local };

std::string_view to_string(LinkKind k);
/// Throws std::invalid_argument.
LinkKind parse_link_kind(std::string_view text);

/// One message or local event; `t_ms` is the send time.
struct TranscriptEvent {
  double t_ms = 0;
  std::string src;
  std::string dst;
  std::string kind;
  std::int64_t size = 0;
  LinkKind link = LinkKind::Local;
  std::string note;

  friend bool operator==(const TranscriptEvent&, const TranscriptEvent&) = default;
};

class Transcript {
 public:
  void add(TranscriptEvent e) { events_.push_back(std::move(e)); }

  const std::vector<TranscriptEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  std::size_t count(std::string_view kind) const;
  bool contains(std::string_view kind) const { return count(kind) > 0; }
  /// Index of the first event of `kind` at or after `from`.
  std::optional<std::size_t> index_of(std::string_view kind, std::size_t from = 0) const;
  /// First event of `kind` whose note contains `needle`.
  const TranscriptEvent* find(std::string_view kind, std::string_view needle = {}) const;

  /// One line per event: `t_ms | src | dst | kind | size | link | note`.
  std::string to_text() const;
  /// Inverse of to_text. Blank lines and `#` comments are skipped; a
  /// malformed line throws std::invalid_argument with its line number.
  static Transcript parse(std::string_view text);

 private:
  std::vector<TranscriptEvent> events_;
};

}  // namespace mihx::protocol
