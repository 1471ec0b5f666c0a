#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credalkit/errors.hpp"

namespace credalkit {

inline constexpr std::size_t kMaxFrameAtoms = 16;

/// Frame of discernment: an ordered finite set of disjoint atoms. Events are
/// subsets encoded as bitmasks over the atom order fixed here. Immutable and
/// cheap to copy.
class Frame {
 public:
  explicit Frame(std::vector<std::string> atoms) {
    if (atoms.empty() || atoms.size() > kMaxFrameAtoms)
      throw ValidationError("frame must have between 1 and 16 atoms, got " +
                            std::to_string(atoms.size()));
    for (const auto& a : atoms) {
      if (a.empty()) throw ValidationError("frame atom labels must be nonempty");
      for (char c : a)
        if (c == '+' || c == ',' || c == '{' || c == '}' ||
            std::isspace(static_cast<unsigned char>(c)))
          throw ValidationError("frame atom label \"" + a +
                                "\" contains a reserved character");
    }
    auto sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("frame atom labels must be pairwise distinct");
    atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
  }

  std::size_t size() const noexcept { return atoms_->size(); }
  std::uint32_t full_mask() const noexcept {
    return static_cast<std::uint32_t>((1u << size()) - 1);
  }
  std::size_t event_count() const noexcept { return std::size_t{1} << size(); }

  const std::vector<std::string>& atoms() const& noexcept { return *atoms_; }
  std::vector<std::string> atoms() && { return *atoms_; }
  const std::string& label(std::size_t i) const { return atoms_->at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    for (std::size_t i = 0; i < size(); ++i)
      if ((*atoms_)[i] == label) return i;
    return std::nullopt;
  }

  bool single_char_labels() const {
    return std::all_of(atoms_->begin(), atoms_->end(),
                       [](const std::string& a) { return a.size() == 1; });
  }

  /// Resolves event text to a bitmask. Accepts atoms joined by '+'
  /// ("1+2+4", "H+T"); when every atom label is a single character, bare
  /// concatenation ("124") is accepted as well.
  std::uint32_t parse_event(std::string_view text) const {
    std::uint32_t bits = 0;
    auto add_atom = [&](std::string_view tok) {
      auto idx = find(tok);
      if (!idx)
        throw ValidationError("unknown atom \"" + std::string(tok) +
                              "\" in event \"" + std::string(text) + "\"");
      std::uint32_t bit = 1u << *idx;
      if (bits & bit)
        throw ValidationError("duplicate atom \"" + std::string(tok) +
                              "\" in event \"" + std::string(text) + "\"");
      bits |= bit;
    };
    if (text.empty()) return 0;
    if (text.find('+') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string_view::npos) next = text.size();
        add_atom(text.substr(pos, next - pos));
        pos = next + 1;
      }
      return bits;
    }
    if (find(text)) {  // a full label, possibly multi-character
      add_atom(text);
      return bits;
    }
    if (!single_char_labels())
      throw ValidationError("unknown atom \"" + std::string(text) +
                            "\"; join multi-character labels with '+'");
    for (char c : text) add_atom(std::string_view(&c, 1));
    return bits;
  }

  /// Inverse of parse_event: concatenated labels when all are single
  /// characters, otherwise '+'-joined. Empty set formats as "".
  std::string format_event(std::uint32_t bits) const {
    std::string out;
    bool concat = single_char_labels();
    for (std::size_t i = 0; i < size(); ++i) {
      if (!(bits & (1u << i))) continue;
      if (!out.empty() && !concat) out += '+';
      out += (*atoms_)[i];
    }
    return out;
  }

  /// Display name for tables and reports: the full frame prints as "S".
  std::string display_event(std::uint32_t bits) const {
    if (bits == full_mask() && !find("S")) return "S";
    return format_event(bits);
  }

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
  }
  friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

/// A subset of a frame, tied to that frame.
class EventSet {
 public:
  EventSet(Frame frame, std::uint32_t bits) : frame_(std::move(frame)), bits_(bits) {
    if (bits_ > frame_.full_mask())
      throw ValidationError("event bits exceed frame size");
  }

  static EventSet parse(const Frame& frame, std::string_view text) {
    return EventSet(frame, frame.parse_event(text));
  }

  const Frame& frame() const noexcept { return frame_; }
  std::uint32_t bits() const noexcept { return bits_; }
  std::size_t cardinality() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == frame_.full_mask(); }
  bool contains_atom(std::size_t i) const { return bits_ & (1u << i); }

  EventSet complement() const { return {frame_, frame_.full_mask() & ~bits_}; }

  friend EventSet operator|(const EventSet& a, const EventSet& b) {
    a.require_same_frame(b);
    return {a.frame_, a.bits_ | b.bits_};
  }
  friend EventSet operator&(const EventSet& a, const EventSet& b) {
    a.require_same_frame(b);
    return {a.frame_, a.bits_ & b.bits_};
  }
  bool subset_of(const EventSet& o) const {
    require_same_frame(o);
    return (bits_ & ~o.bits_) == 0;
  }

  std::string to_string() const { return frame_.format_event(bits_); }

  friend bool operator==(const EventSet& a, const EventSet& b) {
    return a.frame_ == b.frame_ && a.bits_ == b.bits_;
  }

 private:
  void require_same_frame(const EventSet& o) const {
    if (frame_ != o.frame_)
      throw ValidationError("event sets belong to different frames");
  }

  Frame frame_;
  std::uint32_t bits_;
};

/// Comparator giving the column order of the classic tables: by cardinality,
/// then lexicographically by the ascending atom-index sequence
/// (1, 2, 3, 4, 12, 13, 14, 23, 24, 34, 123, ...).
inline bool table_order_less(std::uint32_t a, std::uint32_t b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

/// All nonempty events of an n-atom frame in table order.
inline std::vector<std::uint32_t> events_in_table_order(const Frame& frame) {
  std::vector<std::uint32_t> masks;
  masks.reserve(frame.event_count() - 1);
  for (std::uint32_t m = 1; m <= frame.full_mask(); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), table_order_less);
  return masks;
}

}  // namespace credalkit
