#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "credalkit/belief.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/rational.hpp"

namespace credalkit {

struct TableOptions {
  bool bel = true;
  bool pl = true;
  bool mass = true;
};

/// "1: 0.25, 12: 0.25, S: 0.5" — focal elements in table order, full frame as S.
inline std::string format_mass_inline(const MassFunction& m) {
  std::vector<std::uint32_t> masks;
  for (const auto& [bits, v] : m.focal()) masks.push_back(bits);
  std::sort(masks.begin(), masks.end(), table_order_less);
  std::string out;
  for (std::uint32_t bits : masks) {
    if (!out.empty()) out += ", ";
    out += m.frame().display_event(bits) + ": " + decimal_string(m.at(bits));
  }
  return out;
}

/// Renders the classic Event / Bel(.) / Pl(.) / m(.) table: columns ordered by
/// cardinality then atom order, decimals without leading zero, the full frame
/// labelled S. When the Moebius vector is negative somewhere on a proper
/// subset, its full-frame entry is the forced normalization residual and is
/// printed in parentheses.
inline std::string render_capacity_table(const Capacity& c, const MobiusVector& m,
                                         TableOptions opts = {}) {
  if (c.frame() != m.frame())
    throw ValidationError("capacity and Moebius vector frames differ");
  const Frame& frame = c.frame();
  const std::vector<std::uint32_t> columns = events_in_table_order(frame);

  bool residual_parens = false;
  for (std::uint32_t s = 0; s < frame.full_mask(); ++s)
    if (m.at(s) < 0) residual_parens = true;

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Event"});
  for (std::uint32_t s : columns) rows.back().push_back(frame.display_event(s));
  if (opts.bel) {
    rows.push_back({"Bel(.)"});
    for (std::uint32_t s : columns) rows.back().push_back(table_number(c.lower(s)));
  }
  if (opts.pl) {
    rows.push_back({"Pl(.)"});
    for (std::uint32_t s : columns) rows.back().push_back(table_number(c.upper(s)));
  }
  if (opts.mass) {
    rows.push_back({"m(.)"});
    for (std::uint32_t s : columns) {
      std::string cell = table_number(m.at(s));
      if (residual_parens && s == frame.full_mask()) cell = "(" + cell + ")";
      rows.back().push_back(cell);
    }
  }

  std::vector<std::size_t> widths(columns.size() + 1, 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());

  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace credalkit
