// Copyright 2026 The tightspan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tightspan/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "tightspan/errors.hpp"

namespace tightspan {

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({number, std::string(raw)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = s.find(sep, pos);
    out.emplace_back(trim(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

GroundSet parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw InputError("empty input: expected a 'taxa:' header");
  const Line& head = lines.front();
  if (head.text.rfind("taxa:", 0) != 0) fail(head.number, "expected a 'taxa:' header");
  try {
    return GroundSet(words(std::string_view(head.text).substr(5)));
  } catch (const InputError& e) {
    fail(head.number, e.what());
  }
}

Rational parse_number(const Line& line, std::string_view token) {
  try {
    return parse_rational(token);
  } catch (const InputError& e) {
    fail(line.number, e.what());
  }
}

}  // namespace

std::string_view to_string(InputKind kind) { return kind == InputKind::Matrix ? "matrix" : "splits"; }

InputKind parse_input_kind(std::string_view name) {
  if (name == "matrix") return InputKind::Matrix;
  if (name == "splits") return InputKind::Splits;
  throw InputError("unknown input kind '" + std::string(name) + "' (expected matrix or splits)");
}

InputKind detect_kind(std::string_view text) {
  const auto lines = content_lines(text);
  parse_header(lines);
  if (lines.size() < 2) return InputKind::Splits;
  return lines[1].text.find(':') != std::string::npos ? InputKind::Splits : InputKind::Matrix;
}

WeightedSplitSystem parse_splits(std::string_view text) {
  const auto lines = content_lines(text);
  GroundSet ground = parse_header(lines);
  const std::size_t n = ground.size();
  std::vector<Split> splits;
  std::vector<Rational> weights;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto colon = line.text.find(':');
    if (colon == std::string::npos) fail(line.number, "expected '<weight> : <labels>'");
    const Rational w = parse_number(line, trim(std::string_view(line.text).substr(0, colon)));
    if (w <= 0) fail(line.number, "split weight must be positive, got " + to_string(w));
    TaxonMask side = 0;
    for (const std::string& label : split_on(std::string_view(line.text).substr(colon + 1), ',')) {
      if (label.empty()) fail(line.number, "empty taxon label in split");
      const auto x = ground.find(label);
      if (!x) fail(line.number, "unknown taxon '" + label + "'");
      if (side & taxon_bit(*x)) fail(line.number, "taxon '" + label + "' listed twice");
      side |= taxon_bit(*x);
    }
    if (side == full_mask(n)) fail(line.number, "a split side must be a proper subset of the taxa");
    Split s(side, n);
    for (std::size_t j = 0; j < splits.size(); ++j) {
      if (splits[j] == s) fail(line.number, "duplicate split " + ground.format(s.side()));
    }
    splits.push_back(s);
    weights.push_back(w);
  }
  return WeightedSplitSystem(std::move(ground), std::move(splits), std::move(weights));
}

DistanceMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  GroundSet ground = parse_header(lines);
  const std::size_t n = ground.size();
  if (lines.size() - 1 != n) {
    const std::size_t at = lines.size() > n + 1 ? lines[n + 1].number : lines.back().number;
    fail(at, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (std::size_t r = 1; r <= n; ++r) {
    const auto row = words(lines[r].text);
    if (row.size() != n) {
      fail(lines[r].number, "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    }
    for (const auto& token : row) entries.push_back(parse_number(lines[r], token));
  }
  return DistanceMatrix(std::move(ground), std::move(entries));
}

std::string write_splits(const WeightedSplitSystem& sys) {
  std::string out = "taxa:";
  for (const auto& label : sys.ground().labels()) out += " " + label;
  out += "\n";
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out += to_string(sys.weight(i)) + " :";
    std::string sep = " ";
    for (std::size_t x = 0; x < sys.taxon_count(); ++x) {
      if (!sys.split(i).in_side(x)) continue;
      out += sep + sys.ground().label(x);
      sep = ",";
    }
    out += "\n";
  }
  return out;
}

std::string write_matrix(const DistanceMatrix& m) {
  std::string out = "taxa:";
  for (const auto& label : m.ground().labels()) out += " " + label;
  out += "\n";
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y) out += (y ? " " : "") + to_string(m(x, y));
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tightspan
