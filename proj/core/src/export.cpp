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

#include "tightspan/export.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace tightspan {

using nlohmann::json;

namespace {

const char* const kDimSuffix[] = {"V", "E", "F"};

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json decimal_list(const std::vector<Rational>& values, int digits) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v, digits));
  return out;
}

json labels(const GroundSet& ground, const std::vector<std::size_t>& taxa) {
  json out = json::array();
  for (std::size_t x : taxa) out.push_back(ground.label(x));
  return out;
}

json splits_json(const WeightedSplitSystem& sys) {
  json out = json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    out.push_back({{"id", i},
                   {"side", sys.ground().format(sys.split(i).side())},
                   {"complement", sys.ground().format(sys.split(i).complement())},
                   {"weight", to_string(sys.weight(i))}});
  }
  return out;
}

std::vector<std::size_t> free_splits(SplitMask free) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kMaxSplits; ++i) {
    if (free & split_bit(i)) out.push_back(i);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string split_ids(const std::vector<std::size_t>& ids) {
  std::vector<std::string> parts;
  for (std::size_t i : ids) parts.push_back("#" + std::to_string(i));
  return join(parts, ",");
}

std::string plural(std::size_t k, const std::string& one, const std::string& many) {
  return std::to_string(k) + " " + (k == 1 ? one : many);
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::vector<std::vector<std::size_t>> taxa_at(const BunemanComplex& complex) {
  std::vector<std::vector<std::size_t>> out(complex.vertices().size());
  for (std::size_t x = 0; x < complex.system().taxon_count(); ++x) out[complex.taxon_vertex(x)].push_back(x);
  return out;
}

std::string node_label(const GroundSet& ground, const std::vector<std::size_t>& taxa) {
  std::vector<std::string> parts;
  for (std::size_t x : taxa) parts.push_back(ground.label(x));
  return join(parts, ",");
}

std::string coords_text(const std::vector<Rational>& coords) {
  std::vector<std::string> parts;
  for (const auto& c : coords) parts.push_back(to_string(c));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

std::string format_counts(const std::vector<std::size_t>& counts) {
  std::vector<std::string> parts;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    parts.push_back(d < 3 ? std::to_string(counts[d]) + kDimSuffix[d]
                          : std::to_string(counts[d]) + "C" + std::to_string(d));
  }
  return join(parts, "/");
}

std::string describe_block(const TightSpanBlock& block) {
  if (block.shape == BlockShape::RhombicDodecahedron) return "rhombic dodecahedron";
  switch (block.component_class.kind) {
    case ComponentClass::Kind::Singleton:
      return "1-cube";
    case ComponentClass::Kind::StrictlyCircular:
      return std::to_string(block.component.size()) + "-cube";
    default:
      return "consistent block";
  }
}

std::string buneman_summary(const BunemanComplex& complex) {
  std::ostringstream out;
  out << format_counts(complex.cell_counts()) << "\n";
  out << plural(complex.blocks().size(), "block", "blocks") << ", " << plural(complex.cut_vertices().size(), "cut vertex", "cut vertices")
      << "\n";
  for (std::size_t b = 0; b < complex.blocks().size(); ++b) {
    const auto& block = complex.blocks()[b];
    out << "  block " << b << ": splits " << split_ids(block.component);
    if (block.component_class) out << " " << to_string(block.component_class->kind);
    out << " (" << format_counts(complex.cell_counts(b)) << ")\n";
  }
  return out.str();
}

std::string tight_span_summary(const PolytopalComplex& complex) {
  // Group blocks with identical descriptions, keeping first-seen order.
  std::vector<std::pair<std::string, std::size_t>> groups;
  std::map<std::string, std::size_t> group_of;
  for (std::size_t b = 0; b < complex.blocks.size(); ++b) {
    const std::string key = describe_block(complex.blocks[b]) + " (" + format_counts(complex.cell_counts(b)) + ")";
    auto [it, fresh] = group_of.emplace(key, groups.size());
    if (fresh) groups.emplace_back(key, 0);
    ++groups[it->second].second;
  }
  std::vector<std::string> parts;
  for (const auto& [key, count] : groups) {
    if (count == 1) {
      parts.push_back(key);
      continue;
    }
    const auto paren = key.find(" (");
    parts.push_back(std::to_string(count) + " " + key.substr(0, paren) + "s" + key.substr(paren, key.size() - paren - 1) +
                    " each)");
  }
  std::ostringstream out;
  out << plural(complex.blocks.size(), "block", "blocks") << ": " << join(parts, ", ") << "\n";
  out << "complex: " << format_counts(complex.cell_counts()) << ", " << plural(complex.cut_vertices().size(), "cut vertex", "cut vertices")
      << "\n";
  return out.str();
}

std::string buneman_json(const BunemanComplex& complex) {
  const WeightedSplitSystem& sys = complex.system();
  const auto taxa = taxa_at(complex);
  json vertices = json::array();
  for (std::size_t v = 0; v < complex.vertices().size(); ++v) {
    json chosen = json::array();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      const bool canonical = (complex.vertices()[v] & split_bit(i)) != 0;
      chosen.push_back(sys.ground().format(canonical ? sys.split(i).side() : sys.split(i).complement()));
    }
    vertices.push_back({{"id", v}, {"chosen", chosen}, {"taxa", labels(sys.ground(), taxa[v])}});
  }
  json edges = json::array();
  for (const auto& e : complex.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"split", e.split}});
  json cells = json::array();
  for (std::size_t c = 0; c < complex.cells().size(); ++c) {
    const auto& cell = complex.cells()[c];
    cells.push_back({{"id", c},
                     {"dim", cell.dim},
                     {"base", cell.base},
                     {"free", free_splits(cell.free)},
                     {"faces", cell.facets}});
  }
  json blocks = json::array();
  for (std::size_t b = 0; b < complex.blocks().size(); ++b) {
    const auto& block = complex.blocks()[b];
    blocks.push_back({{"id", b},
                      {"component", block.component},
                      {"class", block.component_class ? json(to_string(block.component_class->kind)) : json(nullptr)},
                      {"cells", block.cells},
                      {"vertices", block.vertices},
                      {"cut_vertices", block.cut_vertices}});
  }
  json out = {{"taxa", sys.ground().labels()},
              {"splits", splits_json(sys)},
              {"vertices", vertices},
              {"edges", edges},
              {"cells", cells},
              {"blocks", blocks}};
  return out.dump(2) + "\n";
}

std::string tight_span_json(const PolytopalComplex& complex, const ExportOptions& options) {
  const GroundSet& ground = complex.ground();
  json vertices = json::array();
  for (std::size_t v = 0; v < complex.vertices.size(); ++v) {
    const auto& vx = complex.vertices[v];
    json j = {{"id", v},
              {"coords", rational_list(vx.coords)},
              {"taxa", labels(ground, vx.taxa)},
              {"preimages", vx.preimages}};
    if (options.decimal_digits) j["coords_decimal"] = decimal_list(vx.coords, *options.decimal_digits);
    vertices.push_back(std::move(j));
  }
  json cells = json::array();
  for (std::size_t c = 0; c < complex.cells.size(); ++c) {
    const auto& cell = complex.cells[c];
    json j = {{"id", c}, {"dim", cell.dim}, {"vertices", cell.vertices}, {"faces", cell.facets}, {"block", cell.block}};
    if (cell.split) j["split"] = *cell.split;
    cells.push_back(std::move(j));
  }
  json blocks = json::array();
  for (std::size_t b = 0; b < complex.blocks.size(); ++b) {
    const auto& block = complex.blocks[b];
    json interior = json::array();
    for (const auto& p : block.interior_points) interior.push_back(rational_list(p));
    blocks.push_back({{"id", b},
                      {"component", block.component},
                      {"class", to_string(block.shape)},
                      {"component_class", to_string(block.component_class.kind)},
                      {"buneman_block", block.buneman_block},
                      {"cells", block.cells},
                      {"vertices", block.vertices},
                      {"cut_vertices", block.cut_vertices},
                      {"interior_points", interior}});
  }
  json out = {{"taxa", ground.labels()},
              {"splits", splits_json(complex.buneman.system())},
              {"vertices", vertices},
              {"cells", cells},
              {"blocks", blocks}};
  return out.dump(2) + "\n";
}

std::string tight_point_json(const TightPoint& point, const GroundSet& ground, const ExportOptions& options) {
  json f = json::object();
  json dec = json::object();
  for (std::size_t x = 0; x < point.values.size(); ++x) {
    f[ground.label(x)] = to_string(point.values[x]);
    if (options.decimal_digits) dec[ground.label(x)] = to_decimal(point.values[x], *options.decimal_digits);
  }
  json tight = json::array();
  for (auto [x, y] : point.tight_pairs) tight.push_back({ground.label(x), ground.label(y)});
  json out = {{"f", f}, {"tight", tight}};
  if (options.decimal_digits) out["f_decimal"] = dec;
  return out.dump(2) + "\n";
}

std::string report_json(const ComparisonReport& report) {
  json checks = json::array();
  for (const auto& c : report.cell_checks) {
    checks.push_back({{"cell", c.cell},
                      {"dim", c.dim},
                      {"face_dim", c.face_dim},
                      {"affine_dim", c.affine_dim},
                      {"centroid_tight", c.centroid_tight},
                      {"vertices_exact", c.vertices_exact},
                      {"ok", c.ok()}});
  }
  auto coord_list = [](const std::vector<std::vector<Rational>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(rational_list(p));
    return out;
  };
  auto edge_list = [](const auto& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges) out.push_back({rational_list(a), rational_list(b)});
    return out;
  };
  json out = {{"ok", report.ok()},
              {"vertices_match", report.vertices_match},
              {"edges_match", report.edges_match},
              {"vertex_count", {{"oracle", report.oracle_vertex_count}, {"structural", report.structural_vertex_count}}},
              {"edge_count", {{"oracle", report.oracle_edge_count}, {"structural", report.structural_edge_count}}},
              {"block_count", {{"oracle", report.oracle_blocks}, {"structural", report.structural_blocks}}},
              {"missing_vertices", coord_list(report.missing_vertices)},
              {"extra_vertices", coord_list(report.extra_vertices)},
              {"missing_edges", edge_list(report.missing_edges)},
              {"extra_edges", edge_list(report.extra_edges)},
              {"cell_checks", checks}};
  return out.dump(2) + "\n";
}

std::string buneman_text(const BunemanComplex& complex) {
  const WeightedSplitSystem& sys = complex.system();
  const auto taxa = taxa_at(complex);
  std::ostringstream out;
  out << buneman_summary(complex);
  out << "vertices:\n";
  for (std::size_t v = 0; v < complex.vertices().size(); ++v) {
    out << "  " << v << " ";
    for (std::size_t i = 0; i < sys.size(); ++i) out << ((complex.vertices()[v] & split_bit(i)) ? '1' : '0');
    if (!taxa[v].empty()) out << " [" << node_label(sys.ground(), taxa[v]) << "]";
    out << "\n";
  }
  out << "edges:\n";
  for (const auto& e : complex.edges()) out << "  " << e.u << " -- " << e.v << " #" << e.split << "\n";
  return out.str();
}

std::string tight_span_text(const PolytopalComplex& complex, const ExportOptions& options) {
  std::ostringstream out;
  out << tight_span_summary(complex);
  out << "vertices:\n";
  for (std::size_t v = 0; v < complex.vertices.size(); ++v) {
    const auto& vx = complex.vertices[v];
    std::vector<std::string> coords;
    for (const auto& c : vx.coords) {
      coords.push_back(to_string(c) + (options.decimal_digits ? "~" + to_decimal(c, *options.decimal_digits) : ""));
    }
    out << "  " << v << " (" << join(coords, ", ") << ")";
    if (!vx.taxa.empty()) out << " [" << node_label(complex.ground(), vx.taxa) << "]";
    out << "\n";
  }
  out << "blocks:\n";
  for (std::size_t b = 0; b < complex.blocks.size(); ++b) {
    const auto& block = complex.blocks[b];
    out << "  " << b << ": " << describe_block(block) << ", splits " << split_ids(block.component) << ", "
        << format_counts(complex.cell_counts(b));
    if (!block.cut_vertices.empty()) {
      std::vector<std::string> ids;
      for (std::size_t v : block.cut_vertices) ids.push_back(std::to_string(v));
      out << ", cut vertices " << join(ids, ",");
    }
    out << "\n";
  }
  return out.str();
}

std::string report_text(const ComparisonReport& report) {
  std::ostringstream out;
  auto verdict = [](bool ok) { return ok ? "match" : "MISMATCH"; };
  out << "vertices: " << verdict(report.vertices_match) << " (oracle " << report.oracle_vertex_count
      << ", structural " << report.structural_vertex_count << ")\n";
  for (const auto& p : report.missing_vertices) out << "  missing " << coords_text(p) << "\n";
  for (const auto& p : report.extra_vertices) out << "  extra " << coords_text(p) << "\n";
  out << "edges: " << verdict(report.edges_match) << " (oracle " << report.oracle_edge_count << ", structural "
      << report.structural_edge_count << ", " << report.missing_edges.size() << " missing, "
      << report.extra_edges.size() << " extra)\n";
  out << "blocks: " << verdict(report.blocks_match()) << " (oracle " << report.oracle_blocks << ", structural "
      << report.structural_blocks << ")\n";
  std::size_t bad = 0;
  for (const auto& c : report.cell_checks) bad += !c.ok();
  out << "cells: " << report.cell_checks.size() << " checked, " << bad << " failed\n";
  for (const auto& c : report.cell_checks) {
    if (c.ok()) continue;
    out << "  cell " << c.cell << " dim " << c.dim << ": face dim " << c.face_dim << ", affine dim " << c.affine_dim
        << (c.centroid_tight ? "" : ", centroid not tight") << (c.vertices_exact ? "" : ", vertex set differs")
        << "\n";
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string buneman_dot(const BunemanComplex& complex) {
  const auto taxa = taxa_at(complex);
  std::ostringstream out;
  out << "graph buneman {\n  node [shape=point];\n";
  for (std::size_t v = 0; v < complex.vertices().size(); ++v) {
    out << "  v" << v;
    if (!taxa[v].empty()) {
      out << " [shape=circle, label=\"" << dot_escape(node_label(complex.system().ground(), taxa[v])) << "\"]";
    }
    out << ";\n";
  }
  for (const auto& e : complex.edges()) out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.split << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string tight_span_dot(const PolytopalComplex& complex) {
  std::ostringstream out;
  out << "graph tight_span {\n  node [shape=point];\n";
  for (std::size_t v = 0; v < complex.vertices.size(); ++v) {
    const auto& vx = complex.vertices[v];
    out << "  v" << v;
    if (!vx.taxa.empty()) out << " [shape=circle, label=\"" << dot_escape(node_label(complex.ground(), vx.taxa)) << "\"]";
    out << ";\n";
  }
  for (const auto& c : complex.cells) {
    if (c.dim != 1) continue;
    out << "  v" << c.vertices[0] << " -- v" << c.vertices[1] << " [label=\"" << *c.split << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tightspan
