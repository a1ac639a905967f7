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

// tightspan: split decomposition, Buneman complexes and tight spans of
// totally split-decomposable metrics.
//
// Exit status: 0 success, 1 verification mismatch (or a failed check),
// 2 invalid input, 3 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tightspan/buneman.hpp"
#include "tightspan/errors.hpp"
#include "tightspan/export.hpp"
#include "tightspan/io.hpp"
#include "tightspan/metric.hpp"
#include "tightspan/oracle.hpp"
#include "tightspan/splits.hpp"
#include "tightspan/tight_span.hpp"

namespace ts = tightspan;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Config {
  std::string input;
  std::string output;
  std::string format = "text";
  std::string kind;
  std::size_t oracle_cap = ts::kDefaultOracleCap;
  bool allow_large_oracle = false;
  int decimal = -1;
  std::size_t split_bound = ts::kDefaultSplitBound;
  bool corrupt_drop_edge = false;
};

struct Loaded {
  ts::WeightedSplitSystem sys;
  std::optional<ts::FiniteMetric> metric;
  std::optional<ts::DecompositionResult> decomposition;
};

ts::InputKind input_kind(const Config& cfg, const std::string& text) {
  return cfg.kind.empty() ? ts::detect_kind(text) : ts::parse_input_kind(cfg.kind);
}

Loaded load(const Config& cfg) {
  const std::string text = ts::read_file(cfg.input);
  Loaded out;
  if (input_kind(cfg, text) == ts::InputKind::Splits) {
    out.sys = ts::parse_splits(text);
    return out;
  }
  out.metric = ts::FiniteMetric(ts::parse_matrix(text));
  out.decomposition = ts::decompose(*out.metric);
  out.sys = out.decomposition->system;
  return out;
}

void require_decomposable(const Loaded& in) {
  if (in.decomposition && !in.decomposition->totally_split_decomposable) {
    throw ts::InputError("the metric is not totally split-decomposable (nonzero split-prime residual)");
  }
}

void emit(const Config& cfg, const std::string& content) {
  if (cfg.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ts::InputError("cannot write '" + cfg.output + "'");
  out << content;
}

ts::ExportOptions export_options(const Config& cfg) {
  ts::ExportOptions opt;
  if (cfg.decimal >= 0) opt.decimal_digits = cfg.decimal;
  return opt;
}

std::string classification(const ts::WeightedSplitSystem& sys) {
  const auto graph = ts::incompatibility_graph(sys);
  std::string out;
  for (std::size_t c = 0; c < graph.components.size(); ++c) {
    const auto cls = ts::classify_component(sys, graph.components[c]);
    out += "component " + std::to_string(c) + ":";
    for (std::size_t i : graph.components[c]) out += " #" + std::to_string(i);
    out += " " + std::string(ts::to_string(cls.kind)) + "\n";
  }
  return out;
}

int cmd_decompose(const Config& cfg) {
  const std::string text = ts::read_file(cfg.input);
  if (input_kind(cfg, text) != ts::InputKind::Matrix) throw ts::InputError("decompose expects a distance matrix");
  const ts::FiniteMetric d(ts::parse_matrix(text));
  const ts::DecompositionResult r = ts::decompose(d);
  std::string report;
  report += "# splits: " + std::to_string(r.system.size()) + "\n";
  report += std::string("# totally split-decomposable: ") + (r.totally_split_decomposable ? "yes" : "no") + "\n";
  const bool wc = ts::is_weakly_compatible(r.system);
  report += std::string("# weakly compatible: ") + (wc ? "yes" : "no") + "\n";
  if (wc) {
    std::string classes = classification(r.system);
    for (std::size_t pos = 0; pos < classes.size();) {
      const auto end = classes.find('\n', pos);
      report += "# " + classes.substr(pos, end - pos + 1);
      pos = end + 1;
    }
  }
  if (!r.totally_split_decomposable) {
    report += "# residual:\n";
    const std::string m = ts::write_matrix(r.residual);
    for (std::size_t pos = m.find('\n') + 1; pos < m.size();) {
      const auto end = m.find('\n', pos);
      report += "#   " + m.substr(pos, end - pos + 1);
      pos = end + 1;
    }
  }
  emit(cfg, ts::write_splits(r.system) + report);
  if (!cfg.output.empty()) std::cout << report;
  return 0;
}

int cmd_check(const Config& cfg) {
  const Loaded in = load(cfg);
  std::cout << "taxa: " << in.sys.taxon_count() << ", splits: " << in.sys.size() << "\n";
  if (in.decomposition) {
    std::cout << "totally split-decomposable: " << (in.decomposition->totally_split_decomposable ? "yes" : "no")
              << "\n";
  }
  if (auto v = ts::find_weak_incompatibility(in.sys)) {
    std::cout << "weakly compatible: no (" << ts::describe(*v, in.sys) << ")\n";
    return kExitMismatch;
  }
  std::cout << "weakly compatible: yes\n" << classification(in.sys);
  return 0;
}

int cmd_buneman(const Config& cfg) {
  const Loaded in = load(cfg);
  require_decomposable(in);
  const ts::BunemanComplex bc = ts::build_buneman_complex(in.sys, cfg.split_bound);
  if (cfg.format == "json") {
    emit(cfg, ts::buneman_json(bc));
  } else if (cfg.format == "dot") {
    emit(cfg, ts::buneman_dot(bc));
  } else {
    emit(cfg, ts::buneman_text(bc));
  }
  if (!cfg.output.empty()) std::cout << ts::buneman_summary(bc);
  return 0;
}

int cmd_tightspan(const Config& cfg) {
  const Loaded in = load(cfg);
  require_decomposable(in);
  const ts::PolytopalComplex tc = ts::assemble(in.sys, cfg.split_bound);
  const auto opt = export_options(cfg);
  if (cfg.format == "json") {
    emit(cfg, ts::tight_span_json(tc, opt));
  } else if (cfg.format == "dot") {
    emit(cfg, ts::tight_span_dot(tc));
  } else {
    emit(cfg, ts::tight_span_text(tc, opt));
  }
  if (!cfg.output.empty()) std::cout << ts::tight_span_summary(tc);
  return 0;
}

int cmd_verify(const Config& cfg) {
  if (cfg.oracle_cap > ts::kDefaultOracleCap && !cfg.allow_large_oracle) {
    throw ts::InputError("--oracle-cap above " + std::to_string(ts::kDefaultOracleCap) +
                         " also needs --allow-large-oracle");
  }
  const Loaded in = load(cfg);
  require_decomposable(in);
  if (in.sys.taxon_count() > cfg.oracle_cap) {
    throw ts::LimitError("verify: " + std::to_string(in.sys.taxon_count()) + " taxa exceed the oracle cap of " +
                         std::to_string(cfg.oracle_cap) + "; pass --oracle-cap " +
                         std::to_string(in.sys.taxon_count()) + " --allow-large-oracle to run anyway");
  }
  ts::PolytopalComplex tc = ts::assemble(in.sys, cfg.split_bound);
  if (cfg.corrupt_drop_edge) {
    for (auto it = tc.cells.begin(); it != tc.cells.end(); ++it) {
      if (it->dim == 1) {
        tc.cells.erase(it);
        break;
      }
    }
  }
  const ts::ComparisonReport report = ts::compare(tc, cfg.oracle_cap);
  emit(cfg, cfg.format == "json" ? ts::report_json(report) : ts::report_text(report));
  if (!cfg.output.empty()) std::cout << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight spans of totally split-decomposable metrics", "tightspan"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool formats) {
    sub->add_option("input", cfg.input, "Distance matrix or splits file")->required();
    sub->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
    sub->add_option("--kind", cfg.kind, "Input kind; detected from the file when omitted")
        ->check(CLI::IsMember({"matrix", "splits"}));
    if (formats) {
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
    }
  };

  auto* decompose = app.add_subcommand("decompose", "Split decomposition of a distance matrix");
  add_common(decompose, false);
  auto* check = app.add_subcommand("check", "Weak compatibility and component classification");
  add_common(check, false);
  auto* buneman = app.add_subcommand("buneman", "Buneman complex of a split system");
  add_common(buneman, true);
  auto* tightspan = app.add_subcommand("tightspan", "Tight span as a polytopal complex");
  add_common(tightspan, true);
  auto* verify = app.add_subcommand("verify", "Compare the assembled tight span with the brute-force oracle");
  add_common(verify, false);
  verify->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--oracle-cap", cfg.oracle_cap, "Largest taxon count the oracle will attempt");
  verify->add_flag("--allow-large-oracle", cfg.allow_large_oracle, "Permit an oracle cap above the default");
  verify->add_flag("--corrupt-drop-edge", cfg.corrupt_drop_edge)->group("");
  for (auto* sub : {buneman, tightspan, verify}) {
    sub->add_option("--split-bound", cfg.split_bound, "Largest split count for the Buneman complex");
  }
  tightspan->add_option("--decimal", cfg.decimal, "Add k-digit decimal approximations")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*decompose) return cmd_decompose(cfg);
    if (*check) return cmd_check(cfg);
    if (*buneman) return cmd_buneman(cfg);
    if (*tightspan) return cmd_tightspan(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const ts::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
