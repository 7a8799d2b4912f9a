// Copyright 2026 The hqc Authors
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

#include "hqc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "hqc/detection.hpp"
#include "hqc/fixture.hpp"
#include "hqc/gatecost.hpp"
#include "hqc/hypergraph.hpp"
#include "hqc/reports.hpp"
#include "hqc/statesim.hpp"

namespace hqc::cli {

namespace {

struct Invocation {
  std::string graph_path;
  std::string errors_csv;
  int size = -1;
  int modulus_override = 0;
  std::string output = "text";
};

GraphFile load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + path);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

std::vector<VertexId> parse_csv(const std::string& csv) {
  std::vector<VertexId> result;
  if (csv.empty()) return result;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex id in error list: \"" + item + "\"");
    }
    if (used != item.size()) {
      throw std::invalid_argument("bad vertex id in error list: \"" + item + "\"");
    }
    result.push_back(value);
  }
  return result;
}

Modulus effective_modulus(const GraphFile& file, int override_value) {
  return override_value > 0 ? Modulus(override_value) : file.modulus;
}

void print_tuple_text(std::ostream& out, const GroupTuple& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out << ' ';
    const int label =
        tuple.labels().empty() ? static_cast<int>(i) : tuple.labels()[i];
    out << label << '=' << tuple.value(i);
  }
}

void emit(std::ostream& out, const Invocation& inv, const Json& report) {
  if (inv.output == "json") out << report.dump() << '\n';
}

int run_check(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  const ErrorConfiguration errors(parse_csv(inv.errors_csv));
  const DetectionVerdict verdict = is_detected(file.graph, errors, d);
  if (inv.output == "json") {
    emit(out, inv, verdict_json(errors, d, verdict));
  } else if (verdict.detected) {
    out << "detected\n";
  } else {
    out << "undetected\nwitness: ";
    print_tuple_text(out, *verdict.witness);
    out << '\n';
  }
  return verdict.detected ? 0 : 1;
}

int run_enumerate(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  const EnumerationReport report = enumerate_detected(file.graph, inv.size, d);
  if (inv.output == "json") {
    emit(out, inv, enumeration_json(file, d, report));
  } else {
    out << "size " << report.size << ": " << report.total << " configurations, "
        << report.detected_count << " detected, " << report.undetected.size()
        << " undetected\n";
    for (const EnumerationEntry& entry : report.undetected) {
      out << "undetected:";
      for (VertexId v : entry.config) out << ' ' << v;
      out << "  witness: ";
      print_tuple_text(out, entry.witness);
      out << '\n';
    }
  }
  return 0;
}

int run_radius(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  const int radius = detection_radius(file.graph, d);
  if (inv.output == "json") {
    Json report;
    report["modulus"] = d.value();
    report["radius"] = radius;
    emit(out, inv, report);
  } else {
    out << radius << '\n';
  }
  return 0;
}

int run_cost(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const CostReport report = compare(file.graph);
  if (inv.output == "json") {
    emit(out, inv, cost_json(report));
  } else {
    for (const CostReport::Entry& entry : report.per_edge) {
      out << "edge size " << entry.edge_size << ": hyper " << entry.hyper
          << ", clique " << entry.clique << '\n';
    }
    out << "total hyper " << report.total_hyper << ", total clique "
        << report.total_clique << ", advantage " << report.advantage << '\n';
  }
  return 0;
}

int run_state(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  const StateVector state = hypergraph_state(file.graph, d);
  if (inv.output == "json") {
    emit(out, inv, state_json(state));
  } else {
    out << "sites:";
    for (VertexId v : state.sites) out << ' ' << v;
    out << '\n' << std::setprecision(12);
    for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
      out << '|';
      for (std::size_t p = 0; p < state.sites.size(); ++p) {
        out << state.digit(idx, p);
      }
      out << "> " << state.amplitudes[idx].real() << ' '
          << state.amplitudes[idx].imag() << '\n';
    }
  }
  return 0;
}

int run_stabilizers(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  bool all_hold = true;
  Json results = Json::object();
  for (VertexId v : file.graph.all_vertices()) {
    const bool ok = verify_stabilizer(file.graph, v, d);
    all_hold = all_hold && ok;
    results[std::to_string(v)] = ok;
  }
  if (inv.output == "json") {
    Json report;
    report["results"] = std::move(results);
    report["all_hold"] = all_hold;
    emit(out, inv, report);
  } else {
    for (const auto& [vertex, ok] : results.items()) {
      out << vertex << ": " << (ok.get<bool>() ? "ok" : "broken") << '\n';
    }
  }
  return all_hold ? 0 : 1;
}

int run_oracle(const Invocation& inv, std::ostream& out) {
  const GraphFile file = load_graph(inv.graph_path);
  const Modulus d = effective_modulus(file, inv.modulus_override);
  const ErrorConfiguration errors(parse_csv(inv.errors_csv));
  const FactorizationReport report = kl_factorization_check(file.graph, errors, d);
  if (inv.output == "json") {
    emit(out, inv, oracle_json(errors, d, report));
  } else if (report.factorizes) {
    out << "factorizes (max deviation " << report.max_deviation << ")\n";
  } else {
    out << "does not factorize (max deviation " << report.max_deviation
        << ")\noffending pair: g ";
    print_tuple_text(out, *report.offending_g);
    out << " | h ";
    print_tuple_text(out, *report.offending_h);
    out << '\n';
  }
  return report.factorizes ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"hypergraph code toolkit"};
  app.require_subcommand(1);

  Invocation inv;
  auto add_common = [&](CLI::App* sub, bool with_modulus = true) {
    sub->add_option("--graph", inv.graph_path, "graph file (JSON)")->required();
    if (with_modulus) {
      sub->add_option("--modulus", inv.modulus_override,
                      "override the graph file's modulus");
    }
    sub->add_option("--output", inv.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "decide detection of one error configuration");
  add_common(check);
  check->add_option("--errors", inv.errors_csv, "comma-separated output vertices")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "scan every configuration of a given size");
  add_common(enumerate);
  enumerate->add_option("--size", inv.size, "configuration size")->required();

  CLI::App* radius = app.add_subcommand("radius", "largest size below which all configurations are detected");
  add_common(radius);

  CLI::App* cost = app.add_subcommand("cost", "controlled-Z cost versus the clique expansion");
  add_common(cost, /*with_modulus=*/false);

  CLI::App* state = app.add_subcommand("state", "dump the graph state amplitudes");
  add_common(state);

  CLI::App* stabilizers = app.add_subcommand("stabilizers", "verify the per-vertex stabilizers");
  add_common(stabilizers);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force factorization check of one configuration");
  add_common(oracle);
  oracle->add_option("--errors", inv.errors_csv, "comma-separated output vertices")->required();

  CLI::App* fixture = app.add_subcommand("fixture", "print the built-in demonstration code");
  (void)fixture;

  std::vector<const char*> argv;
  argv.push_back("hqc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return run_check(inv, out);
    if (enumerate->parsed()) return run_enumerate(inv, out);
    if (radius->parsed()) return run_radius(inv, out);
    if (cost->parsed()) return run_cost(inv, out);
    if (state->parsed()) return run_state(inv, out);
    if (stabilizers->parsed()) return run_stabilizers(inv, out);
    if (oracle->parsed()) return run_oracle(inv, out);
    out << builtin_fixture_text() << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hqc::cli
