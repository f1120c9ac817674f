// Copyright 2026 The eflab Authors.
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

#include "report.hpp"

#include <iostream>
#include <map>
#include <stdexcept>

#include "eflab/io.hpp"
#include "eflab/version.hpp"

namespace eflab::cli {

namespace {

const std::map<std::string, std::string>& registry() {
  static const std::map<std::string, std::string> table = {
      {"first-order-semantics",
       "Tarskian satisfaction for first-order sentences over finite graphs "
       "and rooted trees."},
      {"mso-semantics",
       "Monadic second-order satisfaction by direct subset enumeration "
       "(Buchi-Elgot-Trakhtenbrot tradition)."},
      {"ehrenfeucht-game",
       "k-round game equivalence coincides with agreement on all sentences "
       "of quantifier depth k (Ehrenfeucht 1961, Fraisse 1954)."},
      {"forest-union-congruence",
       "Disjoint union is a congruence for k-round game equivalence "
       "(composition method, Feferman-Vaught tradition)."},
      {"union-multiplicity-threshold",
       "Multiplicities of game-equivalent components saturate: beyond a "
       "finite threshold, adding further copies does not change the k-round "
       "class of the union."},
      {"binomial-random-graph",
       "Binomial random graph G(n, p) with independent edges "
       "(Gilbert 1959, Erdos-Renyi 1959)."},
      {"very-sparse-regime-shape",
       "For p = n^-alpha with 1 + 1/(l+1) < alpha < 1 + 1/l the graph is "
       "a.a.s. a forest whose components have at most l+1 vertices and "
       "every tree shape on at most l+1 vertices appears many times."},
      {"poisson-limit",
       "Copy counts of a strictly balanced pattern at its density threshold "
       "converge to a Poisson limit (Bollobas 1981)."},
      {"connectivity-threshold",
       "G(n, c ln n / n) is a.a.s. connected for c > 1 and a.a.s. "
       "disconnected for c < 1 (Erdos-Renyi 1959)."},
      {"diverging-tree-construction",
       "Trees of radius r whose every rooting has pairwise non-isomorphic "
       "child subtrees exist at every order in [2r, 2T(r-1)+1] and witness "
       "monadic sentences of low quantifier depth."},
      {"reference-forest",
       "A forest with a fixed multiplicity of every tree shape on at most "
       "l+1 vertices is k-round equivalent to the very sparse random graph "
       "once the multiplicity clears the union threshold."},
      {"minimal-representative-reduction",
       "Capping child multiplicities per equivalence class and collapsing "
       "ancestor-descendant repeats preserves the k-round game value of a "
       "rooted tree."},
      {"spoiler-walk-strategy",
       "Scripted Spoiler walk against an optimal Duplicator: distance "
       "doubling by midpoint halving, descent along unmatched branches of a "
       "diverging subtree, and path selection toward a duplicated branch "
       "pair."},
      {"class-count-tower-bound",
       "The number of depth-k monadic equivalence classes of graphs or "
       "rooted trees is at most an iterated-exponential tower of height "
       "k + O(log* k)."},
      {"auxiliary-counting-table",
       "Counting table for directed forests, equality patterns, and "
       "membership patterns on at most four points, behind the sharpened "
       "depth-4 tree base case."},
      {"fo-zero-one-characterization",
       "The first-order zero-one law at p = n^-alpha holds for irrational "
       "alpha and fails on the rational lines alpha = 1 + 1/l and alpha <= 1 "
       "(Shelah-Spencer 1988, Lynch 1992)."},
      {"mso-zero-one-characterization",
       "The monadic zero-one law at p = n^-alpha fails exactly on alpha <= 1 "
       "and the exceptional lines alpha = 1 + 1/l."},
      {"zero-one-law-restriction",
       "A full zero-one law restricts to every fixed quantifier depth k."},
      {"fo-k-law-small-l",
       "On the line alpha = 1 + 1/l the first-order depth-k law fails for "
       "k >= 7 whenever l <= 2 T(k-4)."},
      {"fo-k-law-small-alpha",
       "For rational alpha <= 1 the first-order depth-k law holds whenever "
       "alpha < 1/(k-2)."},
      {"fo-k-law-small-alpha-boundary",
       "At alpha = 1/(k-2) the first-order depth-k law fails."},
      {"fo-k-law-near-one",
       "For rational alpha with (2^k-3)/(2^k-2) < alpha < 1 the first-order "
       "depth-k law holds."},
      {"fo-k-law-near-one-boundary",
       "At alpha = (2^k-3)/(2^k-2) the first-order depth-k law fails."},
      {"mso-k-law-large-l",
       "On the line alpha = 1 + 1/l the monadic depth-k law holds whenever "
       "l >= T(k + log*(k+1) + 3)."},
  };
  return table;
}

}  // namespace

const std::string& citation_text(const std::string& key) {
  const auto& table = registry();
  auto it = table.find(key);
  if (it == table.end()) {
    throw std::logic_error("unregistered citation key '" + key + "'");
  }
  return it->second;
}

void attach_citation(Json& report, const std::string& key) {
  report["citation_key"] = key;
  report["citation"] = citation_text(key);
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char ch : raw) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv_line(header);
  for (const auto& row : rows) out += csv_line(row);
  return out;
}

std::string gnuplot_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::string out = "#";
  for (const auto& name : header) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string format_double(double v) { return Json(v).dump(); }

std::vector<std::string> scrub_non_config(const std::vector<std::string>& args) {
  static const std::vector<std::string> scrubbed = {
      "--seed", "--output", "--csv", "--gnuplot", "--manifest"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool skip = false;
    for (const std::string& name : scrubbed) {
      if (args[i] == name) {
        ++i;  // skip the value token too
        skip = true;
        break;
      }
      if (args[i].rfind(name + "=", 0) == 0) {
        skip = true;
        break;
      }
    }
    if (!skip) out.push_back(args[i]);
  }
  return out;
}

Json make_manifest(const std::string& subcommand,
                   const std::vector<std::string>& args, std::uint64_t seed,
                   double wall_time_ms) {
  Json config;
  config["subcommand"] = subcommand;
  config["arguments"] = scrub_non_config(args);
  Json m;
  m["config"] = config;
  m["seed"] = seed;
  m["code_version"] = std::string(kVersion);
  m["wall_time_ms"] = wall_time_ms;
  return m;
}

void validate_manifest(const Json& manifest) {
  if (!manifest.is_object()) {
    throw std::invalid_argument("manifest validation: not a JSON object");
  }
  if (!manifest.contains("config") || !manifest["config"].is_object()) {
    throw std::invalid_argument("manifest validation: missing config object");
  }
  const Json& config = manifest["config"];
  if (!config.contains("subcommand") || !config["subcommand"].is_string()) {
    throw std::invalid_argument("manifest validation: missing config.subcommand");
  }
  if (!config.contains("arguments") || !config["arguments"].is_array()) {
    throw std::invalid_argument("manifest validation: missing config.arguments");
  }
  for (const Json& a : config["arguments"]) {
    if (!a.is_string()) {
      throw std::invalid_argument("manifest validation: non-string argument");
    }
  }
  if (!manifest.contains("seed")) {
    throw std::invalid_argument("manifest validation: missing seed");
  }
  if (!manifest["seed"].is_number_integer() &&
      !manifest["seed"].is_number_unsigned()) {
    throw std::invalid_argument("manifest validation: seed is not an integer");
  }
  if (!manifest.contains("code_version") ||
      !manifest["code_version"].is_string()) {
    throw std::invalid_argument("manifest validation: missing code_version");
  }
}

std::vector<std::string> replay_tokens(const Json& manifest) {
  validate_manifest(manifest);
  std::vector<std::string> tokens;
  tokens.push_back(manifest["config"]["subcommand"].get<std::string>());
  for (const Json& a : manifest["config"]["arguments"]) {
    tokens.push_back(a.get<std::string>());
  }
  tokens.push_back("--seed");
  tokens.push_back(std::to_string(manifest["seed"].get<std::uint64_t>()));
  return tokens;
}

void emit_json(const Json& report, const std::optional<std::string>& path) {
  std::string text = report.dump(2);
  text += '\n';
  emit_text(text, path);
}

void emit_text(const std::string& text, const std::optional<std::string>& path) {
  if (path.has_value()) {
    write_text_file(*path, text);
  } else {
    std::cout << text;
  }
}

}  // namespace eflab::cli
