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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace eflab::cli {

// Reports use ordered_json so key order is insertion order and two runs with
// the same inputs serialize to the same bytes.
using Json = nlohmann::ordered_json;

// Static registry of the literature results the reports exercise. Lookup
// throws std::logic_error on an unknown key so a typo cannot ship silently.
const std::string& citation_text(const std::string& key);

// Appends "citation_key" and "citation" to a report.
void attach_citation(Json& report, const std::string& key);

// RFC-style CSV: fields containing a comma, quote, CR, or LF are quoted and
// embedded quotes doubled; rows end in LF; the encoding is whatever the
// fields carry (ASCII throughout this tool).
std::string csv_field(const std::string& raw);
std::string csv_line(const std::vector<std::string>& fields);
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// Space-separated data block with a "#" header line, for plotting tools.
std::string gnuplot_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows);

// Shortest round-trip decimal rendering, identical to what the JSON writer
// emits, so CSV cells and JSON fields agree byte for byte.
std::string format_double(double v);

// Removes "--seed N" / "--seed=N" and the output-destination options
// (--output, --csv, --gnuplot, --manifest) from a stored argument list. The
// manifest carries the seed in its own field and replay re-appends it, so
// two runs differing only in seed produce manifests differing only in the
// seed field; destinations are not experiment config and are supplied again
// at replay time.
std::vector<std::string> scrub_non_config(const std::vector<std::string>& args);

Json make_manifest(const std::string& subcommand,
                   const std::vector<std::string>& args, std::uint64_t seed,
                   double wall_time_ms);

// Throws std::invalid_argument naming the first missing or mistyped field;
// an absent seed is the canonical failure.
void validate_manifest(const Json& manifest);

// Rebuilds the argv tail "subcommand args... --seed N" for re-execution.
std::vector<std::string> replay_tokens(const Json& manifest);

// Writes to the path when given, otherwise to stdout. JSON is emitted with
// two-space indentation and a trailing newline.
void emit_json(const Json& report, const std::optional<std::string>& path);
void emit_text(const std::string& text, const std::optional<std::string>& path);

}  // namespace eflab::cli
