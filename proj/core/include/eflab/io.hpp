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

#include <string>

#include "eflab/graph.hpp"

namespace eflab {

// Text formats.
//
// Graph:        "n m\n" followed by m lines "u v\n", 0-based, u < v, sorted.
// Rooted tree:  "n m\nroot r\n" followed by m lines "p c\n" (parent before
//               child), sorted by (p, c).
//
// serialize_* emit exactly this canonical form; parse_* accept any
// whitespace between tokens, so serialize(parse(s)) == s for canonical s
// and parse(serialize(x)) == x always.

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

RootedTree parse_rooted_tree(const std::string& text);
std::string serialize_rooted_tree(const RootedTree& t);

// True when the second token line is a "root r" header.
bool looks_like_rooted_tree(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Graph load_graph(const std::string& path);
RootedTree load_rooted_tree(const std::string& path);

}  // namespace eflab
