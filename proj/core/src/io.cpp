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

#include "eflab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eflab {

namespace {

int read_int(std::istringstream& in, const char* what) {
  int value = 0;
  if (!(in >> value)) {
    throw std::runtime_error(std::string("parse error: expected ") + what);
  }
  return value;
}

void expect_end(std::istringstream& in) {
  std::string extra;
  if (in >> extra) {
    throw std::runtime_error("parse error: trailing content '" + extra + "'");
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  const int n = read_int(in, "vertex count");
  const int m = read_int(in, "edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int u = read_int(in, "edge endpoint");
    const int v = read_int(in, "edge endpoint");
    edges.emplace_back(u, v);
  }
  expect_end(in);
  Graph g(n, std::move(edges));
  if (g.edge_count() != m) {
    throw std::runtime_error("parse error: duplicate or degenerate edges");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
  return out.str();
}

RootedTree parse_rooted_tree(const std::string& text) {
  std::istringstream in(text);
  const int n = read_int(in, "vertex count");
  const int m = read_int(in, "edge count");
  std::string keyword;
  if (!(in >> keyword) || keyword != "root") {
    throw std::runtime_error("parse error: expected 'root r' line");
  }
  const int root = read_int(in, "root vertex");
  if (m != n - 1) {
    throw std::runtime_error("parse error: rooted tree needs m = n - 1");
  }
  if (n <= 0) throw std::runtime_error("parse error: rooted tree needs n >= 1");
  std::vector<int> parent(n, -1);
  std::vector<char> has_parent(n, 0);
  for (int i = 0; i < m; ++i) {
    const int p = read_int(in, "parent");
    const int c = read_int(in, "child");
    if (c < 0 || c >= n || p < 0 || p >= n) {
      throw std::runtime_error("parse error: edge endpoint out of range");
    }
    if (has_parent[c] || c == root) {
      throw std::runtime_error("parse error: vertex has two parents or root has one");
    }
    has_parent[c] = 1;
    parent[c] = p;
  }
  expect_end(in);
  return RootedTree(n, root, std::move(parent));
}

std::string serialize_rooted_tree(const RootedTree& t) {
  std::ostringstream out;
  out << t.vertex_count() << ' ' << (t.vertex_count() - 1) << '\n';
  out << "root " << t.root() << '\n';
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v != t.root()) edges.emplace_back(t.parent(v), v);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [p, c] : edges) {
    out << p << ' ' << c << '\n';
  }
  return out.str();
}

bool looks_like_rooted_tree(const std::string& text) {
  std::istringstream in(text);
  std::string a, b, c;
  if (!(in >> a >> b >> c)) return false;
  return c == "root";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

RootedTree load_rooted_tree(const std::string& path) {
  return parse_rooted_tree(read_text_file(path));
}

}  // namespace eflab
