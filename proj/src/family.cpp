#include "burnlab/family.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace burnlab {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Splits "a,b,c" at top-level commas (parentheses nest).
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t begin = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') depth++;
    else if (s[i] == ')') depth--;
    else if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  parts.push_back(s.substr(begin));
  return parts;
}

std::vector<int> parse_int_list(std::string_view s, const std::string& what) {
  std::vector<int> out;
  for (auto part : split_top(s)) {
    part = trim(part);
    if (part.empty()) bad("empty number in " + what);
    int value = 0;
    for (char c : part) {
      if (c < '0' || c > '9') bad("bad number '" + std::string(part) + "' in " + what);
      value = value * 10 + (c - '0');
      if (value > 1000000) bad("number too large in " + what);
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad("empty family spec");

  size_t paren = s.find('(');
  size_t colon = s.find(':');
  FamilySpec spec;

  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    if (s.back() != ')') bad("unbalanced parentheses in '" + std::string(s) + "'");
    std::string_view name = trim(s.substr(0, paren));
    std::string_view inner = s.substr(paren + 1, s.size() - paren - 2);
    // A bare-number piece belongs to the previous operand's parameter list
    // (commas separate both operands and parameters, e.g. cart(kbip:2,2,path:3)).
    std::vector<std::string> args;
    for (auto piece : split_top(inner)) {
      auto p = trim(piece);
      bool digits = !p.empty();
      for (char c : p) digits &= c >= '0' && c <= '9';
      if (digits && !args.empty())
        args.back() += "," + std::string(p);
      else
        args.emplace_back(p);
    }
    if (name == "corona") {
      if (args.size() != 1) bad("corona takes one operand");
      spec.kind = FamilyKind::corona;
    } else if (name == "join") {
      if (args.size() != 2) bad("join takes two operands");
      spec.kind = FamilyKind::join;
    } else if (name == "cart") {
      if (args.size() != 2) bad("cart takes two operands");
      spec.kind = FamilyKind::cartesian;
    } else {
      bad("unknown family '" + std::string(name) + "'");
    }
    for (auto a : args) spec.children.push_back(parse(a));
  } else {
    if (colon == std::string_view::npos)
      bad("expected 'name:args' in '" + std::string(s) + "'");
    std::string_view name = trim(s.substr(0, colon));
    std::string_view args = trim(s.substr(colon + 1));
    if (name == "file") {
      spec.kind = FamilyKind::file;
      spec.file_path = std::string(args);
      if (spec.file_path.empty()) bad("file spec needs a path");
      return spec;
    }
    if (name == "path") spec.kind = FamilyKind::path;
    else if (name == "cycle") spec.kind = FamilyKind::cycle;
    else if (name == "complete") spec.kind = FamilyKind::complete;
    else if (name == "kbip") spec.kind = FamilyKind::complete_bipartite;
    else if (name == "spider") spec.kind = FamilyKind::spider;
    else if (name == "wheel") spec.kind = FamilyKind::wheel;
    else bad("unknown family '" + std::string(name) + "'");
    spec.params = parse_int_list(args, std::string(name));
  }
  spec.validate();
  return spec;
}

void FamilySpec::validate() const {
  auto want_params = [&](size_t k, const char* name) {
    if (params.size() != k) bad(std::string(name) + ": wrong number of parameters");
  };
  switch (kind) {
    case FamilyKind::path:
      want_params(1, "path");
      if (params[0] < 1) bad("path needs n >= 1");
      break;
    case FamilyKind::cycle:
      want_params(1, "cycle");
      if (params[0] < 3) bad("cycle needs n >= 3");
      break;
    case FamilyKind::complete:
      want_params(1, "complete");
      if (params[0] < 1) bad("complete needs n >= 1");
      break;
    case FamilyKind::complete_bipartite:
      want_params(2, "kbip");
      if (params[0] < 1 || params[1] < 1) bad("kbip needs both sides >= 1");
      break;
    case FamilyKind::spider:
      if (params.size() < 3) bad("spider needs at least three legs");
      for (int leg : params)
        if (leg < 1) bad("spider legs must have length >= 1");
      break;
    case FamilyKind::wheel:
      want_params(1, "wheel");
      if (params[0] < 3) bad("wheel needs a rim of >= 3 vertices");
      break;
    case FamilyKind::corona:
      if (children.size() != 1) bad("corona takes one operand");
      children[0].validate();
      break;
    case FamilyKind::join:
    case FamilyKind::cartesian:
      if (children.size() != 2) bad("binary family takes two operands");
      children[0].validate();
      children[1].validate();
      break;
    case FamilyKind::file:
      if (file_path.empty()) bad("file spec needs a path");
      break;
  }
}

std::string FamilySpec::to_string() const {
  auto join_params = [&] {
    std::string s;
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(params[i]);
    }
    return s;
  };
  switch (kind) {
    case FamilyKind::path: return "path:" + join_params();
    case FamilyKind::cycle: return "cycle:" + join_params();
    case FamilyKind::complete: return "complete:" + join_params();
    case FamilyKind::complete_bipartite: return "kbip:" + join_params();
    case FamilyKind::spider: return "spider:" + join_params();
    case FamilyKind::wheel: return "wheel:" + join_params();
    case FamilyKind::corona: return "corona(" + children[0].to_string() + ")";
    case FamilyKind::join:
      return "join(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case FamilyKind::cartesian:
      return "cart(" + children[0].to_string() + "," + children[1].to_string() + ")";
    case FamilyKind::file: return "file:" + file_path;
  }
  return "?";
}

int spec_vertex_count(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle:
    case FamilyKind::complete:
      return spec.params[0];
    case FamilyKind::complete_bipartite:
      return spec.params[0] + spec.params[1];
    case FamilyKind::spider: {
      int total = 1;
      for (int leg : spec.params) total += leg;
      return total;
    }
    case FamilyKind::wheel:
      return spec.params[0] + 1;
    case FamilyKind::corona:
      return 2 * spec_vertex_count(spec.children[0]);
    case FamilyKind::join:
      return spec_vertex_count(spec.children[0]) + spec_vertex_count(spec.children[1]);
    case FamilyKind::cartesian:
      return spec_vertex_count(spec.children[0]) * spec_vertex_count(spec.children[1]);
    case FamilyKind::file:
      return generate(spec).vertex_count();
  }
  return 0;
}

Graph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph make_complete_bipartite(int m, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

Graph make_spider(const std::vector<int>& legs) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels = {"hub"};
  int next = 1;
  for (size_t i = 0; i < legs.size(); ++i) {
    int prev = 0;
    for (int step = 1; step <= legs[i]; ++step) {
      edges.emplace_back(prev, next);
      labels.push_back("leg" + std::to_string(i + 1) + "." + std::to_string(step));
      prev = next++;
    }
  }
  return Graph(next, edges, std::move(labels));
}

Graph make_wheel(int rim) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < rim; ++i) {
    edges.emplace_back(i, (i + 1) % rim);
    edges.emplace_back(i, rim);
    labels.push_back("rim" + std::to_string(i));
  }
  labels.push_back("hub");
  return Graph(rim + 1, edges, std::move(labels));
}

Graph corona_of(const Graph& base) {
  int n = base.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (Bits m = base.neighbors(u) & ~mask_below(u + 1); m; m &= m - 1)
      edges.emplace_back(u, lowest_bit(m));
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(base.vertex_name(v));
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, n + v);
    labels.push_back(base.vertex_name(v) + "'");
  }
  return Graph(2 * n, edges, std::move(labels));
}

Graph join_of(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < na; ++u)
    for (Bits m = a.neighbors(u) & ~mask_below(u + 1); m; m &= m - 1)
      edges.emplace_back(u, lowest_bit(m));
  for (int u = 0; u < nb; ++u)
    for (Bits m = b.neighbors(u) & ~mask_below(u + 1); m; m &= m - 1)
      edges.emplace_back(na + u, na + lowest_bit(m));
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
  return Graph(na + nb, edges);
}

Graph cartesian_of(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  auto id = [nb](int u, int v) { return u * nb + v; };
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) {
      for (Bits m = b.neighbors(v) & ~mask_below(v + 1); m; m &= m - 1)
        edges.emplace_back(id(u, v), id(u, lowest_bit(m)));
      for (Bits m = a.neighbors(u) & ~mask_below(u + 1); m; m &= m - 1)
        edges.emplace_back(id(u, v), id(lowest_bit(m), v));
    }
  std::vector<std::string> labels;
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v)
      labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
  return Graph(na * nb, edges, std::move(labels));
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::path: return make_path(spec.params[0]);
    case FamilyKind::cycle: return make_cycle(spec.params[0]);
    case FamilyKind::complete: return make_complete(spec.params[0]);
    case FamilyKind::complete_bipartite:
      return make_complete_bipartite(spec.params[0], spec.params[1]);
    case FamilyKind::spider: return make_spider(spec.params);
    case FamilyKind::wheel: return make_wheel(spec.params[0]);
    case FamilyKind::corona: return corona_of(generate(spec.children[0]));
    case FamilyKind::join:
      return join_of(generate(spec.children[0]), generate(spec.children[1]));
    case FamilyKind::cartesian:
      return cartesian_of(generate(spec.children[0]), generate(spec.children[1]));
    case FamilyKind::file: {
      std::ifstream in(spec.file_path);
      if (!in) throw std::invalid_argument("cannot open file: " + spec.file_path);
      std::ostringstream buf;
      buf << in.rdbuf();
      return Graph::from_edge_list(buf.str());
    }
  }
  throw std::invalid_argument("unhandled family kind");
}

}  // namespace burnlab
