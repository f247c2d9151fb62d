#include "tpw/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tpw/errors.hpp"

namespace tpw {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& why) {
  throw InputError("line " + std::to_string(line_no) + ": " + why);
}

std::int64_t parse_int(const std::string& s, int line_no, const char* what) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) fail(line_no, std::string("bad ") + what + " '" + s + "'");
  return v;
}

int parse_index(const std::string& s, int line_no, int limit, const char* what) {
  std::int64_t v = parse_int(s, line_no, what);
  if (v < 1 || v > limit) fail(line_no, std::string(what) + " " + s + " out of range 1.." + std::to_string(limit));
  return static_cast<int>(v - 1);
}

int parse_count(const std::string& s, int line_no, const char* what) {
  std::int64_t v = parse_int(s, line_no, what);
  if (v < 0 || v > (1 << 24)) fail(line_no, std::string(what) + " out of range");
  return static_cast<int>(v);
}

// Reads the next line that is not blank; comment handling is up to the caller.
struct LineReader {
  std::istream& in;
  int line_no = 0;
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }
};

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return line[pos] == 'c' && (pos + 1 == line.size() || line[pos + 1] == ' ' || line[pos + 1] == '\t');
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void apply_meta(InstanceMeta& meta, const std::vector<std::string>& toks, int line_no) {
  for (std::size_t i = 2; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0) fail(line_no, "meta entry '" + toks[i] + "' is not key=value");
    std::string key = toks[i].substr(0, eq);
    std::string value = toks[i].substr(eq + 1);
    try {
      if (key == "family") {
        meta.family = value;
      } else if (key == "claimed_chordal") {
        if (value != "true" && value != "false") fail(line_no, "claimed_chordal must be true or false");
        meta.claimed_chordal = value == "true";
      } else if (key == "claimed_tw") {
        meta.claimed_tw = static_cast<int>(parse_int(value, line_no, "claimed_tw"));
      } else if (key == "claimed_maxdeg_bound") {
        meta.claimed_maxdeg_bound = static_cast<int>(parse_int(value, line_no, "claimed_maxdeg_bound"));
      } else if (key == "claimed_tpw_lower") {
        meta.claimed_tpw_lower = parse_rational(value);
      } else if (key == "claimed_tpw_upper") {
        meta.claimed_tpw_upper = parse_rational(value);
      } else {
        meta.params[key] = parse_int(value, line_no, key.c_str());
      }
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      fail(line_no, msg);
    }
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto parse = [&](const std::string& s, std::int64_t& out) {
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size())
      throw InputError("bad rational '" + text + "'");
  };
  parse(num_text, num);
  if (slash != std::string::npos) parse(text.substr(slash + 1), den);
  if (den == 0) throw InputError("bad rational '" + text + "': zero denominator");
  return Rational(num, den);
}

void write_graph(std::ostream& out, const Graph& g, const InstanceMeta* meta) {
  if (meta != nullptr && !meta->family.empty()) {
    out << "c meta family=" << meta->family;
    for (const auto& [key, value] : meta->params) out << ' ' << key << '=' << value;
    if (meta->claimed_chordal) out << " claimed_chordal=" << bool_text(*meta->claimed_chordal);
    if (meta->claimed_tw) out << " claimed_tw=" << *meta->claimed_tw;
    if (meta->claimed_maxdeg_bound) out << " claimed_maxdeg_bound=" << *meta->claimed_maxdeg_bound;
    if (meta->claimed_tpw_lower) out << " claimed_tpw_lower=" << meta->claimed_tpw_lower->str();
    if (meta->claimed_tpw_upper) out << " claimed_tpw_upper=" << meta->claimed_tpw_upper->str();
    out << '\n';
  }
  if (meta != nullptr && static_cast<int>(meta->vertex_labels.size()) == g.vertex_count())
    for (int v = 0; v < g.vertex_count(); ++v) out << "c label " << v + 1 << ' ' << meta->vertex_labels[static_cast<std::size_t>(v)] << '\n';
  out << "p tpw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Instance read_graph(std::istream& in) {
  LineReader reader{in};
  std::string line;
  Instance inst;
  int n = -1;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<int, std::string>> labels;
  int label_line = 0;
  while (reader.next(line)) {
    auto toks = split_ws(line);
    if (is_comment(line)) {
      if (toks.size() >= 2 && toks[1] == "meta") {
        apply_meta(inst.meta, toks, reader.line_no);
      } else if (toks.size() >= 4 && toks[1] == "label") {
        std::int64_t v = parse_int(toks[2], reader.line_no, "label vertex");
        labels.emplace_back(static_cast<int>(v), toks[3]);
        label_line = reader.line_no;
      }
      continue;
    }
    if (toks[0] == "p") {
      if (n >= 0) fail(reader.line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "tpw") fail(reader.line_no, "expected 'p tpw <n> <m>'");
      n = parse_count(toks[2], reader.line_no, "vertex count");
      m = static_cast<std::size_t>(parse_count(toks[3], reader.line_no, "edge count"));
    } else if (toks[0] == "e") {
      if (n < 0) fail(reader.line_no, "edge before header");
      if (toks.size() != 3) fail(reader.line_no, "expected 'e <u> <v>'");
      int u = parse_index(toks[1], reader.line_no, n, "vertex");
      int v = parse_index(toks[2], reader.line_no, n, "vertex");
      if (u == v) fail(reader.line_no, "self-loop at vertex " + toks[1]);
      edges.push_back({u, v});
    } else {
      fail(reader.line_no, "unexpected line '" + line + "'");
    }
  }
  if (n < 0) throw InputError("missing 'p tpw <n> <m>' header");
  if (edges.size() != m)
    throw InputError("header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                     " were given");
  inst.graph = Graph::from_edges(n, edges);
  if (!labels.empty()) {
    inst.meta.vertex_labels.assign(static_cast<std::size_t>(n), "");
    for (const auto& [v, text] : labels) {
      if (v < 1 || v > n) fail(label_line, "label vertex out of range");
      inst.meta.vertex_labels[static_cast<std::size_t>(v - 1)] = text;
    }
  }
  return inst;
}

void write_dot(std::ostream& out, const Graph& g, const InstanceMeta* meta) {
  bool labelled = meta != nullptr && static_cast<int>(meta->vertex_labels.size()) == g.vertex_count();
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v + 1;
    if (labelled) out << " [label=\"" << meta->vertex_labels[static_cast<std::size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  out << "}\n";
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t b = 0; b < td.bags.size(); ++b) {
    out << "b " << b + 1;
    for (int v : td.bags[b]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

std::pair<TreeDecomposition, int> read_decomposition(std::istream& in) {
  LineReader reader{in};
  std::string line;
  TreeDecomposition td;
  int bag_count = -1;
  int declared_size = 0;
  int n = 0;
  std::vector<bool> seen;
  while (reader.next(line)) {
    if (is_comment(line)) continue;
    auto toks = split_ws(line);
    if (toks[0] == "s") {
      if (bag_count >= 0) fail(reader.line_no, "duplicate header");
      if (toks.size() != 5 || toks[1] != "td") fail(reader.line_no, "expected 's td <#bags> <width+1> <n>'");
      bag_count = parse_count(toks[2], reader.line_no, "bag count");
      declared_size = parse_count(toks[3], reader.line_no, "bag size");
      n = parse_count(toks[4], reader.line_no, "vertex count");
      td.bags.assign(static_cast<std::size_t>(bag_count), {});
      seen.assign(static_cast<std::size_t>(bag_count), false);
    } else if (bag_count < 0) {
      fail(reader.line_no, "content before 's td' header");
    } else if (toks[0] == "b") {
      if (toks.size() < 2) fail(reader.line_no, "expected 'b <id> <v...>'");
      int id = parse_index(toks[1], reader.line_no, bag_count, "bag id");
      if (seen[static_cast<std::size_t>(id)]) fail(reader.line_no, "bag " + toks[1] + " defined twice");
      seen[static_cast<std::size_t>(id)] = true;
      std::vector<int> bag;
      for (std::size_t i = 2; i < toks.size(); ++i) bag.push_back(parse_index(toks[i], reader.line_no, n, "vertex"));
      td.bags[static_cast<std::size_t>(id)] = make_vertex_set(std::move(bag));
    } else {
      if (toks.size() != 2) fail(reader.line_no, "expected tree edge '<id> <id>'");
      int a = parse_index(toks[0], reader.line_no, bag_count, "bag id");
      int b = parse_index(toks[1], reader.line_no, bag_count, "bag id");
      td.tree_edges.emplace_back(a, b);
    }
  }
  if (bag_count < 0) throw InputError("missing 's td' header");
  if (bag_count > 0 && td.width() + 1 != declared_size)
    throw InputError("header declares largest bag " + std::to_string(declared_size) + " but found " +
                     std::to_string(td.width() + 1));
  return {std::move(td), n};
}

void write_partition(std::ostream& out, const TreePartition& p) {
  out << "s tp " << p.bag_count() << ' ' << p.width() << ' ' << p.vertex_count() << '\n';
  for (int b = 0; b < p.bag_count(); ++b) {
    out << "b " << b + 1;
    for (int v : p.bags()[static_cast<std::size_t>(b)]) out << ' ' << v + 1;
    out << '\n';
  }
}

TreePartition read_partition(std::istream& in) {
  LineReader reader{in};
  std::string line;
  int bag_count = -1;
  int declared_width = 0;
  int n = 0;
  std::vector<VertexSet> bags;
  std::vector<bool> seen;
  while (reader.next(line)) {
    if (is_comment(line)) continue;
    auto toks = split_ws(line);
    if (toks[0] == "s") {
      if (bag_count >= 0) fail(reader.line_no, "duplicate header");
      if (toks.size() != 5 || toks[1] != "tp") fail(reader.line_no, "expected 's tp <#bags> <width> <n>'");
      bag_count = parse_count(toks[2], reader.line_no, "bag count");
      declared_width = parse_count(toks[3], reader.line_no, "width");
      n = parse_count(toks[4], reader.line_no, "vertex count");
      bags.assign(static_cast<std::size_t>(bag_count), {});
      seen.assign(static_cast<std::size_t>(bag_count), false);
    } else if (bag_count < 0) {
      fail(reader.line_no, "content before 's tp' header");
    } else if (toks[0] == "b" && toks.size() >= 2) {
      int id = parse_index(toks[1], reader.line_no, bag_count, "bag id");
      if (seen[static_cast<std::size_t>(id)]) fail(reader.line_no, "bag " + toks[1] + " defined twice");
      seen[static_cast<std::size_t>(id)] = true;
      std::vector<int> bag;
      for (std::size_t i = 2; i < toks.size(); ++i) bag.push_back(parse_index(toks[i], reader.line_no, n, "vertex"));
      bags[static_cast<std::size_t>(id)] = make_vertex_set(std::move(bag));
    } else {
      fail(reader.line_no, "expected 'b <id> <v...>'");
    }
  }
  if (bag_count < 0) throw InputError("missing 's tp' header");
  TreePartition p = TreePartition::from_bags(n, bags);
  if (p.width() != declared_width)
    throw InputError("header declares width " + std::to_string(declared_width) + " but bags give " +
                     std::to_string(p.width()));
  return p;
}

std::string to_string(const Graph& g, const InstanceMeta* meta) {
  std::ostringstream out;
  write_graph(out, g, meta);
  return out.str();
}

std::string to_string(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  write_decomposition(out, td, n);
  return out.str();
}

std::string to_string(const TreePartition& p) {
  std::ostringstream out;
  write_partition(out, p);
  return out.str();
}

}  // namespace tpw
