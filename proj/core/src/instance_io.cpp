#include "domir/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace domir {

namespace {

long long read_int(std::istringstream& ss, int line, const char* what) {
  long long x = 0;
  if (!(ss >> x)) throw ParseError(line, std::string("expected integer ") + what);
  return x;
}

void expect_end(std::istringstream& ss, int line) {
  std::string extra;
  if (ss >> extra) throw ParseError(line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

CapacitatedInstance parse_instance(std::istream& in) {
  std::string text;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<int> caps;
  std::vector<bool> cap_set;

  auto vertex = [&](long long id, int line) {
    if (id < 1 || id > n)
      throw ParseError(line, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(id - 1);
  };

  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream ss(text);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;

    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string kind;
      if (!(ss >> kind) || (kind != "cds" && kind != "edge"))
        throw ParseError(line_no, "malformed header, expected 'p cds <n> <m>'");
      n = read_int(ss, line_no, "n in header");
      m = read_int(ss, line_no, "m in header");
      expect_end(ss, line_no);
      if (n < 0 || m < 0 || n > (1 << 20)) throw ParseError(line_no, "malformed header, bad n or m");
      have_header = true;
      caps.assign(static_cast<std::size_t>(n), 0);
      cap_set.assign(static_cast<std::size_t>(n), false);
      continue;
    }
    if (!have_header) throw ParseError(line_no, "'" + tag + "' line before 'p' header");

    if (tag == "e") {
      Vertex u = vertex(read_int(ss, line_no, "edge endpoint"), line_no);
      Vertex v = vertex(read_int(ss, line_no, "edge endpoint"), line_no);
      expect_end(ss, line_no);
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u + 1));
      Edge key{std::min(u, v), std::max(u, v)};
      if (!seen.insert(key).second)
        throw ParseError(line_no, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      edges.push_back(key);
    } else if (tag == "w") {
      Vertex v = vertex(read_int(ss, line_no, "vertex"), line_no);
      long long c = read_int(ss, line_no, "capacity");
      expect_end(ss, line_no);
      if (c < 0) throw ParseError(line_no, "negative capacity");
      if (cap_set[v]) throw ParseError(line_no, "duplicate capacity for vertex " + std::to_string(v + 1));
      cap_set[v] = true;
      caps[v] = static_cast<int>(std::min<long long>(c, std::max<long long>(0, n - 1)));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing 'p cds <n> <m>' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(0, "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                            " were given");
  return CapacitatedInstance(Graph(static_cast<int>(n), edges), std::move(caps));
}

CapacitatedInstance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

CapacitatedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const CapacitatedInstance& inst) {
  std::ostringstream out;
  out << "p cds " << inst.n() << ' ' << inst.graph.m() << '\n';
  for (Vertex v = 0; v < inst.n(); ++v)
    if (inst.capacity[v] != 0) out << "w " << v + 1 << ' ' << inst.capacity[v] << '\n';
  for (auto [u, v] : inst.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

}  // namespace domir
