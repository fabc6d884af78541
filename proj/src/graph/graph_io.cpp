#include "netcomm/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "netcomm/errors.hpp"

namespace netcomm {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view tok, long long& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_double(std::string_view tok, double& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw InputError("line " + std::to_string(line_no) + ": " + msg);
}

struct Entry {
  NodeId row;
  NodeId col;
  std::size_t line;
};

}  // namespace

Graph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw InputError("empty Matrix Market stream");
  ++line_no;

  const auto banner = split_ws(line);
  if (banner.size() != 5 || lower(std::string(banner[0])) != "%%matrixmarket") {
    fail(line_no, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>' banner");
  }
  const std::string object = lower(std::string(banner[1]));
  const std::string format = lower(std::string(banner[2]));
  const std::string field = lower(std::string(banner[3]));
  const std::string symmetry = lower(std::string(banner[4]));
  if (object != "matrix") fail(line_no, "unsupported object '" + object + "'");
  if (format != "coordinate") fail(line_no, "only coordinate format is supported, got '" + format + "'");
  if (field != "pattern" && field != "real" && field != "integer") {
    fail(line_no, "unsupported field '" + field + "' (pattern, real or integer)");
  }
  if (symmetry != "symmetric" && symmetry != "general") {
    fail(line_no, "unsupported symmetry '" + symmetry + "' (symmetric or general)");
  }
  const bool has_values = field != "pattern";

  long long rows = 0, cols = 0, declared = 0;
  for (;;) {
    if (!std::getline(in, line)) throw InputError("missing Matrix Market size line");
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    const auto tok = split_ws(t);
    if (tok.size() != 3 || !parse_int(tok[0], rows) || !parse_int(tok[1], cols) ||
        !parse_int(tok[2], declared) || rows < 0 || cols < 0 || declared < 0) {
      fail(line_no, "malformed size line '" + std::string(t) + "'");
    }
    break;
  }
  if (rows != cols) {
    fail(line_no, "matrix is not square (" + std::to_string(rows) + " x " +
                      std::to_string(cols) + ")");
  }

  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(declared));
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    const auto tok = split_ws(t);
    long long i = 0, j = 0;
    if (tok.size() < 2 || !parse_int(tok[0], i) || !parse_int(tok[1], j)) {
      fail(line_no, "malformed entry '" + std::string(t) + "'");
    }
    if (i < 1 || i > rows || j < 1 || j > cols) {
      fail(line_no, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside the " + std::to_string(rows) + " x " +
                        std::to_string(cols) + " matrix");
    }
    if (has_values) {
      double value = 0.0;
      if (tok.size() < 3 || !parse_double(tok[2], value)) {
        fail(line_no, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") is missing its numeric value");
      }
      // An explicitly stored zero is not an edge.
      if (value == 0.0) continue;
    }
    if (static_cast<long long>(entries.size()) >= declared) {
      fail(line_no, "more entries than the declared " + std::to_string(declared));
    }
    entries.push_back({static_cast<NodeId>(i - 1), static_cast<NodeId>(j - 1), line_no});
  }
  // Dropped zeros count toward the declared total, so only check for excess
  // above; a short file is still caught when no zeros were skipped.
  if (!has_values && static_cast<long long>(entries.size()) != declared) {
    throw InputError("expected " + std::to_string(declared) + " entries, found " +
                     std::to_string(entries.size()));
  }

  if (symmetry == "general") {
    std::vector<std::pair<NodeId, NodeId>> present;
    present.reserve(entries.size());
    for (const Entry& e : entries) present.emplace_back(e.row, e.col);
    std::sort(present.begin(), present.end());
    for (const Entry& e : entries) {
      if (!std::binary_search(present.begin(), present.end(), std::pair{e.col, e.row})) {
        fail(e.line, "pattern is not symmetric: entry (" + std::to_string(e.row + 1) + ", " +
                         std::to_string(e.col + 1) + ") has no transpose (" +
                         std::to_string(e.col + 1) + ", " + std::to_string(e.row + 1) + ")");
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(entries.size());
  for (const Entry& e : entries) edges.push_back({e.row, e.col});
  return Graph::from_edges(static_cast<std::size_t>(rows), edges);
}

Graph load_edge_list(std::istream& in, IndexBase base, std::optional<std::size_t> num_nodes) {
  const long long offset = static_cast<long long>(base);
  std::vector<Edge> edges;
  long long max_id = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#' || t.front() == '%') continue;
    const auto tok = split_ws(t);
    if (tok.size() < 2) fail(line_no, "expected 'u v', got '" + std::string(t) + "'");
    long long ids[2];
    for (int k = 0; k < 2; ++k) {
      if (!parse_int(tok[k], ids[k])) {
        fail(line_no, "non-integer token '" + std::string(tok[k]) + "'");
      }
      ids[k] -= offset;
      if (ids[k] < 0) {
        fail(line_no, "node id " + std::string(tok[k]) + " is below the index base " +
                          std::to_string(offset));
      }
      if (num_nodes && ids[k] >= static_cast<long long>(*num_nodes)) {
        fail(line_no, "node id " + std::string(tok[k]) + " exceeds the declared " +
                          std::to_string(*num_nodes) + " nodes");
      }
      max_id = std::max(max_id, ids[k]);
    }
    edges.push_back({static_cast<NodeId>(ids[0]), static_cast<NodeId>(ids[1])});
  }
  const std::size_t n = num_nodes ? *num_nodes : static_cast<std::size_t>(max_id + 1);
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.canonical_edges()) out << e.u << ' ' << e.v << '\n';
}

LoadedGraph load_graph_file(const std::filesystem::path& path, IndexBase edge_list_base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (lower(std::string(trim(first))).rfind("%%matrixmarket", 0) == 0) {
    return {load_matrix_market(in), IndexBase::one};
  }
  return {load_edge_list(in, edge_list_base), edge_list_base};
}

}  // namespace netcomm
