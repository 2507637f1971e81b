#include "mmsc/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "mmsc/error.hpp"

namespace mmsc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

int parse_int(int line, const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) {
    parse_fail(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  std::size_t pos = 0;
  auto expect = [&](const std::string& keyword) -> const Line& {
    if (pos >= lines.size()) {
      int last = lines.empty() ? 0 : lines.back().number;
      parse_fail(last, "expected '" + keyword + "' but the file ended");
    }
    const Line& line = lines[pos];
    if (line.tokens[0] != keyword) {
      parse_fail(line.number, "expected '" + keyword + "', got '" +
                                  line.tokens[0] + "'");
    }
    ++pos;
    return line;
  };

  const Line& header = expect("mmsc");
  if (header.tokens.size() != 2 || header.tokens[1] != "1") {
    parse_fail(header.number, "unsupported format version");
  }

  const Line& graph_line = expect("graph");
  if (graph_line.tokens.size() != 3) {
    parse_fail(graph_line.number, "usage: graph <shape> <m>");
  }
  std::optional<Shape> shape = shape_from_name(graph_line.tokens[1]);
  if (!shape) {
    parse_fail(graph_line.number, "unknown shape '" + graph_line.tokens[1] + "'");
  }
  int m = parse_int(graph_line.number, graph_line.tokens[2]);
  if (m < 1) parse_fail(graph_line.number, "m must be at least 1");

  std::vector<Edge> edges;
  while (pos < lines.size() && lines[pos].tokens[0] == "edge") {
    const Line& e = lines[pos++];
    if (e.tokens.size() != 3) parse_fail(e.number, "usage: edge <a> <b>");
    edges.emplace_back(parse_int(e.number, e.tokens[1]),
                       parse_int(e.number, e.tokens[2]));
  }
  Instance inst;
  try {
    inst.graph = GoodsGraph::from_edges(*shape, m, edges);
  } catch (const Error& err) {
    parse_fail(graph_line.number, err.what());
  }

  const Line& agents_line = expect("agents");
  if (agents_line.tokens.size() != 2) {
    parse_fail(agents_line.number, "usage: agents <n>");
  }
  int n = parse_int(agents_line.number, agents_line.tokens[1]);
  if (n < 1) parse_fail(agents_line.number, "n must be at least 1");
  for (int i = 0; i < n; ++i) {
    const Line& u = expect("u");
    if (static_cast<int>(u.tokens.size()) != m + 1) {
      parse_fail(u.number, "expected " + std::to_string(m) + " utilities");
    }
    Utility row;
    for (int x = 1; x <= m; ++x) {
      try {
        row.push_back(parse_rational(u.tokens[x]));
      } catch (const Error& err) {
        parse_fail(u.number, err.what());
      }
      if (row.back() < 0) parse_fail(u.number, "utilities must be >= 0");
    }
    inst.agents.push_back(std::move(row));
  }
  if (pos < lines.size() && lines[pos].tokens[0] == "types") {
    const Line& t = lines[pos++];
    if (static_cast<int>(t.tokens.size()) != n + 1) {
      parse_fail(t.number, "expected " + std::to_string(n) + " type ids");
    }
    std::vector<int> types;
    for (int i = 1; i <= n; ++i) types.push_back(parse_int(t.number, t.tokens[i]));
    inst.types = types;
  }
  if (pos < lines.size()) {
    parse_fail(lines[pos].number, "unexpected '" + lines[pos].tokens[0] + "'");
  }
  try {
    validate_instance(inst);
  } catch (const Error& err) {
    parse_fail(lines.back().number, err.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kUsage, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "mmsc 1\n";
  out << "graph " << shape_name(inst.graph.shape()) << ' ' << inst.m() << '\n';
  Shape s = inst.graph.shape();
  if (s != Shape::kPath && s != Shape::kCycle) {
    for (auto [a, b] : inst.graph.edges()) out << "edge " << a << ' ' << b << '\n';
  }
  out << "agents " << inst.n() << '\n';
  for (const Utility& u : inst.agents) {
    out << 'u';
    for (const Rational& x : u) out << ' ' << to_string(x);
    out << '\n';
  }
  if (inst.types) {
    out << "types";
    for (int t : *inst.types) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

Instance generate_instance(const GenerateOptions& options) {
  if (options.m < 1 || options.n < 1) {
    fail(ErrorCode::kUsage, "m and n must be at least 1");
  }
  if (options.max_value < 0 || options.types < 0) {
    fail(ErrorCode::kUsage, "max value and types must be non-negative");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> value(0, options.max_value);
  auto draw_row = [&] {
    Utility row;
    for (int x = 0; x < options.m; ++x) row.emplace_back(value(rng));
    return row;
  };
  Instance inst;
  inst.graph = GoodsGraph::cycle(options.m);
  if (options.types == 0) {
    for (int i = 0; i < options.n; ++i) inst.agents.push_back(draw_row());
    return inst;
  }
  int t = std::min(options.types, options.n);
  std::vector<Utility> rows;
  for (int attempts = 0; static_cast<int>(rows.size()) < t; ++attempts) {
    if (attempts > 1000 * t) {
      fail(ErrorCode::kUsage, "cannot draw that many distinct rows");
    }
    Utility row = draw_row();
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
      rows.push_back(std::move(row));
    }
  }
  std::vector<int> types;
  for (int i = 0; i < options.n; ++i) {
    types.push_back(i % t);
    inst.agents.push_back(rows[i % t]);
  }
  inst.types = types;
  return inst;
}

}  // namespace mmsc
