#include "causalfair/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace causalfair {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

[[noreturn]] void parse_fail(std::string_view source, int line_no,
                             const std::string& what) {
  throw Error(ErrorKind::parse,
              std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  return in;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void format_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

//! Shared line scanner for graph and background files.
template <typename OnNode, typename OnDirected, typename OnUndirected>
void scan_graph_lines(std::istream& in, std::string_view source, OnNode on_node,
                      OnDirected on_directed, OnUndirected on_undirected) {
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_cr(raw);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    try {
      if (tokens.size() == 2 && tokens[0] == "node") {
        on_node(tokens[1]);
      } else if (tokens.size() == 3 && tokens[1] == "->") {
        on_directed(tokens[0], tokens[2]);
      } else if (tokens.size() == 3 && tokens[1] == "--") {
        on_undirected(tokens[0], tokens[2]);
      } else {
        parse_fail(source, line_no, "expected 'A -> B', 'A -- B' or 'node A'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::duplicate_adjacency) throw;  // keeps its own kind
      if (e.kind() == ErrorKind::parse) throw;
      parse_fail(source, line_no, e.what());
    }
  }
}

}  // namespace

PartiallyDirectedGraph parse_graph(std::istream& in, std::string_view source) {
  GraphBuilder builder;
  scan_graph_lines(
      in, source, [&](const std::string& a) { builder.add_node(a); },
      [&](const std::string& a, const std::string& b) { builder.add_directed(a, b); },
      [&](const std::string& a, const std::string& b) { builder.add_undirected(a, b); });
  return builder.build();
}

PartiallyDirectedGraph parse_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_graph(in, path);
}

std::string write_graph(const PartiallyDirectedGraph& g) {
  std::string out;
  for (const auto& name : g.node_names()) {
    out += "node ";
    out += name;
    out += '\n';
  }
  for (const auto& [t, h] : g.directed_edges()) {
    out += g.name_of(t);
    out += " -> ";
    out += g.name_of(h);
    out += '\n';
  }
  for (const auto& [a, b] : g.undirected_edges()) {
    out += g.name_of(a);
    out += " -- ";
    out += g.name_of(b);
    out += '\n';
  }
  return out;
}

void write_graph_file(const PartiallyDirectedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
  out << write_graph(g);
}

BackgroundKnowledge parse_background(std::istream& in, std::string_view source) {
  std::vector<std::pair<std::string, std::string>> edges;
  int line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_cr(raw);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[1] != "->")
      parse_fail(source, line_no, "background knowledge lines must read 'A -> B'");
    if (tokens[0] == tokens[2])
      parse_fail(source, line_no, "background edge is a self-loop");
    edges.emplace_back(tokens[0], tokens[2]);
  }
  return BackgroundKnowledge::from_edges(std::move(edges));
}

BackgroundKnowledge parse_background_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_background(in, path);
}

Dataset read_csv(std::istream& in, std::string_view source) {
  std::string raw;
  if (!std::getline(in, raw))
    throw Error(ErrorKind::parse, std::string(source) + ": empty CSV");
  Dataset data;
  {
    std::istringstream header(strip_cr(raw));
    std::string cell;
    while (std::getline(header, cell, ',')) data.columns.push_back(cell);
  }
  const std::size_t width = data.columns.size();

  std::vector<double> cells;
  int line_no = 1;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = strip_cr(raw);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        cells.push_back(v);
      } catch (const std::exception&) {
        parse_fail(source, line_no, "not a number: '" + cell + "'");
      }
      ++count;
    }
    if (count != width)
      parse_fail(source, line_no,
                 "expected " + std::to_string(width) + " cells, found " +
                     std::to_string(count));
  }
  const std::size_t rows = width == 0 ? 0 : cells.size() / width;
  data.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < width; ++c)
      data.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cells[r * width + c];
  return data;
}

Dataset read_csv_file(const std::string& path) {
  auto in = open_or_throw(path);
  Dataset data = read_csv(in, path);
  std::ifstream noise_in(noise_path_for(path));
  if (noise_in) {
    Dataset noise = read_csv(noise_in, noise_path_for(path));
    if (noise.columns == data.columns && noise.values.rows() == data.values.rows())
      data.noise = std::move(noise.values);
  }
  return data;
}

std::string write_csv(const Dataset& data) {
  std::string out;
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c) out += ',';
    out += data.columns[c];
  }
  out += '\n';
  for (Eigen::Index r = 0; r < data.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < data.values.cols(); ++c) {
      if (c) out += ',';
      format_double(out, data.values(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_csv_file(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
  out << write_csv(data);
}

std::string noise_path_for(const std::string& data_path) {
  constexpr std::string_view suffix = ".csv";
  if (data_path.size() >= suffix.size() &&
      data_path.compare(data_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return data_path.substr(0, data_path.size() - suffix.size()) + ".noise.csv";
  return data_path + ".noise.csv";
}

}  // namespace causalfair
