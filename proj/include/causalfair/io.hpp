#pragma once

#include <iosfwd>
#include <string>

#include "causalfair/equivalence.hpp"
#include "causalfair/scm.hpp"

namespace causalfair {

//! Graph text format: one `A -> B` or `A -- B` edge per line, `node A`
//! for isolated vertices, `#` comments, UTF-8 with LF endings. Errors
//! carry 1-based line numbers.
PartiallyDirectedGraph parse_graph(std::istream& in, std::string_view source = "<input>");
PartiallyDirectedGraph parse_graph_file(const std::string& path);

//! Serialises so that parsing the output reproduces the graph exactly,
//! vertex order included.
std::string write_graph(const PartiallyDirectedGraph& g);
void write_graph_file(const PartiallyDirectedGraph& g, const std::string& path);

//! Background-knowledge files reuse the graph grammar restricted to
//! directed edges.
BackgroundKnowledge parse_background(std::istream& in,
                                     std::string_view source = "<input>");
BackgroundKnowledge parse_background_file(const std::string& path);

//! Dataset CSV: header row of column names, one sample per row, floats at
//! full precision. The companion noise matrix lives next to the data file
//! with `.csv` replaced by `.noise.csv`.
Dataset read_csv(std::istream& in, std::string_view source = "<input>");
Dataset read_csv_file(const std::string& path);

std::string write_csv(const Dataset& data);
void write_csv_file(const Dataset& data, const std::string& path);

//! `data.csv` -> `data.noise.csv` (appends when there is no `.csv`).
std::string noise_path_for(const std::string& data_path);

}  // namespace causalfair
