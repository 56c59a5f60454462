#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tourpack/graph.hpp"

namespace tourpack {

// Tournament text format:
//
//   tournament <n>
//   <row 1: n-1 chars>
//   ...
//   <row n-1: 1 char>
//
// Character t (1-based) of row i gives the pair (i-1, i-1+t): '1' is the arc
// (i-1)->(i-1+t), '0' the reverse. Every line ends in '\n'.

/// Strict parser: any byte sequence it accepts re-serializes to itself.
Tournament parse_tournament(std::string_view text);
std::string serialize_tournament(const Tournament& t);

/// One cycle per line, vertex ids separated by single spaces.
std::string serialize_packing(const CyclePacking& p);
CyclePacking parse_packing(std::string_view text);

/// One arc per line as "u v".
std::string serialize_arcs(const std::vector<Arc>& arcs);
std::vector<Arc> parse_arcs(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tourpack
