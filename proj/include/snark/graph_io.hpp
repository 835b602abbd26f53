#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "snark/multipole.hpp"

namespace snark {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Graph parse_graph6(std::string_view text);
/// Throws MultipoleError on loops or parallel edges, which graph6 cannot encode.
std::string to_graph6(const Graph& g);

Graph parse_sparse6(std::string_view text);
std::string to_sparse6(const Graph& g);

/// Line-oriented text:
///   VERTICES n
///   EDGES m          followed by m lines "a b", "a -" or "- -"
///   CONNECTORS k     followed by k lines of "edge:side" tokens
/// Blank lines and text after '#' are ignored. Positions are line numbers.
Multipole parse_multipole(std::string_view text);
std::string to_multipole_text(const Multipole& m);

/// Detects graph6 (with or without the >>graph6<< header), sparse6 (':'
/// prefix) or the multipole text format. Only the first graph of a file is
/// read.
Multipole parse_any(std::string_view text);
Graph parse_graph(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// FNV-1a over the sparse6 encoding of the canonical form.
std::uint64_t checksum(const Graph& g);
std::string checksum_hex(const Graph& g);

}  // namespace snark
