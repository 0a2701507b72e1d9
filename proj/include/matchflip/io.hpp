#pragma once

#include <string>
#include <string_view>

#include "matchflip/cograph.hpp"
#include "matchflip/generators.hpp"
#include "matchflip/hardness.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

/// Instance JSON: {"n", "edges", "m_ini", "m_tar", "hints": {"strong_order"?,
/// "boundary_order"?}}. Throws ParseError for bad JSON or shapes, and the
/// graph / matching errors for invalid content.
Instance parse_instance(std::string_view text);
/// Compact JSON with a trailing newline; deterministic.
std::string write_instance(const Instance& inst);

/// Sequence JSON: {"mode", "k"?, "moves": [{"flip": [...]} |
/// {"slide": {"remove": [u, v], "add": [v, w]}}]}. Throws ParseError.
ReconfigSequence parse_sequence(std::string_view text);
std::string write_sequence(const ReconfigSequence& seq);

/// A machine with its two configurations.
struct NclInstance {
  NclMachine machine;
  NclConfiguration c_ini;
  NclConfiguration c_tar;
};

/// NCL JSON: {"vertices": [{"id", "type"}], "edges": [{"u", "v", "w"}],
/// "c_ini": [{"edge", "head"}], "c_tar": [...]}. Vertex ids are arbitrary
/// distinct integers, mapped to indices in listed order. Throws ParseError,
/// MalformedMachine for unknown or repeated ids, InvalidConfiguration for
/// configurations that do not give every edge one head.
NclInstance parse_ncl(std::string_view text);
std::string write_ncl(const NclInstance& ncl);

/// Nested JSON: {"leaf": v} or {"union"|"join": [left, right]}.
std::string write_cotree(const Cotree& t);

/// Whole file as a string. Throws ParseError when it cannot be read.
std::string read_file(const std::string& path);
/// Throws ParseError when it cannot be written.
void write_file(const std::string& path, std::string_view text);

}  // namespace matchflip
