#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quandles/enveloping.hpp"
#include "quandles/finite_group.hpp"
#include "quandles/quandle.hpp"

namespace quandles {

/// Malformed input text. `line` is 1-based; 0 means the file could not be
/// opened at all.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

/// Text formats. A group file is
///     group <n>
///     <n rows of n space-separated indices>
/// and a quandle file is the same with header word "quandle". A presentation
/// file is "gen <n>" followed by one "rel <x> <y> <z>" line per relation.

/// Reads the header word of a stream without consuming it ("group",
/// "quandle", ...). Throws ParseError on an empty stream.
std::string peek_format(std::istream& in);

/// Parses the raw table of a group/quandle file. No algebraic validation;
/// rejects bad headers, bad dimensions, out-of-range entries, truncation and
/// trailing garbage with a ParseError carrying the offending line.
Table parse_table(std::istream& in, const std::string& expected_header);

FiniteGroup read_group(std::istream& in);     // parse_table + check_group
FiniteQuandle read_quandle(std::istream& in); // parse_table + check_quandle

FiniteGroup read_group_file(const std::filesystem::path& path);
FiniteQuandle read_quandle_file(const std::filesystem::path& path);

void write_group(std::ostream& out, const FiniteGroup& g);
void write_quandle(std::ostream& out, const FiniteQuandle& q);
void write_presentation(std::ostream& out, const QuandlePresentation& p);

void write_group_file(const std::filesystem::path& path, const FiniteGroup& g);
void write_quandle_file(const std::filesystem::path& path, const FiniteQuandle& q);
void write_presentation_file(const std::filesystem::path& path, const QuandlePresentation& p);

} // namespace quandles
