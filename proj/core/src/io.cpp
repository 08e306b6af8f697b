#include "quandles/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace quandles {

std::string peek_format(std::istream& in) {
    std::streampos start = in.tellg();
    std::string word;
    if (!(in >> word))
        throw ParseError(1, "empty input");
    in.clear();
    in.seekg(start);
    return word;
}

Table parse_table(std::istream& in, const std::string& expected_header) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "empty input");
    std::istringstream header(line);
    std::string word;
    long long n = 0;
    if (!(header >> word) || word != expected_header)
        throw ParseError(1, "expected header '" + expected_header + " <n>'");
    if (!(header >> n) || n < 1)
        throw ParseError(1, "bad dimension");
    std::string trailing;
    if (header >> trailing)
        throw ParseError(1, "trailing tokens after dimension");
    if (n > 100000)
        throw ParseError(1, "dimension too large");

    Table t;
    t.reserve(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row) {
        if (!std::getline(in, line))
            throw ParseError(row + 2, "truncated: expected " + std::to_string(n) + " rows");
        std::istringstream cells(line);
        std::vector<int> parsed;
        parsed.reserve(static_cast<std::size_t>(n));
        long long v = 0;
        while (cells >> v) {
            if (v < 0 || v >= n)
                throw ParseError(row + 2, "entry " + std::to_string(v) + " out of range 0.." +
                                              std::to_string(n - 1));
            parsed.push_back(static_cast<int>(v));
        }
        if (!cells.eof()) {
            cells.clear();
            cells >> word;
            throw ParseError(row + 2, "bad token '" + word + "'");
        }
        if (static_cast<long long>(parsed.size()) != n)
            throw ParseError(row + 2, "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(parsed.size()));
        t.push_back(std::move(parsed));
    }
    while (std::getline(in, line)) {
        std::istringstream rest(line);
        if (rest >> word)
            throw ParseError(static_cast<int>(n) + 2, "trailing content after table");
    }
    return t;
}

FiniteGroup read_group(std::istream& in) {
    return check_group(parse_table(in, "group"));
}

FiniteQuandle read_quandle(std::istream& in) {
    return check_quandle(parse_table(in, "quandle"));
}

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_table(std::ostream& out, const std::string& header, const Table& t) {
    out << header << ' ' << t.size() << '\n';
    for (const auto& row : t) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? " " : "") << row[i];
        out << '\n';
    }
}

} // namespace

FiniteGroup read_group_file(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return read_group(in);
}

FiniteQuandle read_quandle_file(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return read_quandle(in);
}

void write_group(std::ostream& out, const FiniteGroup& g) {
    write_table(out, "group", g.table());
}

void write_quandle(std::ostream& out, const FiniteQuandle& q) {
    write_table(out, "quandle", q.table());
}

void write_presentation(std::ostream& out, const QuandlePresentation& p) {
    out << "gen " << p.generator_count << '\n';
    for (const QuandleRelation& r : p.relations)
        out << "rel " << r.x << ' ' << r.y << ' ' << r.z << '\n';
}

void write_group_file(const std::filesystem::path& path, const FiniteGroup& g) {
    std::ofstream out = open_output(path);
    write_group(out, g);
}

void write_quandle_file(const std::filesystem::path& path, const FiniteQuandle& q) {
    std::ofstream out = open_output(path);
    write_quandle(out, q);
}

void write_presentation_file(const std::filesystem::path& path, const QuandlePresentation& p) {
    std::ofstream out = open_output(path);
    write_presentation(out, p);
}

} // namespace quandles
