#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "quandles/constructions.hpp"
#include "quandles/io.hpp"

using namespace quandles;

namespace {

std::string render_group(const FiniteGroup& g) {
    std::ostringstream out;
    write_group(out, g);
    return out.str();
}

std::string render_quandle(const FiniteQuandle& q) {
    std::ostringstream out;
    write_quandle(out, q);
    return out.str();
}

} // namespace

TEST_CASE("group and quandle round-trips are byte-stable") {
    FiniteGroup s3 = symmetric_group(3);
    std::string text = render_group(s3);
    std::istringstream in(text);
    FiniteGroup back = read_group(in);
    CHECK(back.table() == s3.table());
    CHECK(render_group(back) == text);

    FiniteQuandle d3 = alexander_quandle(cyclic_group(3), GroupAutomorphism{{0, 2, 1}}).quandle;
    std::string qtext = render_quandle(d3);
    CHECK(qtext == "quandle 3\n0 2 1\n2 1 0\n1 0 2\n");
    std::istringstream qin(qtext);
    CHECK(read_quandle(qin).table() == d3.table());
}

TEST_CASE("peek_format does not consume the stream") {
    std::istringstream in("group 1\n0\n");
    CHECK(peek_format(in) == "group");
    CHECK(read_group(in).order() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text, const std::string& header) {
        std::istringstream in(text);
        try {
            parse_table(in, header);
            return -1;
        } catch (const ParseError& e) {
            return e.line;
        }
    };
    CHECK(line_of("", "group") == 1);
    CHECK(line_of("grp 2\n0 1\n1 0\n", "group") == 1);   // wrong header word
    CHECK(line_of("group x\n", "group") == 1);           // bad dimension
    CHECK(line_of("group 0\n", "group") == 1);           // dimension < 1
    CHECK(line_of("group 2 2\n0 1\n1 0\n", "group") == 1);
    CHECK(line_of("group 2\n0 1\n", "group") == 3);      // truncated
    CHECK(line_of("group 2\n0 1\n1 2\n", "group") == 3); // entry out of range
    CHECK(line_of("group 2\n0 1\n1 a\n", "group") == 3); // bad token
    CHECK(line_of("group 2\n0 1 1\n1 0\n", "group") == 2);
    CHECK(line_of("group 2\n0 1\n1 0\nleftover\n", "group") == 4);
    CHECK(line_of("quandle 1\n0\n", "group") == 1);      // format mismatch
}

TEST_CASE("blank trailing lines are tolerated") {
    std::istringstream in("quandle 1\n0\n\n");
    CHECK(read_quandle(in).order() == 1);
}

TEST_CASE("semantic failures are not parse errors") {
    // parses fine, fails group validation
    std::istringstream in("group 2\n0 1\n1 1\n");
    CHECK_THROWS_AS(read_group(in), GroupError);
    std::istringstream qin("quandle 2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_quandle(qin), QuandleError);
}

TEST_CASE("file I/O round-trip") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "quandles_io_test";
    fs::create_directories(dir);

    FiniteGroup q8 = quaternion_group();
    write_group_file(dir / "q8.group", q8);
    CHECK(read_group_file(dir / "q8.group").table() == q8.table());
    CHECK_THROWS_AS(read_group_file(dir / "missing.group"), ParseError);

    fs::remove_all(dir);
}

TEST_CASE("presentation export format") {
    QuandlePresentation one = as_presentation(trivial_quandle(1));
    std::ostringstream out;
    write_presentation(out, one);
    CHECK(out.str() == "gen 1\nrel 0 0 0\n");

    FiniteQuandle d3 = alexander_quandle(cyclic_group(3), GroupAutomorphism{{0, 2, 1}}).quandle;
    std::ostringstream big;
    write_presentation(big, as_presentation(d3));
    std::string text = big.str();
    CHECK(text.rfind("gen 3\n", 0) == 0);
    CHECK(text.find("rel 0 1 2\n") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 10); // header + 9 relations
}
