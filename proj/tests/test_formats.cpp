#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "posiso/corpus.hpp"
#include "posiso/formats.hpp"

using namespace posiso;

namespace {

// catalog encodings cross-checked against networkx 3.4.2
const std::pair<const char*, const char*> kFrozen[] = {
    {"path_2", "A_"},
    {"path_3", "Bg"},
    {"path_5", "DhC"},
    {"cycle_4", "Cl"},
    {"cycle_5", "Dhc"},
    {"complete_3", "Bw"},
    {"complete_4", "C~"},
    {"petersen", "IheA@GUAo"},
    {"rook_4x4", "O~`HW}GPHDaNaGPCcPWaN"},
    {"shrikhande", "OlfJHsHBGK_\\oHWKeBK_\\"},
    {"appendix_G", "EznW"},
    {"appendix_H", "E}]w"},
};

std::filesystem::path temp_file(const char* stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("frozen catalog encodings") {
  for (const auto& [name, g6] : kFrozen) {
    CHECK(emit_graph6(named_graph(name)) == g6);
    CHECK(parse_graph6(g6) == named_graph(name));
  }
  CHECK(emit_graph6(build_graph(1, {})) == "@");
}

TEST_CASE("round-trip identity on random graphs") {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng.below(62));  // short-form range
    Graph g = gen_gnp(n, rng.unit(), rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("long-form header boundary") {
  // n = 62 is the last short-form size, n = 63 the first long-form one
  Graph p62 = named_graph("path_62");
  std::string s62 = emit_graph6(p62);
  CHECK(s62.front() == char(62 + 63));
  CHECK(parse_graph6(s62) == p62);

  Graph p63 = named_graph("path_63");
  std::string s63 = emit_graph6(p63);
  CHECK(s63.front() == '~');
  CHECK(s63.substr(0, 4) == "~??~");  // 63 in three 6-bit groups
  CHECK(parse_graph6(s63) == p63);

  Graph p70 = named_graph("cycle_70");
  CHECK(parse_graph6(emit_graph6(p70)) == p70);
}

TEST_CASE("parser rejects malformed graph6") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);        // truncated payload
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);      // trailing characters
  CHECK_THROWS_AS(parse_graph6("B\x1fw"), ParseError);   // byte below range
  CHECK_THROWS_AS(parse_graph6("B\x7fw"), ParseError);   // byte above range
  CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);   // oversize header form
  CHECK_THROWS_AS(parse_graph6("~??B"), ParseError);     // non-minimal long form
  // the two pad bits of K3's last byte must stay zero: Bw is 0b110110+pad
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);       // nonzero padding
  CHECK_NOTHROW(parse_graph6("  Bw \n"));                // surrounding blanks ok
}

TEST_CASE("edge list round trip") {
  Graph g = named_graph("appendix_G");
  Graph back = parse_edge_list(emit_edge_list(g));
  CHECK(back == g);
  CHECK(emit_edge_list(named_graph("path_3")) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("edge list parser is strict") {
  CHECK_NOTHROW(parse_edge_list("2 1\n0 1\n"));
  CHECK_NOTHROW(parse_edge_list("2 1\n\n0 1\n\n"));          // blank lines fine
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n"), ParseError);        // missing m
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError); // fewer lines than m
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n1 0\n"), ParseError);  // extra line
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 9\n"), ParseError);     // extra token
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), ParseError);       // out of range
  CHECK_THROWS_AS(parse_edge_list("2 1\n1 1\n"), ParseError);       // loop
}

TEST_CASE("format detection") {
  CHECK(format_from_path("x.g6") == FileFormat::Graph6);
  CHECK(format_from_path("x.edges") == FileFormat::EdgeList);
  CHECK(format_from_path("x.txt") == FileFormat::EdgeList);
  CHECK_THROWS_AS(format_from_path("x.bin"), ParseError);
  CHECK(format_from_flag("g6", "whatever.bin") == FileFormat::Graph6);
  CHECK(format_from_flag("edges", "whatever.bin") == FileFormat::EdgeList);
  CHECK(format_from_flag("auto", "x.g6") == FileFormat::Graph6);
  CHECK(format_from_flag("", "x.edges") == FileFormat::EdgeList);
  CHECK_THROWS_AS(format_from_flag("yaml", "x.g6"), ParseError);
}

TEST_CASE("file io round trip and errors") {
  auto g6_path = temp_file("posiso_fmt_test.g6");
  auto edges_path = temp_file("posiso_fmt_test.edges");
  Graph g = named_graph("petersen");
  write_graph_file(g6_path, g, FileFormat::Graph6);
  write_graph_file(edges_path, g, FileFormat::EdgeList);
  CHECK(read_graph_file(g6_path, FileFormat::Graph6) == g);
  CHECK(read_graph_file(edges_path, FileFormat::EdgeList) == g);
  {
    std::ifstream in(g6_path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "IheA@GUAo");
  }
  CHECK_THROWS(read_graph_file(temp_file("posiso_no_such_file.g6"), FileFormat::Graph6));
  std::filesystem::remove(g6_path);
  std::filesystem::remove(edges_path);
}
