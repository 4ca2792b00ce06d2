#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "spectral/io.hpp"
#include "spectral/isomorphism.hpp"
#include "support.hpp"

using namespace spectral;
using spectral::testing::random_graph;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(write_graph6(complete(4)), "C~");
  EXPECT_EQ(write_graph6(complete(5)), "D~{");
  EXPECT_EQ(write_graph6(empty_graph(5)), "D??");
  EXPECT_EQ(write_graph6(complete(1)), "@");
  // Petersen graph as commonly published
  const Graph petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10u);
  EXPECT_EQ(petersen.size(), 15u);
  EXPECT_TRUE(is_regular(petersen));
  EXPECT_TRUE(are_isomorphic(petersen, complement(line_graph(complete(5)))));
}

TEST(Graph6, HeaderAndLineEndingsAreIgnored) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\r\n"), complete(4));
  EXPECT_EQ(parse_graph6("C~\n"), complete(4));
}

TEST(Graph6, RoundTripSmallAndLarge) {
  std::mt19937 rng(4);
  for (std::size_t n : {1, 2, 5, 6, 7, 12, 62, 63, 64, 100, 200}) {
    const Graph g = random_graph(rng, n, 0.3);
    const std::string s = write_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << n;
    EXPECT_EQ(write_graph6(parse_graph6(s)), s);
    if (n >= 63) {
      EXPECT_EQ(s[0], '~');
    }
  }
}

TEST(Graph6, MalformedInputsGiveStructuredErrors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);           // one payload byte short
  EXPECT_THROW(parse_graph6("C~~"), ParseError);          // trailing byte
  EXPECT_THROW(parse_graph6("C\x7f"), ParseError);        // out of range
  EXPECT_THROW(parse_graph6("B@"), ParseError);           // padding bit set: n=3 has 3 bits, byte 1 = 000001
  EXPECT_THROW(parse_graph6("?"), ParseError);            // order 0
  EXPECT_THROW(parse_graph6("~??}"), ParseError);         // order 62 in the long form
  EXPECT_THROW(parse_graph6("~~??????"), CapacityError);  // 8-byte order form
  try {
    parse_graph6("C~ ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Graph6, OrderAboveCapacityIsACapacityError) {
  // n = 4097 in the 4-byte form: 4097 = 1*4096 + 0*64 + 1
  std::string s = "~";
  s += static_cast<char>(1 + 63);
  s += static_cast<char>(0 + 63);
  s += static_cast<char>(1 + 63);
  const std::size_t payload = (4097ull * 4096 / 2 + 5) / 6;
  s += std::string(payload, '?');
  EXPECT_THROW(parse_graph6(s), CapacityError);
}

TEST(EdgeList, ParsesCommentsOrderAndSeparators) {
  const Graph g = parse_edge_list("# triangle plus isolated vertex\n4\n0 1\n1,2\n2\t0  # closing edge\n");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(parse_edge_list("0 1\n1 2\n").order(), 3u);
  EXPECT_EQ(parse_edge_list(write_edge_list(cycle(9))), cycle(9));
}

TEST(EdgeList, RejectsBadLines) {
  EXPECT_THROW(parse_edge_list("3\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("# nothing\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 99999\n"), CapacityError);
}

TEST(ReadGraphs, DetectsFormat) {
  std::istringstream g6("# header comment\nC~\n\nD~{\n");
  const auto gs = read_graphs(g6);
  ASSERT_EQ(gs.size(), 2u);
  EXPECT_EQ(gs[1], complete(5));
  std::istringstream edges("3\n0 1\n");
  EXPECT_EQ(read_graphs(edges).front().order(), 3u);
  std::istringstream bad("C~\nD?\n");
  try {
    read_graphs(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Graph6, FuzzNeverEscapesStructuredErrors) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> len(0, 20), byte(0, 255);
  for (int i = 0; i < 20000; ++i) {
    std::string s(len(rng), '\0');
    for (auto& c : s) c = static_cast<char>(byte(rng));
    try {
      const Graph g = parse_graph6(s);
      EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    } catch (const ParseError&) {
    } catch (const CapacityError&) {
    }
  }
}
