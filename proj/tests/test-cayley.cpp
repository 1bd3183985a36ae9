#include <map>  // for map

#include "catch2/catch_amalgamated.hpp"

#include "malcev/cayley.hpp"
#include "malcev/ideals.hpp"
#include "malcev/suites.hpp"

using namespace malcev;
using namespace malcev::letters;

namespace {
  Element E(Presentation const& pres, char const* text) {
    return left_normal_form(parse_word(text, pres), pres);
  }

  std::size_t in_degree_in_ball(CayleyBall const& ball, std::size_t v) {
    std::size_t count = 0;
    for (auto const& e : ball.edges()) {
      count += (e.target == v);
    }
    return count;
  }
}  // namespace

TEST_CASE("build_ball: fixtures", "[cayley]") {
  auto const p1 = build_presentation(1);

  auto const r0 = build_ball(Element{}, 0, p1);
  REQUIRE(r0.vertices().size() == 1);
  REQUIRE(r0.edges().empty());

  auto const r1 = build_ball(Element{}, 1, p1);
  REQUIRE(r1.vertices().size() == 9);
  REQUIRE(r1.edges().size() == 8);

  auto const r2 = build_ball(Element{}, 2, p1);
  // 64 words of length 2, three of which are R-words.
  REQUIRE(r2.vertices().size() == 1 + 8 + 61);
  auto const da = r2.find(E(p1, "d a"));
  REQUIRE(da);
  std::vector<std::pair<Word, Letter>> incoming;
  for (auto const& e : r2.edges()) {
    if (e.target == *da) {
      incoming.emplace_back(r2.vertices()[e.source].nf, e.label);
    }
  }
  REQUIRE(incoming
          == std::vector<std::pair<Word, Letter>>{{{d}, a}, {{A(1)}, C(1)}});

  auto const p3 = build_presentation(3);
  auto const r  = build_ball(E(p3, "c b"), 0, p3);
  REQUIRE(r.vertices() == std::vector<Element>{E(p3, "c b")});
}

TEST_CASE("build_ball: consistency and acyclicity", "[cayley][property]") {
  for (auto [n, radius, root] :
       {std::tuple{1, 3, "1"}, std::tuple{2, 2, "d"}, std::tuple{3, 2, "A1 D1"}}) {
    auto const pres = build_presentation(n);
    auto const ball = build_ball(E(pres, root), radius, pres);
    auto const& vs  = ball.vertices();
    for (auto const& e : ball.edges()) {
      Word w = vs[e.source].nf;
      w.push_back(e.label);
      REQUIRE(equal(w, vs[e.target].nf, pres));
      REQUIRE(vs[e.target].length() == vs[e.source].length() + 1);
      REQUIRE(ball.depth(e.target) == ball.depth(e.source) + 1);
    }
    for (std::size_t v = 1; v < vs.size(); ++v) {
      REQUIRE(vs[v].length() == vs[0].length() + ball.depth(v));
      bool has_parent = false;
      for (auto const& e : ball.edges()) {
        has_parent |= (e.target == v && ball.depth(e.source) + 1 == ball.depth(v));
      }
      REQUIRE(has_parent);
    }
    // Vertices are distinct elements.
    std::map<Word, int> seen;
    for (auto const& v : vs) {
      REQUIRE(++seen[v.nf] == 1);
    }
  }
}

TEST_CASE("predecessors: fixtures", "[cayley]") {
  auto const p1 = build_presentation(1);
  REQUIRE(predecessors(E(p1, "d a"), p1)
          == std::vector<Predecessor>{{E(p1, "d"), a}, {E(p1, "A1"), C(1)}});
  REQUIRE(predecessors(Element{}, p1).empty());
  REQUIRE(predecessors(E(p1, "c a"), p1)
          == std::vector<Predecessor>{{E(p1, "c"), a}});

  auto const p2 = build_presentation(2);
  REQUIRE(predecessors(E(p2, "A2 D2"), p2)
          == std::vector<Predecessor>{{E(p2, "d"), b}, {E(p2, "A2"), D(2)}});
}

TEST_CASE("predecessors agree with in-degree in a ball rooted at 1",
          "[cayley][property]") {
  // From the identity every predecessor of a depth-d vertex sits at depth
  // d - 1, so the ball sees the full in-neighbourhood.
  for (auto [n, radius] : {std::pair{1, 3}, std::pair{2, 3}}) {
    auto const pres = build_presentation(n);
    auto const ball = build_ball(Element{}, radius, pres);
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      REQUIRE(predecessors(ball.vertices()[v], pres).size()
              == in_degree_in_ball(ball, v));
    }
  }
}

TEST_CASE("check_codeterminism", "[cayley]") {
  auto const p1 = build_presentation(1);
  REQUIRE(check_codeterminism(E(p1, "d a"), p1));
  for (auto const& x : p1.generators()) {
    REQUIRE(predecessors(Element{{x}}, p1)
            == std::vector<Predecessor>{{Element{}, x}});
    REQUIRE(check_codeterminism(Element{{x}}, p1));
  }
  auto const p2 = build_presentation(2);
  REQUIRE(check_codeterminism(E(p2, "A2 D2"), p2));
}

TEST_CASE("graph suites report no violations", "[cayley][property]") {
  for (int n : {1, 2}) {
    auto const pres = build_presentation(n);
    auto const codet = codeterminism_suite(pres, 3);
    REQUIRE(codet.ok());
    REQUIRE(codet.checked == enumerate_elements(pres, 3).size());
    REQUIRE(indegree_suite(pres, 3).ok());
  }
}

TEST_CASE("export_dot", "[cayley]") {
  auto const p1 = build_presentation(1);
  REQUIRE(export_dot(build_ball(Element{}, 0, p1))
          == "digraph cayley {\n  \"1\";\n}\n");

  auto const ball = build_ball(Element{}, 1, p1);
  auto const dot  = export_dot(ball);
  REQUIRE(dot == export_dot(build_ball(Element{}, 1, p1)));
  std::size_t nodes = 0, edges = 0, pos = 0;
  std::string line;
  while (pos < dot.size()) {
    auto end = dot.find('\n', pos);
    line     = dot.substr(pos, end - pos);
    pos      = end + 1;
    if (line.find("->") != std::string::npos) {
      ++edges;
      REQUIRE(line.find("[label=\"") != std::string::npos);
    } else if (line.rfind("  \"", 0) == 0) {
      ++nodes;
    }
  }
  REQUIRE(nodes == 9);
  REQUIRE(edges == 8);
  REQUIRE(dot.find("\"1\" -> \"A1\" [label=\"A1\"];") != std::string::npos);

  auto const r2 = export_dot(build_ball(Element{}, 2, p1));
  REQUIRE(r2.find("\"A1\" -> \"d.a\" [label=\"C1\"];") != std::string::npos);
}
