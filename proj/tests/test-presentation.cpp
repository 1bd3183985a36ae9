#include <cstdio>   // for remove
#include <fstream>  // for ofstream
#include <random>   // for mt19937

#include "catch2/catch_amalgamated.hpp"

#include "malcev/presentation.hpp"

using namespace malcev;
using namespace malcev::letters;

namespace {
  ErrorKind error_of(auto&& f) {
    try {
      f();
    } catch (MalcevError const& e) {
      return e.kind();
    }
    FAIL("no MalcevError thrown");
    return ErrorKind::invalid_argument;
  }
}  // namespace

TEST_CASE("build_presentation: n = 1 is exactly rho_1", "[presentation]") {
  auto const pres = build_presentation(1);
  REQUIRE(pres.generators().size() == 8);
  REQUIRE(pres.relations()
          == std::vector<Relation>{{{d, a}, {A(1), C(1)}},
                                   {{A(1), D(1)}, {d, b}},
                                   {{c, b}, {B(1), D(1)}}});
  REQUIRE(pres.p_set() == std::set<Letter>{c, d, A(1), B(1)});
  REQUIRE(pres.q_set() == std::set<Letter>{a, b, C(1), D(1)});
}

TEST_CASE("build_presentation: n = 5 has 24 generators and 11 relations",
          "[presentation]") {
  auto const pres = build_presentation(5);
  REQUIRE(pres.generators().size() == 24);
  REQUIRE(pres.relations().size() == 11);
}

TEST_CASE("build_presentation: relation list for n = 3", "[presentation]") {
  auto const pres = build_presentation(3);
  REQUIRE(pres.relations()
          == std::vector<Relation>{{{d, a}, {A(1), C(1)}},
                                   {{A(1), D(1)}, {A(2), C(2)}},
                                   {{A(2), D(2)}, {A(3), C(3)}},
                                   {{A(3), D(3)}, {d, b}},
                                   {{c, b}, {B(3), D(3)}},
                                   {{B(3), C(3)}, {B(2), D(2)}},
                                   {{B(2), C(2)}, {B(1), D(1)}}});
}

TEST_CASE("build_presentation: P and Q for n = 2", "[presentation]") {
  auto const pres = build_presentation(2);
  REQUIRE(pres.p_set() == std::set<Letter>{c, d, A(1), A(2), B(1), B(2)});
  REQUIRE(pres.q_set() == std::set<Letter>{a, b, C(1), C(2), D(1), D(2)});
}

TEST_CASE("build_presentation: structural invariants", "[presentation]") {
  for (int n = 1; n <= 9; ++n) {
    auto const pres = build_presentation(n);
    CAPTURE(n);
    REQUIRE(pres.generators().size() == static_cast<std::size_t>(4 + 4 * n));
    REQUIRE(pres.relations().size() == static_cast<std::size_t>(2 * n + 1));
    REQUIRE(pres.structured());
    REQUIRE(pres.is_malcev());

    std::set<Letter> both;
    for (auto const& x : pres.p_set()) {
      REQUIRE(pres.q_set().count(x) == 0);
      both.insert(x);
    }
    both.insert(pres.q_set().begin(), pres.q_set().end());
    REQUIRE(both
            == std::set<Letter>(pres.generators().begin(),
                                pres.generators().end()));
    for (auto const& w : pres.l_words()) {
      REQUIRE(pres.r_words().count(w) == 0);
    }
    for (auto const& rel : pres.relations()) {
      REQUIRE(pres.l_words().count(rel.left) == 1);
      REQUIRE(pres.r_words().count(rel.right) == 1);
      for (auto const& w : {rel.left, rel.right}) {
        REQUIRE(w.size() == 2);
        REQUIRE(pres.in_p(w[0]));
        REQUIRE(pres.in_q(w[1]));
      }
      REQUIRE(pres.rewrite_map().at(rel.right) == rel.left);
    }
  }
}

TEST_CASE("build_presentation: rejects n < 1", "[presentation]") {
  REQUIRE(error_of([] { build_presentation(0); }) == ErrorKind::invalid_argument);
  REQUIRE(error_of([] { build_presentation(-3); })
          == ErrorKind::invalid_argument);
}

TEST_CASE("parse_word and format_word", "[presentation]") {
  auto const p1 = build_presentation(1);
  auto const p2 = build_presentation(2);

  REQUIRE(parse_word("d a", p1) == Word{d, a});
  REQUIRE(parse_word("  d\ta \n", p1) == Word{d, a});
  REQUIRE(parse_word("1", p1).empty());
  REQUIRE(parse_word("1", p2).empty());
  REQUIRE(parse_word("A2 D2", p2) == Word{A(2), D(2)});

  REQUIRE(format_word({d, a}) == "d a");
  REQUIRE(format_word({}) == "1");
  REQUIRE(format_word({A(2), D(2)}) == "A2 D2");
  REQUIRE(format_word({A(2), D(2)}, ".") == "A2.D2");
  REQUIRE(format_word({A(12)}) == "A12");

  SECTION("errors") {
    REQUIRE(error_of([&] { parse_word("A3", p2); })
            == ErrorKind::index_out_of_range);
    REQUIRE(error_of([&] { parse_word("e", p2); }) == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("A", p2); }) == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("A0", p2); }) == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("A01", p2); })
            == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("aa", p2); }) == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("a 1", p2); })
            == ErrorKind::unknown_token);
    REQUIRE(error_of([&] { parse_word("", p2); }) == ErrorKind::unknown_token);
  }
}

TEST_CASE("parse_word inverts format_word", "[presentation][property]") {
  std::mt19937 rng(7);
  for (int n : {1, 3, 11}) {
    auto const pres = build_presentation(n);
    auto const& gens = pres.generators();
    std::uniform_int_distribution<std::size_t> letter(0, gens.size() - 1);
    std::uniform_int_distribution<std::size_t> length(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
      Word w(length(rng));
      for (auto& x : w) {
        x = gens[letter(rng)];
      }
      auto const text = format_word(w);
      REQUIRE(parse_word(text, pres) == w);
      REQUIRE(format_word(parse_word(text, pres)) == text);
    }
  }
}

TEST_CASE("validate_generic", "[presentation]") {
  auto const rho2 = build_presentation(2).relations();
  auto const pres = validate_generic(rho2);
  REQUIRE(pres.structured());
  REQUIRE(!pres.is_malcev());
  REQUIRE(pres.n() == 2);
  REQUIRE(pres.relations() == rho2);

  REQUIRE(error_of([] { validate_generic({{{a, b}, {b, a}}}); })
          == ErrorKind::pq_overlap);
  REQUIRE(error_of([] { validate_generic({{{a, b, c}, {d, A(1)}}}); })
          == ErrorKind::not_balanced);
  REQUIRE(error_of([] {
            validate_generic({{{a, b}, {c, d}}, {{c, d}, {a, b}}});
          })
          == ErrorKind::lr_overlap);
  REQUIRE(error_of([] {
            validate_generic({{{a, b}, {c, d}}, {{A(1), B(1)}, {c, d}}});
          })
          == ErrorKind::ambiguous_rewrite);
}

TEST_CASE("unchecked presentations keep the structure flag", "[presentation]") {
  auto const comm = Presentation::unchecked({{{a, b}, {b, a}}});
  REQUIRE(!comm.structured());
  REQUIRE(comm.generators() == std::vector<Letter>{a, b});
  REQUIRE(error_of([] { Presentation::unchecked({{{a}, {b}}}); })
          == ErrorKind::not_balanced);
}

TEST_CASE("parse_relations and load_presentation", "[presentation]") {
  auto const text = "# M_1 up to relabelling\n"
                    "d a = A1 C1\n"
                    "\n"
                    "  A1 D1 = d b  \n"
                    "c b = B1 D1\n";
  auto const rels = parse_relations(text);
  REQUIRE(rels == build_presentation(1).relations());

  REQUIRE(error_of([] { parse_relations("d a A1 C1\n"); })
          == ErrorKind::invalid_argument);
  REQUIRE(error_of([] { parse_relations("d a = A1 = C1\n"); })
          == ErrorKind::invalid_argument);
  REQUIRE(error_of([] { parse_relations("d x = A1 C1\n"); })
          == ErrorKind::unknown_token);

  auto const path = std::string("test-presentation-m1.txt");
  {
    std::ofstream file(path);
    file << text;
  }
  auto const pres = load_presentation(path);
  std::remove(path.c_str());
  REQUIRE(pres.structured());
  REQUIRE(pres.relations() == rels);
  REQUIRE(error_of([] { load_presentation("/nonexistent/file"); })
          == ErrorKind::invalid_argument);
}
