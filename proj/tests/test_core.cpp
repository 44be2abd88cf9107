#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "plactic/core.hpp"
#include "plactic/verify.hpp"

using namespace plactic;

namespace {

  Word w(std::string_view s) {
    return parse_word(s, Rank(9));
  }

  std::vector<Word> rows_of(std::string_view s) {
    return tableau_of_word(w(s)).rows();
  }

  Tableau from_rows_bottom_up(std::vector<Word> const& rows) {
    // Row reading, top row first, is a word whose tableau is the one drawn.
    Word reading;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      reading.insert(reading.end(), it->begin(), it->end());
    }
    return tableau_of_word(reading);
  }

}  // namespace

TEST_CASE("row and column predicates") {
  CHECK(is_row(w("1123")));
  CHECK_FALSE(is_row(w("21")));
  CHECK(is_row(w("")));
  CHECK(is_column(w("631")));
  CHECK_FALSE(is_column(w("11")));
  CHECK(is_column(w("5")));
  CHECK(is_column(w("")));
}

TEST_CASE("row domination") {
  CHECK(dominates(w("6"), w("3455")));
  CHECK(dominates(w("3455"), w("11235")));
  CHECK_FALSE(dominates(w("12"), w("1")));
  CHECK_FALSE(dominates(w("3455"), w("3455")));
}

TEST_CASE("column order") {
  CHECK(column_ge(Column(w("21")), Column(w("1"))));
  CHECK_FALSE(column_ge(Column(w("1")), Column(w("21"))));
  CHECK(column_ge(Column(w("21")), Column(w("21"))));
  CHECK(column_ge(Column(w("631")), Column(w("41"))));
  CHECK_FALSE(column_ge(Column(w("32")), Column(w("1"))));
  CHECK_THROWS_AS(Column(w("12")), std::invalid_argument);
  CHECK_THROWS_AS(Column(Word{}), std::invalid_argument);
}

TEST_CASE("insertion") {
  auto t = from_rows_bottom_up({w("11"), w("2")});
  CHECK(insert(t, 1).rows() == std::vector<Word>{w("2"), w("111")});
  CHECK(insert(tableau_of_word(w("12")), 1).rows() == std::vector<Word>{w("2"), w("11")});
  CHECK(insert(Tableau(), 5).rows() == std::vector<Word>{w("5")});

  SUBCASE("bumping trace") {
    auto        u     = tableau_of_word(w("12"));
    auto const  trace = u.insert_from_row(1, 1);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].row == 1);
    CHECK(trace[0].column == 1);
    CHECK(trace[0].bumped == 2);
    CHECK_FALSE(trace[0].appended);
    CHECK(trace[1].row == 2);
    CHECK(trace[1].column == 0);
    CHECK(trace[1].appended);
  }
}

TEST_CASE("tableau of a word") {
  auto const t = tableau_of_word(w("121"));
  REQUIRE(t.num_columns() == 2);
  CHECK(t.columns()[0].letters() == w("21"));
  CHECK(t.columns()[1].letters() == w("1"));
  CHECK(t.rows() == std::vector<Word>{w("2"), w("11")});

  CHECK(rows_of("6345511235") == std::vector<Word>{w("6"), w("3455"), w("11235")});
  CHECK(tableau_of_word(w("")).empty());
}

TEST_CASE("readings") {
  auto const example = tableau_of_word(w("6345511235"));
  CHECK(column_reading(example) == w("6314152535"));
  CHECK(row_reading(example) == w("6345511235"));
  CHECK(column_reading(Tableau()).empty());
  CHECK(row_reading(Tableau()).empty());
  auto const t = Tableau::from_columns({Column(w("21")), Column(w("1"))});
  CHECK(column_reading(t) == w("211"));
  CHECK(row_reading(t) == w("211"));
  CHECK_THROWS_AS(Tableau::from_columns({Column(w("1")), Column(w("21"))}),
                  std::invalid_argument);
}

TEST_CASE("subsequence statistics") {
  CHECK(lnds(w("3211")) == 2);
  CHECK(lnds(w("1234")) == 4);
  CHECK(lnds(w("")) == 0);
  CHECK(lds(w("3211")) == 3);
  CHECK(lds(w("1111")) == 1);
  CHECK(lds(w("")) == 0);
}

TEST_CASE("Knuth relations") {
  CHECK(knuth_relations(Rank(1)).empty());
  auto const two = knuth_relations(Rank(2));
  CHECK(two.size() == 2);
  std::set<std::pair<Word, Word>> got(two.begin(), two.end());
  CHECK(got == std::set<std::pair<Word, Word>>{{w("121"), w("211")}, {w("212"), w("221")}});
  CHECK(knuth_relations(Rank(3)).size() == 8);
}

TEST_CASE("Knuth equivalence oracle") {
  CHECK(knuth_equivalent(w("121"), w("211")));
  CHECK_FALSE(knuth_equivalent(w("12"), w("21")));
  CHECK(knuth_equivalent(w("1"), w("1")));
  CHECK_FALSE(knuth_equivalent(w("1"), w("11")));
  CHECK(knuth_class(w("121"), default_class_limit) == std::vector<Word>{w("121"), w("211")});
  CHECK_THROWS_AS(knuth_class(w("121"), 1), ResourceLimit);
}

TEST_CASE("text forms") {
  Rank const six(6);
  CHECK(parse_word("6345511235", six) == w("6345511235"));
  CHECK(parse_word("", six).empty());
  CHECK_THROWS_AS(parse_word("3", Rank(2)), RankError);
  CHECK_THROWS_AS(parse_word("1x", Rank(2)), ParseError);
  CHECK_THROWS_AS(parse_word("0", Rank(2)), RankError);
  CHECK(parse_word("10,2,11", Rank(12)) == Word{10, 2, 11});
  CHECK(format_word(Word{10, 2, 11}, Rank(12)) == "10,2,11");
  CHECK(format_subscript(Word{11, 10, 2}, Rank(12)) == "11.10.2");
  CHECK(parse_subscript("11.10.2", Rank(12)) == Word{11, 10, 2});
  CHECK_THROWS_AS(parse_subscript("", Rank(3)), ParseError);
  CHECK(to_planar(tableau_of_word(w("6345511235")), six) == "6\n3455\n11235\n");
  CHECK(tableau_to_json(tableau_of_word(w("121")), Rank(2)) == R"({"columns":["21","1"]})");
  CHECK_THROWS_AS(Rank(0), RankError);
}

// Properties over every word of bounded length.
TEST_CASE("shape equals longest subsequences") {
  for (int n = 2; n <= 4; ++n) {
    for (auto const& u : all_words(Rank(n), n == 4 ? 6 : 7)) {
      auto const t = tableau_of_word(u);
      REQUIRE(t.num_columns() == lnds(u));
      REQUIRE(t.num_rows() == lds(u));
      REQUIRE(t.num_cells() == u.size());
    }
  }
}

TEST_CASE("tableaux are well formed and recovered from their readings") {
  for (auto const& u : all_words(Rank(3), 6)) {
    auto const t    = tableau_of_word(u);
    auto const rows = t.rows();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      REQUIRE(dominates(rows[i], rows[i + 1]));
    }
    for (std::size_t i = 0; i + 1 < t.num_columns(); ++i) {
      REQUIRE(column_ge(t.columns()[i], t.columns()[i + 1]));
    }
    REQUIRE(tableau_of_word(column_reading(t)) == t);
    REQUIRE(tableau_of_word(row_reading(t)) == t);
  }
}

TEST_CASE("Knuth classes are the fibres of P") {
  std::map<Word, std::vector<Word>> fibres;
  for (auto const& u : all_words(Rank(3), 5)) {
    fibres[column_reading(tableau_of_word(u))].push_back(u);
  }
  for (auto const& [reading, members] : fibres) {
    REQUIRE(knuth_class(members.front(), default_class_limit) == members);
  }
}

TEST_CASE("number of tableaux matches an independent count") {
  // Distinct Schensted tableaux of words of length <= L, counted by a
  // separate Python row-insertion script.
  CHECK(column_readings(Rank(2), 6).size() == 50);
  CHECK(column_readings(Rank(3), 6).size() == 259);
  CHECK(column_readings(Rank(4), 6).size() == 1001);
}
