#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "plactic/multipliers.hpp"
#include "plactic/verify.hpp"

using namespace plactic;

namespace {

  SymbolWord cs(std::string_view s, int n) {
    return to_symbols(parse_cword(s, Rank(n)));
  }

  SymbolWord as(std::string_view s, int n) {
    return to_symbols(parse_word(s, Rank(n)));
  }

  std::vector<SymbolWord> one(SymbolWord w) {
    return {std::move(w)};
  }

  Word reading_of(Word const& w) {
    return column_reading(tableau_of_word(w));
  }

  Word with(Word u, Letter g, Side side) {
    if (side == Side::right) {
      u.push_back(g);
    } else {
      u.insert(u.begin(), g);
    }
    return u;
  }

  // Normal forms of every tableau with at most max_len cells.
  std::vector<CWord> k_words(Rank rank, std::size_t max_len) {
    std::vector<CWord> out;
    for (auto const& r : column_readings(rank, max_len)) {
      auto const t = tableau_of_word(r);
      CWord      w;
      for (auto const& c : t.columns()) {
        w.push_back(ColumnSymbol::from_column(c));
      }
      out.push_back(std::move(w));
    }
    return out;
  }

}  // namespace

TEST_CASE("K acceptor") {
  auto const k2 = build_k_acceptor(Rank(2));
  CHECK(k2.accepts(cs("c:21,1", 2)));
  CHECK_FALSE(k2.accepts(cs("c:1,21", 2)));
  CHECK(k2.accepts(SymbolWord{}));

  for (int n = 1; n <= 3; ++n) {
    auto const k      = build_k_acceptor(Rank(n));
    auto const system = RewritingSystem::generate(Rank(n));
    auto const cols   = all_columns(Rank(n));
    std::vector<CWord> frontier{{}};
    for (int len = 0; len <= 4; ++len) {
      std::vector<CWord> next;
      for (auto const& w : frontier) {
        REQUIRE(k.accepts(to_symbols(w)) == (normalize(w, system) == w));
        for (auto c : cols) {
          next.push_back(w);
          next.back().push_back(c);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("right multiplier examples") {
  auto const r1 = right_multiplier(Rank(2), 1);
  CHECK(transducer_outputs(r1, cs("c:21,1", 2)) == one(cs("c:21,1,1", 2)));
  CHECK(transducer_outputs(r1, SymbolWord{}) == one(cs("c:1", 2)));
  CHECK(transducer_outputs(right_multiplier(Rank(2), 2), cs("c:1", 2)) == one(cs("c:1,2", 2)));
  CHECK(transducer_outputs(r1, cs("c:1,21", 2)).empty());
}

TEST_CASE("left multiplier examples") {
  CHECK(transducer_outputs(left_multiplier(Rank(2), 2), cs("c:1,1", 2)) == one(cs("c:21,1", 2)));
  CHECK(transducer_outputs(left_multiplier(Rank(3), 3), cs("c:21", 3)) == one(cs("c:321", 3)));
  for (Letter g = 1; g <= 3; ++g) {
    CHECK(transducer_outputs(left_multiplier(Rank(3), g), SymbolWord{})
          == one(to_symbols(CWord{ColumnSymbol::letter(g)})));
  }
}

TEST_CASE("multipliers over C agree with normalization") {
  for (int n = 1; n <= 3; ++n) {
    Rank const rank(n);
    auto const system = RewritingSystem::generate(rank);
    auto const k      = build_k_acceptor(rank);
    auto const words  = k_words(rank, 6);
    for (Letter g = 1; g <= static_cast<Letter>(n); ++g) {
      auto const right = right_multiplier(rank, g);
      auto const left  = left_multiplier(rank, g);
      auto const cg    = ColumnSymbol::letter(g);
      for (auto const& u : words) {
        CWord ug = u, gu{cg};
        ug.push_back(cg);
        gu.insert(gu.end(), u.begin(), u.end());
        REQUIRE(transducer_outputs(right, to_symbols(u)) == one(to_symbols(normalize(ug, system))));
        REQUIRE(transducer_outputs(left, to_symbols(u)) == one(to_symbols(normalize(gu, system))));
        REQUIRE(k.accepts(to_symbols(u)));
      }
    }
  }
}

TEST_CASE("bumping never moves right") {
  for (int n = 1; n <= 3; ++n) {
    Rank const rank(n);
    for (auto const& u : k_words(rank, 6)) {
      for (Letter g = 1; g <= static_cast<Letter>(n); ++g) {
        auto const run = trace_right_multiplication(rank, u, g);
        CWord      ug  = u;
        ug.push_back(ColumnSymbol::letter(g));
        REQUIRE(decode_word(run.product) == reading_of(decode_word(ug)));
        REQUIRE_FALSE(run.steps.empty());
        CHECK(run.steps.front().row == 1);
        for (std::size_t i = 1; i < run.steps.size(); ++i) {
          REQUIRE(run.steps[i].row == run.steps[i - 1].row + 1);
          REQUIRE(run.steps[i].column <= run.steps[i - 1].column);
        }
      }
    }
  }
  CHECK_THROWS_AS(trace_right_multiplication(Rank(2), parse_cword("c:1,21", Rank(2)), 1),
                  std::invalid_argument);
}

TEST_CASE("Q and L") {
  auto const q = build_q(Rank(2));
  CHECK(transducer_outputs(q.expand, cs("c:21,1", 2)) == one(as("211", 2)));
  CHECK(transducer_outputs(q.expand, SymbolWord{}) == one(SymbolWord{}));
  auto const factors = transducer_outputs(q.factor, as("211", 2));
  CHECK(std::find(factors.begin(), factors.end(), cs("c:21,1", 2)) != factors.end());
  CHECK(std::find(factors.begin(), factors.end(), cs("c:2,1,1", 2)) != factors.end());
  for (auto const& f : factors) {
    CHECK(to_word(transducer_outputs(q.expand, f).front()) == parse_word("211", Rank(2)));
  }

  auto const l = build_L(Rank(2));
  CHECK(l.accepts(as("211", 2)));
  CHECK_FALSE(l.accepts(as("121", 2)));
  CHECK(l.accepts(SymbolWord{}));

  // L is a cross-section: it holds exactly the column readings.
  for (int n = 1; n <= 3; ++n) {
    auto const              acceptor = build_L(Rank(n));
    auto const              readings = column_readings(Rank(n), 6);
    std::set<Word> const    expected(readings.begin(), readings.end());
    std::set<Word>          tableaux;
    for (auto const& w : all_words(Rank(n), 6)) {
      bool const in_l = acceptor.accepts(to_symbols(w));
      REQUIRE(in_l == expected.contains(w));
      if (in_l) {
        REQUIRE(tableaux.insert(reading_of(w)).second);
      }
    }
    CHECK(tableaux.size() == expected.size());
  }
}

TEST_CASE("lifted multipliers") {
  CHECK(transducer_outputs(lifted_multiplier(Rank(2), Side::right, 1), as("211", 2))
        == one(as("2111", 2)));
  CHECK(transducer_outputs(lifted_multiplier(Rank(2), Side::left, 2), as("11", 2))
        == one(as("211", 2)));
  for (Letter g = 1; g <= 2; ++g) {
    for (auto side : {Side::right, Side::left}) {
      CHECK(transducer_outputs(lifted_multiplier(Rank(2), side, g), SymbolWord{})
            == one(SymbolWord{g}));
    }
  }

  for (int n = 1; n <= 3; ++n) {
    Rank const rank(n);
    auto const l     = build_L(rank);
    auto const words = all_words(rank, 5);
    auto const ident = lifted_multiplier(rank, Side::right, std::nullopt);
    for (Letter g = 1; g <= static_cast<Letter>(n); ++g) {
      for (auto side : {Side::right, Side::left}) {
        auto const t = lifted_multiplier(rank, side, g);
        for (auto const& u : words) {
          auto const outs = transducer_outputs(t, to_symbols(u));
          if (!l.accepts(to_symbols(u))) {
            REQUIRE(outs.empty());
            continue;
          }
          REQUIRE(outs == one(to_symbols(reading_of(with(u, g, side)))));
          REQUIRE(outs.front().size() == u.size() + 1);
        }
      }
    }
    for (auto const& u : words) {
      auto const outs = transducer_outputs(ident, to_symbols(u));
      REQUIRE(outs == (l.accepts(to_symbols(u)) ? one(to_symbols(u)) : std::vector<SymbolWord>{}));
    }
  }
}

TEST_CASE("padded multiplier automata") {
  auto const autos = multiplier_pair_automata(Rank(2), Letter{1});
  CHECK(pair_automaton_accepts(autos.right_R, as("211", 2), as("2111", 2)));
  CHECK_FALSE(pair_automaton_accepts(autos.right_R, as("211", 2), as("211", 2)));
  CHECK(pair_automaton_accepts(autos.right_L, as("211", 2), as("2111", 2)));
  CHECK(pair_automaton_accepts(autos.left_R, as("2", 2), as("12", 2)));
  CHECK(pair_automaton_accepts(autos.left_L, as("2", 2), as("12", 2)));
  CHECK_FALSE(pair_automaton_accepts(autos.left_L, as("2", 2), as("21", 2)));
  CHECK(autos.right_R.direction == Direction::right);
  CHECK(autos.left_L.direction == Direction::left);

  auto const eps = multiplier_pair_automata(Rank(2), std::nullopt);
  for (auto const& u : column_readings(Rank(2), 5)) {
    auto const s = to_symbols(u);
    REQUIRE(pair_automaton_accepts(eps.right_R, s, s));
    REQUIRE(pair_automaton_accepts(eps.left_L, s, s));
  }
  CHECK_FALSE(pair_automaton_accepts(eps.right_R, as("121", 2), as("121", 2)));

  // Every pair of L x L within the bounds, at rank 2.
  Rank const rank(2);
  auto const readings = column_readings(rank, 5);
  for (std::optional<Letter> g : {std::optional<Letter>{}, std::optional<Letter>{1},
                                  std::optional<Letter>{2}}) {
    auto const m = multiplier_pair_automata(rank, g);
    std::pair<PairAutomaton const*, Side> const machines[] = {
        {&m.right_R, Side::right}, {&m.left_R, Side::left},
        {&m.right_L, Side::right}, {&m.left_L, Side::left}};
    for (auto const& [machine, side] : machines) {
      for (auto const& u : readings) {
        Word const target = g ? reading_of(with(u, *g, side)) : u;
        for (auto const& v : readings) {
          REQUIRE(pair_automaton_accepts(*machine, to_symbols(u), to_symbols(v)) == (v == target));
        }
      }
    }
  }
}

TEST_CASE("general multiplier") {
  Rank const rank(2);
  Word const b12{1, 2}, b21{2, 1};
  CHECK(transducer_outputs(general_multiplier(rank, b12, Side::right), SymbolWord{})
        == one(as("12", 2)));
  CHECK(transducer_outputs(general_multiplier(rank, b21, Side::right), SymbolWord{})
        == one(as("21", 2)));
  CHECK(transducer_outputs(general_multiplier(rank, b21, Side::left), SymbolWord{})
        == one(as("21", 2)));

  auto const single = general_multiplier(rank, Word{2}, Side::right);
  auto const direct = lifted_multiplier(rank, Side::right, 2);
  auto const l      = build_L(rank);
  std::map<std::pair<Word, Side>, Transducer> composed;
  for (auto const& b : {b12, b21}) {
    for (auto side : {Side::right, Side::left}) {
      composed.emplace(std::pair{b, side}, general_multiplier(rank, b, side));
    }
  }
  for (auto const& u : all_words(rank, 5)) {
    REQUIRE(transducer_outputs(single, to_symbols(u)) == transducer_outputs(direct, to_symbols(u)));
    for (auto const& b : {b12, b21}) {
      for (auto side : {Side::right, Side::left}) {
        auto const outs = transducer_outputs(composed.at({b, side}), to_symbols(u));
        if (!l.accepts(to_symbols(u))) {
          REQUIRE(outs.empty());
          continue;
        }
        Word w = u;
        if (side == Side::right) {
          w.insert(w.end(), b.begin(), b.end());
        } else {
          w.insert(w.begin(), b.begin(), b.end());
        }
        REQUIRE(outs == one(to_symbols(reading_of(w))));
      }
    }
  }
  CHECK(transducer_outputs(general_multiplier(rank, Word{}, Side::left), as("211", 2))
        == one(as("211", 2)));
}

TEST_CASE("names") {
  CHECK(column_namer(Rank(3))(ColumnSymbol::from_column(Column(Word{2, 1})).mask()) == "c_21");
  CHECK(letter_namer(Rank(3))(2) == "2");
}
