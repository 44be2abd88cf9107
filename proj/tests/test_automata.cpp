#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "plactic/automata.hpp"
#include "plactic/verify.hpp"

using namespace plactic;

namespace {

  constexpr Symbol a = 1, b = 2, c = 3;

  using W = SymbolWord;

  PairLetter p(Symbol l, Symbol r) {
    return {l, r};
  }

  SymbolWord rev(SymbolWord w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  SymbolWord repeat(Symbol s, std::size_t n) {
    return SymbolWord(n, s);
  }

  // Single-edge relation {(in, out)} with the input read as one chain.
  Transducer single(SymbolWord const& in, SymbolWord const& out) {
    Transducer t;
    State      q = t.add_state();
    t.add_initial(q);
    for (std::size_t i = 0; i < in.size(); ++i) {
      State next = t.add_state();
      t.add_transition(q, in[i], i == 0 ? out : SymbolWord{}, next);
      q = next;
    }
    if (in.empty()) {
      State next = t.add_state();
      t.add_transition(q, std::nullopt, out, next);
      q = next;
    }
    t.set_accepting(q);
    return t;
  }

  // {(u, u a) : u in {a}*}.
  Transducer append_a() {
    Transducer t;
    State      s = t.add_state();
    State      f = t.add_state(true);
    t.add_initial(s);
    t.add_transition(s, a, {a}, s);
    t.add_transition(s, std::nullopt, {a}, f);
    return t;
  }

  // Over {1, 2}: every 1 becomes 11, 2 stays.
  Transducer double_ones() {
    Transducer t;
    State      s = t.add_state(true);
    t.add_initial(s);
    t.add_transition(s, 1, {1, 1}, s);
    t.add_transition(s, 2, {2}, s);
    return t;
  }

  // Over {1, 2}: the first letter moves to the end.
  Transducer rotate_first() {
    Transducer t;
    State      s = t.add_state(true);
    State      f = t.add_state(true);
    t.add_initial(s);
    for (Symbol x : {1u, 2u}) {
      State q = t.add_state();
      t.add_transition(s, x, {}, q);
      for (Symbol y : {1u, 2u}) {
        t.add_transition(q, y, {y}, q);
      }
      t.add_transition(q, std::nullopt, {x}, f);
    }
    return t;
  }

  // Over {1, 2}: 2 becomes 1, and a 1 is either kept or dropped.
  Transducer merge_or_drop() {
    Transducer t;
    State      s = t.add_state(true);
    t.add_initial(s);
    t.add_transition(s, 1, {1}, s);
    t.add_transition(s, 1, {}, s);
    t.add_transition(s, 2, {1}, s);
    return t;
  }

  Nfa<Symbol> star(std::initializer_list<Symbol> letters) {
    Nfa<Symbol> n;
    State       s = n.add_state(true);
    n.add_initial(s);
    for (Symbol x : letters) {
      n.add_transition(s, x, s);
    }
    return n;
  }

}  // namespace

TEST_CASE("padded encodings") {
  CHECK(delta_R(W{a, b}, W{c}) == PairWord{p(a, c), p(b, padding)});
  CHECK(delta_L(W{a, b}, W{c}) == PairWord{p(a, padding), p(b, c)});
  CHECK(delta_R(W{}, W{}).empty());
  CHECK(delta_R(W{}, W{a}) == PairWord{p(padding, a)});
  CHECK(delta(Direction::left, W{c}, W{a, b}) == PairWord{p(padding, a), p(c, b)});

  CHECK(is_padded_pair(Direction::right, delta_R(W{a, b}, W{c})));
  CHECK_FALSE(is_padded_pair(Direction::right, PairWord{p(a, padding), p(b, c)}));
  CHECK(is_padded_pair(Direction::left, PairWord{p(a, padding), p(b, c)}));
  CHECK_FALSE(is_padded_pair(Direction::right, PairWord{p(padding, padding)}));
  CHECK_FALSE(is_padded_pair(Direction::right, PairWord{p(padding, a), p(b, padding)}));
  auto const [u, v] = unpad(delta_L(W{a, b}, W{c}));
  CHECK(u == SymbolWord{a, b});
  CHECK(v == SymbolWord{c});
}

TEST_CASE("duality of the two paddings") {
  auto const words = all_words(Rank(3), 4);
  for (auto const& x : words) {
    SymbolWord const u(x.begin(), x.end());
    for (auto const& y : words) {
      SymbolWord const v(y.begin(), y.end());
      auto             left = delta_L(u, v);
      std::reverse(left.begin(), left.end());
      REQUIRE(delta_R(rev(u), rev(v)) == left);
      REQUIRE(is_padded_pair(Direction::right, delta_R(u, v)));
      REQUIRE(is_padded_pair(Direction::left, delta_L(u, v)));
    }
  }
}

TEST_CASE("finite automata") {
  Nfa<Symbol> ab;  // a b*
  State       s0 = ab.add_state();
  State       s1 = ab.add_state(true);
  ab.add_initial(s0);
  ab.add_transition(s0, a, s1);
  ab.add_transition(s1, b, s1);
  CHECK(nfa_accepts<Symbol>(ab, SymbolWord{a}));
  CHECK(nfa_accepts<Symbol>(ab, SymbolWord{a, b, b}));
  CHECK_FALSE(nfa_accepts<Symbol>(ab, SymbolWord{}));
  CHECK_FALSE(nfa_accepts<Symbol>(ab, SymbolWord{b}));

  auto const back = reverse_nfa(ab);
  CHECK(back.accepts(SymbolWord{b, b, a}));
  CHECK_FALSE(back.accepts(SymbolWord{a, b}));

  Nfa<Symbol> eps;
  State       e0 = eps.add_state();
  State       e1 = eps.add_state(true);
  eps.add_initial(e0);
  eps.add_epsilon(e0, e1);
  CHECK(eps.accepts(SymbolWord{}));

  NfaMatcher<Symbol> m(ab);
  CHECK(m.accepts(SymbolWord{a, b}));
  CHECK_FALSE(m.accepts(SymbolWord{b}));
  CHECK(m.is_dead(m.next(m.start_id(), b)));
}

TEST_CASE("transducer runs") {
  auto const id = identity_transducer(star({a, b}));
  CHECK(transducer_outputs(id, SymbolWord{a, b}) == std::vector<SymbolWord>{{a, b}});
  CHECK(transducer_outputs(id, SymbolWord{c}).empty());

  auto const nd = merge_or_drop();
  CHECK(transducer_outputs(nd, SymbolWord{1, 2}) == std::vector<SymbolWord>{{1}, {1, 1}});

  Transducer loop;  // epsilon / a on a loop: unbounded outputs
  State      q = loop.add_state(true);
  loop.add_initial(q);
  loop.add_transition(q, std::nullopt, {a}, q);
  CHECK_THROWS_AS(transducer_outputs(loop, SymbolWord{}, 100), ResourceLimit);
}

TEST_CASE("relation algebra") {
  auto const r = reverse_relation(single({a, b}, {c}));
  CHECK(transducer_outputs(r, SymbolWord{b, a}) == std::vector<SymbolWord>{{c}});
  CHECK(transducer_outputs(r, SymbolWord{a, b}).empty());

  auto const inv = invert_relation(single({a, b}, {c}));
  CHECK(transducer_outputs(inv, SymbolWord{c}) == std::vector<SymbolWord>{{a, b}});

  auto const comp = compose_relations(single({a}, {b}), single({b}, {c, c}));
  CHECK(transducer_outputs(comp, SymbolWord{a}) == std::vector<SymbolWord>{{c, c}});
  CHECK(compose_relations(single({a}, {b}), single({c}, {c})).num_states() == 0);

  auto const split = split_outputs(single({a}, {a, b, c}));
  CHECK(split.max_output_length() <= 1);
  CHECK(transducer_outputs(split, SymbolWord{a}) == std::vector<SymbolWord>{{a, b, c}});

  auto const image = apply_relation(star({1, 2}), double_ones());
  CHECK(image.accepts(SymbolWord{1, 1, 2}));
  CHECK_FALSE(image.accepts(SymbolWord{1, 2}));
}

TEST_CASE("relation algebra against enumeration") {
  auto const s       = double_ones();
  auto const t       = merge_or_drop();
  auto const st      = compose_relations(s, t);
  auto const inverse = invert_relation(s);
  auto const twice   = reverse_relation(reverse_relation(t));
  for (auto const& x : all_words(Rank(2), 5)) {
    SymbolWord const u(x.begin(), x.end());
    std::vector<SymbolWord> chained;
    for (auto const& mid : transducer_outputs(s, u)) {
      auto outs = transducer_outputs(t, mid);
      chained.insert(chained.end(), outs.begin(), outs.end());
    }
    std::sort(chained.begin(), chained.end());
    chained.erase(std::unique(chained.begin(), chained.end()), chained.end());
    REQUIRE(transducer_outputs(st, u) == chained);
    REQUIRE(transducer_outputs(twice, u) == transducer_outputs(t, u));

    auto const rev_outs = transducer_outputs(reverse_relation(t), rev(u));
    std::vector<SymbolWord> expected;
    for (auto const& v : transducer_outputs(t, u)) {
      expected.push_back(rev(v));
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(rev_outs == expected);

    for (auto const& v : transducer_outputs(s, u)) {
      REQUIRE(transducer_outputs(inverse, v) == std::vector<SymbolWord>{u});
    }
  }
}

TEST_CASE("synchronization") {
  auto const id = identity_transducer(star({a}));
  auto const pr = synchronize(id, Direction::right, 1);
  CHECK(pr.direction == Direction::right);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(pr.nfa.accepts(PairWord(n, p(a, a))));
    CHECK_FALSE(pair_automaton_accepts(pr, repeat(a, n), repeat(a, n + 1)));
  }

  auto const app = append_a();
  auto const r   = synchronize(app, Direction::right, 1);
  auto const l   = synchronize(app, Direction::left, 1);
  CHECK(l.direction == Direction::left);
  for (std::size_t n = 0; n <= 4; ++n) {
    PairWord right(n, p(a, a));
    right.push_back(p(padding, a));
    CHECK(r.nfa.accepts(right));
    PairWord left{p(padding, a)};
    left.insert(left.end(), n, p(a, a));
    CHECK(l.nfa.accepts(left));
    if (n > 0) {
      CHECK_FALSE(r.nfa.accepts(left));
    }
    CHECK(pair_automaton_accepts(r, repeat(a, n), repeat(a, n + 1)));
    CHECK(pair_automaton_accepts(l, repeat(a, n), repeat(a, n + 1)));
    CHECK_FALSE(pair_automaton_accepts(r, repeat(a, n), repeat(a, n + 2)));
    CHECK_FALSE(pair_automaton_accepts(l, repeat(a, n + 1), repeat(a, n + 1)));
  }

  // Every accepted pair word, up to length 4, is well formed and encodes
  // a pair of the relation.
  std::vector<PairLetter> const letters{p(padding, a), p(a, padding), p(a, a),
                                        p(padding, padding)};
  for (auto const* automaton : {&r, &l}) {
    std::vector<PairWord> frontier{{}};
    for (int len = 0; len <= 4; ++len) {
      std::vector<PairWord> next;
      for (auto const& w : frontier) {
        if (automaton->nfa.accepts(w)) {
          REQUIRE(is_padded_pair(automaton->direction, w));
          auto const [u, v] = unpad(w);
          REQUIRE(v.size() == u.size() + 1);
        }
        for (auto x : letters) {
          next.push_back(w);
          next.back().push_back(x);
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST_CASE("synchronization limits") {
  auto const far = single({a}, {a, a, a});
  CHECK_THROWS_AS(synchronize(far, Direction::right, 1), DelayExceeded);
  CHECK_THROWS_AS(synchronize(far, Direction::left, 1), DelayExceeded);
  auto const ok = synchronize(far, Direction::right, 2);
  CHECK(pair_automaton_accepts(ok, SymbolWord{a}, SymbolWord{a, a, a}));
  CHECK_FALSE(pair_automaton_accepts(ok, SymbolWord{a}, SymbolWord{a, a}));

  auto const id = identity_transducer(star({1, 2, 3}));
  CHECK_THROWS_AS(synchronize(id, Direction::right, 2, 1), ResourceLimit);
}

TEST_CASE("synchronized relations agree with the transducer") {
  auto const t = rotate_first();
  for (auto d : {Direction::right, Direction::left}) {
    auto const             pa = synchronize(t, d, 1);
    NfaMatcher<PairLetter> matcher(pa.nfa);
    for (auto const& x : all_words(Rank(2), 5)) {
      SymbolWord const u(x.begin(), x.end());
      REQUIRE(accepted_partners(matcher, d, u, 2, 6) == transducer_outputs(t, u));
    }
  }
  // Unbounded length discrepancy cannot be synchronized.
  CHECK_THROWS_AS(synchronize(double_ones(), Direction::right, 3), DelayExceeded);
}

TEST_CASE("export is deterministic") {
  auto const app = append_a();
  auto const pa  = synchronize(app, Direction::right, 1);
  auto const k   = star({a, b});
  CHECK(to_dot(app, "T") == to_dot(append_a(), "T"));
  CHECK(to_json(pa) == to_json(synchronize(append_a(), Direction::right, 1)));
  CHECK(to_dot(k, "K").starts_with("digraph"));
  CHECK(to_json(k) == to_json(star({a, b})));
  CHECK(to_json(pa).find("\"direction\"") != std::string::npos);
}
