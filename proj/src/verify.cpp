#include "plactic/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "plactic/multipliers.hpp"
#include "plactic/rewriting.hpp"

namespace plactic {

  namespace {

    constexpr std::size_t max_stored_failures = 20;

    std::string show(std::span<Letter const> w, Rank rank) {
      return w.empty() ? std::string("ε") : format_word(w, rank);
    }

    std::string show_symbols(std::span<Symbol const> w, Rank rank) {
      return show(to_word(w), rank);
    }

    std::string show_outputs(std::vector<SymbolWord> const& outs, Rank rank) {
      std::string s = "{";
      for (std::size_t i = 0; i < outs.size(); ++i) {
        s += (i ? ", " : "") + show_symbols(outs[i], rank);
      }
      return s + "}";
    }

    std::string show_c(std::span<ColumnSymbol const> w, Rank rank) {
      return w.empty() ? std::string("ε") : format_cword(w, rank);
    }

    Word times(std::span<Letter const> u, std::span<Letter const> b, Side side) {
      Word w;
      if (side == Side::right) {
        w.assign(u.begin(), u.end());
        w.insert(w.end(), b.begin(), b.end());
      } else {
        w.assign(b.begin(), b.end());
        w.insert(w.end(), u.begin(), u.end());
      }
      return w;
    }

    char const* side_name(Side side) {
      return side == Side::right ? "right" : "left";
    }

    // Normal forms (over C) of all elements with at most max_len cells.
    std::vector<CWord> k_words(Rank rank, std::size_t max_len) {
      std::vector<CWord> out;
      for (auto const& w : column_readings(rank, max_len)) {
        CWord      c;
        auto const t = tableau_of_word(w);
        for (auto const& col : t.columns()) {
          c.push_back(ColumnSymbol::from_column(col));
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    // All words over C of length at most max_len.
    std::vector<CWord> all_cwords(Rank rank, std::size_t max_len) {
      auto const         cols = all_columns(rank);
      std::vector<CWord> out{{}};
      std::size_t        begin = 0;
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t const end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (auto c : cols) {
            CWord w = out[i];
            w.push_back(c);
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // core
    ////////////////////////////////////////////////////////////////////////

    void check_core(VerifyOptions const& o, SuiteReport& r) {
      Rank const rank  = o.rank;
      auto const words = all_words(rank, o.max_len);
      // Column readings name tableaux.
      std::map<Word, std::vector<Word>> classes;
      for (auto const& w : words) {
        auto const t = tableau_of_word(w);
        if (t.num_columns() != lnds(w) || t.num_rows() != lds(w)) {
          r.fail("shape of P(" + show(w, rank) + ") is not (lnds, lds)");
        }
        if (t.num_cells() != w.size()) {
          r.fail("P(" + show(w, rank) + ") has the wrong number of cells");
        }
        if (!(tableau_of_word(column_reading(t)) == t)
            || !(tableau_of_word(row_reading(t)) == t)) {
          r.fail("readings of P(" + show(w, rank) + ") do not recover it");
        }
        for (auto const& row : t.rows()) {
          if (!is_row(row)) {
            r.fail("P(" + show(w, rank) + ") has a row that is not a row");
          }
        }
        classes[column_reading(t)].push_back(w);
      }
      r.count("words", words.size());

      // Knuth classes coincide with the fibres of P.
      std::size_t pairs = 0;
      for (auto const& [reading, members] : classes) {
        auto const cls = knuth_class(members.front(), o.class_limit);
        if (cls != members) {
          r.fail("Knuth class of " + show(members.front(), rank)
                 + " differs from the words with the same tableau");
        }
        pairs += members.size() * members.size();
      }
      r.count("tableaux", classes.size());
      r.count("equivalent pairs", pairs);

      for (auto const& [a, b] : knuth_relations(rank)) {
        if (!(tableau_of_word(a) == tableau_of_word(b))) {
          r.fail("relation " + show(a, rank) + " = " + show(b, rank) + " changes P");
        }
      }
      r.count("relations", knuth_relations(rank).size());
    }

    ////////////////////////////////////////////////////////////////////////
    // rewriting
    ////////////////////////////////////////////////////////////////////////

    void check_rewriting(VerifyOptions const& o, SuiteReport& r) {
      Rank const rank   = o.rank;
      auto const system = RewritingSystem::generate(rank);
      auto const cols   = all_columns(rank);

      std::size_t incomparable = 0, two_column = 0;
      for (auto a : cols) {
        for (auto b : cols) {
          if (column_ge(a, b)) {
            continue;
          }
          ++incomparable;
          Rule const* rule = system.find(a, b);
          if (rule == nullptr) {
            r.fail("no rule for " + show_c(CWord{a, b}, rank));
            continue;
          }
          auto const p = tableau_of_word(decode_word(rule->lhs));
          if (!is_normal(rule->rhs) || !(tableau_of_word(decode_word(rule->rhs)) == p)) {
            r.fail("rule for " + show_c(rule->lhs, rank) + " has a wrong right side");
          }
          if (p.num_columns() > 2) {
            r.fail("P(" + show_c(rule->lhs, rank) + ") has more than two columns");
          }
          if (p.num_columns() == 2) {
            ++two_column;
            if (p.columns()[0].size() <= a.size()) {
              r.fail("left column of P(" + show_c(rule->lhs, rank) + ") is not longer");
            }
          }
        }
      }
      if (incomparable != system.size()) {
        r.fail("rule count " + std::to_string(system.size()) + " differs from "
               + std::to_string(incomparable) + " incomparable pairs");
      }
      r.count("rules", system.size());
      r.count("two-column products", two_column);

      OrderKey const order;
      try {
        auto const cert = check_termination(system, order);
        r.count("decreasing rules", cert.comparisons.size());
        auto const basis = gsb_export(system, order);
        if (basis.elements.size() != system.size()) {
          r.fail("basis size differs from rule count");
        }
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
          auto const& b = basis.elements[i];
          if (i < system.size()
              && (b.leading != system.rules()[i].lhs || b.trailing != system.rules()[i].rhs)) {
            r.fail("basis element " + std::to_string(i) + " is not its rule");
          }
          if (!order.word_less(b.trailing, b.leading)) {
            r.fail("basis element " + std::to_string(i) + " has a wrong leading term");
          }
        }
      } catch (ViolationFound const& e) {
        r.fail(e.what());
      }

      auto const pairs     = critical_pairs(system);
      std::size_t resolved = 0;
      for (auto const& cp : pairs) {
        if (cp.converges()) {
          ++resolved;
        } else {
          r.fail("critical pair " + show_c(CWord{cp.a, cp.b, cp.c}, rank) + " splits into "
                 + show_c(cp.via_left, rank) + " and " + show_c(cp.via_right, rank));
        }
      }
      r.count("critical pairs", pairs.size());
      r.count("critical pairs resolved", resolved);

      auto const words = all_words(rank, o.max_len);
      for (auto const& w : words) {
        auto const nf = normalize(encode_word(w), system);
        if (!is_normal(nf) || decode_word(nf) != column_reading(tableau_of_word(w))) {
          r.fail("normal form of " + show(w, rank) + " is " + show_c(nf, rank));
        }
      }
      r.count("words normalized", words.size());
    }

    ////////////////////////////////////////////////////////////////////////
    // automata
    ////////////////////////////////////////////////////////////////////////

    void check_automata(VerifyOptions const& o, SuiteReport& r) {
      Rank const rank = o.rank;

      // Padding over a three-letter alphabet.
      auto const  small = all_words(Rank(3), std::min<std::size_t>(o.max_len, 6));
      std::size_t encoded = 0;
      for (auto const& u : small) {
        auto const su = to_symbols(u);
        SymbolWord ru(su.rbegin(), su.rend());
        for (auto const& v : small) {
          auto const sv = to_symbols(v);
          SymbolWord rv(sv.rbegin(), sv.rend());
          auto       right = delta_R(su, sv);
          auto const left  = delta_L(su, sv);
          if (!is_padded_pair(Direction::right, right) || !is_padded_pair(Direction::left, left)
              || unpad(right) != std::pair(su, sv) || unpad(left) != std::pair(su, sv)) {
            r.fail("padding of (" + show(u, Rank(3)) + ", " + show(v, Rank(3)) + ")");
          }
          std::reverse(right.begin(), right.end());
          if (right != delta_L(ru, rv)) {
            r.fail("duality fails on (" + show(u, Rank(3)) + ", " + show(v, Rank(3)) + ")");
          }
          ++encoded;
        }
      }
      r.count("padded pairs", encoded);

      // Relation algebra and synchronization on the column-level multipliers.
      auto const        ks    = k_words(rank, o.max_len);
      std::size_t const delay = multiplier_max_delay;
      std::size_t       sync_pairs = 0, composed = 0;
      for (Letter g = 1; g <= rank.value(); ++g) {
        for (Side side : {Side::right, Side::left}) {
          auto const t   = side == Side::right ? right_multiplier(rank, g)
                                               : left_multiplier(rank, g);
          auto const rr  = reverse_relation(reverse_relation(t));
          auto const inv = invert_relation(t);
          PairAutomaton const sync[2] = {synchronize(t, Direction::right, delay, o.max_states),
                                         synchronize(t, Direction::left, delay, o.max_states)};
          NfaMatcher<PairLetter> m_right(sync[0].nfa), m_left(sync[1].nfa);
          for (auto const& u : ks) {
            auto const su   = to_symbols(u);
            auto const outs = transducer_outputs(t, su);
            if (transducer_outputs(rr, su) != outs) {
              r.fail(std::string("double reversal changes the ") + side_name(side)
                     + " multiplier on " + show_c(u, rank));
            }
            for (auto const& v : outs) {
              auto const back = transducer_outputs(inv, v);
              if (!std::binary_search(back.begin(), back.end(), su)) {
                r.fail("inverse relation misses a pair");
              }
            }
            for (auto const& v : ks) {
              auto const sv     = to_symbols(v);
              bool const expect = std::binary_search(outs.begin(), outs.end(), sv);
              if (m_right.accepts(delta_R(su, sv)) != expect
                  || m_left.accepts(delta_L(su, sv)) != expect) {
                r.fail(std::string("synchronized ") + side_name(side) + " multiplier by "
                       + std::to_string(g) + " disagrees on (" + show_c(u, rank) + ", "
                       + show_c(v, rank) + ")");
              }
              ++sync_pairs;
            }
          }
        }
      }
      r.count("synchronized pairs", sync_pairs);

      // Composition against chained enumeration.
      for (Letter g = 1; g <= rank.value(); ++g) {
        for (Letter h = 1; h <= rank.value(); ++h) {
          auto const first  = right_multiplier(rank, g);
          auto const second = left_multiplier(rank, h);
          auto const both   = compose_relations(first, second);
          for (auto const& u : ks) {
            auto const         su = to_symbols(u);
            std::set<SymbolWord> expect;
            for (auto const& mid : transducer_outputs(first, su)) {
              for (auto const& w : transducer_outputs(second, mid)) {
                expect.insert(w);
              }
            }
            auto const got = transducer_outputs(both, su);
            if (std::vector<SymbolWord>(expect.begin(), expect.end()) != got) {
              r.fail("composition disagrees on " + show_c(u, rank));
            }
            ++composed;
          }
        }
      }
      r.count("composed inputs", composed);
    }

    ////////////////////////////////////////////////////////////////////////
    // multipliers
    ////////////////////////////////////////////////////////////////////////

    void check_multipliers(VerifyOptions const& o, SuiteReport& r) {
      Rank const  rank   = o.rank;
      int const   n      = rank.value();
      auto const  system = RewritingSystem::generate(rank);
      auto const  ks     = k_words(rank, o.max_len);
      auto const  ls     = column_readings(rank, o.max_len);
      auto const  words  = all_words(rank, o.max_len);

      // K acceptor against the normal-form test.
      {
        auto const           k = build_k_acceptor(rank);
        NfaMatcher<Symbol>   m(k);
        std::size_t const    len = n <= 4 ? 4 : 3;
        auto const           cw  = all_cwords(rank, len);
        for (auto const& w : cw) {
          if (m.accepts(to_symbols(w)) != (normalize(w, system) == w)) {
            r.fail("K acceptor is wrong on " + show_c(w, rank));
          }
        }
        r.count("C-words classified", cw.size());
      }

      // Column-level multipliers.
      std::size_t const off_k_len = n <= 3 ? 3 : 2;
      auto const        off_k     = all_cwords(rank, off_k_len);
      for (Letter g = 1; g <= n; ++g) {
        Word const gw{g};
        for (Side side : {Side::right, Side::left}) {
          auto const t = side == Side::right ? right_multiplier(rank, g) : left_multiplier(rank, g);
          for (auto const& u : ks) {
            auto const expect
                = to_symbols(normalize(encode_word(times(decode_word(u), gw, side)), system));
            auto const got = transducer_outputs(t, to_symbols(u));
            if (got.size() != 1 || got[0] != expect) {
              r.fail(std::string(side_name(side)) + " multiplier by " + std::to_string(g)
                     + " on " + show_c(u, rank) + " gives "
                     + std::to_string(got.size()) + " outputs");
            }
          }
          for (auto const& u : off_k) {
            if (!is_normal(u) && !transducer_outputs(t, to_symbols(u)).empty()) {
              r.fail(std::string(side_name(side)) + " multiplier accepts " + show_c(u, rank)
                     + " outside K");
            }
          }
        }
        for (auto const& u : ks) {
          auto const run = trace_right_multiplication(rank, u, g);
          auto const expect
              = normalize(encode_word(times(decode_word(u), gw, Side::right)), system);
          if (run.product != expect) {
            r.fail("traced product of " + show_c(u, rank) + " by " + std::to_string(g));
          }
          for (std::size_t i = 1; i < run.steps.size(); ++i) {
            if (run.steps[i].row != run.steps[i - 1].row + 1
                || run.steps[i].column > run.steps[i - 1].column) {
              r.fail("bumping path of " + show_c(u, rank) + " by " + std::to_string(g)
                     + " moves right");
            }
          }
        }
      }
      r.count("K-words multiplied", ks.size() * 2 * n);

      // L and Q.
      auto const         l = build_L(rank);
      NfaMatcher<Symbol> l_match(l);
      std::set<Word>     l_set(ls.begin(), ls.end());
      for (auto const& w : words) {
        bool const in_l = column_reading(tableau_of_word(w)) == w;
        if (l_match.accepts(to_symbols(w)) != in_l || l_set.contains(w) != in_l) {
          r.fail("L acceptor is wrong on " + show(w, rank));
        }
      }
      r.count("A-words classified", words.size());
      auto const q = build_q(rank);
      for (auto const& u : ks) {
        auto const su   = to_symbols(u);
        auto const outs = transducer_outputs(q.expand, su);
        auto const back = transducer_outputs(q.factor, to_symbols(decode_word(u)));
        if (outs.size() != 1 || to_word(outs[0]) != decode_word(u)
            || !std::binary_search(back.begin(), back.end(), su)) {
          r.fail("Q does not round-trip " + show_c(u, rank));
        }
      }

      // Lifted multipliers and their padded automata.
      std::vector<std::optional<Letter>> gammas{std::nullopt};
      for (Letter g = 1; g <= n; ++g) {
        gammas.emplace_back(g);
      }
      std::size_t lifted = 0, pairs = 0;
      for (auto gamma : gammas) {
        Word const  gw     = gamma ? Word{*gamma} : Word{};
        std::string label  = gamma ? std::to_string(*gamma) : std::string("ε");
        auto const  autos  = multiplier_pair_automata(rank, gamma, o.max_states);
        struct Check {
          Side                 side;
          PairAutomaton const* p;
        };
        Check const checks[] = {{Side::right, &autos.right_R},
                                {Side::left, &autos.left_R},
                                {Side::right, &autos.right_L},
                                {Side::left, &autos.left_L}};
        for (Side side : {Side::right, Side::left}) {
          auto const t = lifted_multiplier(rank, side, gamma);
          for (auto const& w : words) {
            bool const in_l = l_set.contains(w);
            auto const got  = transducer_outputs(t, to_symbols(w));
            if (!in_l) {
              if (!got.empty()) {
                r.fail("lifted multiplier accepts " + show(w, rank) + " outside L");
              }
              continue;
            }
            auto const expect = to_symbols(column_reading(tableau_of_word(times(w, gw, side))));
            if (got.size() != 1 || got[0] != expect) {
              r.fail(std::string("lifted ") + side_name(side) + " multiplier by " + label
                     + " on " + show(w, rank) + " gives " + show_outputs(got, rank));
            }
            ++lifted;
          }
        }
        for (auto const& c : checks) {
          NfaMatcher<PairLetter> m(c.p->nfa);
          for (auto const& u : ls) {
            auto const expect
                = to_symbols(column_reading(tableau_of_word(times(u, gw, c.side))));
            std::vector<SymbolWord> want;
            if (expect.size() <= o.max_len) {
              want.push_back(expect);
            }
            auto const got
                = accepted_partners(m, c.p->direction, to_symbols(u), n, o.max_len);
            if (got != want) {
              r.fail(std::string(side_name(c.side)) + " multiplier automaton by " + label
                     + (c.p->direction == Direction::right ? " (right padded)" : " (left padded)")
                     + " on " + show(u, rank) + " accepts " + show_outputs(got, rank));
            }
            pairs += ls.size();
          }
        }
      }
      r.count("lifted inputs", lifted);
      r.count("padded pairs decided", pairs);

      // Multiplication by words of length two.
      if (n >= 2) {
        std::size_t const len = std::min<std::size_t>(o.max_len, 5);
        for (Word const& b : {Word{1, 2}, Word{2, 1}}) {
          for (Side side : {Side::right, Side::left}) {
            auto const t = general_multiplier(rank, b, side);
            for (auto const& u : column_readings(rank, len)) {
              auto const expect = to_symbols(column_reading(tableau_of_word(times(u, b, side))));
              auto const got    = transducer_outputs(t, to_symbols(u));
              if (got.size() != 1 || got[0] != expect) {
                r.fail(std::string(side_name(side)) + " multiplication by "
                       + show(b, rank) + " on " + show(u, rank) + " gives "
                       + show_outputs(got, rank));
              }
            }
          }
        }
      }
    }

  }  // namespace

  void SuiteReport::count(std::string what, std::size_t n) {
    counts.emplace_back(std::move(what), n);
  }

  void SuiteReport::fail(std::string witness) {
    if (failures.size() < max_stored_failures) {
      failures.push_back(std::move(witness));
    }
    ++failure_count;
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"core", "rewriting", "automata", "multipliers"};
    return names;
  }

  SuiteReport run_suite(std::string_view name, VerifyOptions const& options) {
    SuiteReport report;
    report.name = std::string(name);
    if (name == "core") {
      check_core(options, report);
    } else if (name == "rewriting") {
      check_rewriting(options, report);
    } else if (name == "automata") {
      check_automata(options, report);
    } else if (name == "multipliers") {
      check_multipliers(options, report);
    } else {
      throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    return report;
  }

  std::string format_report(SuiteReport const& report) {
    std::string out = report.name + ": " + (report.passed() ? "pass" : "FAIL") + "\n";
    for (auto const& [what, n] : report.counts) {
      out += "  " + what + ": " + std::to_string(n) + "\n";
    }
    if (!report.passed()) {
      out += "  failures: " + std::to_string(report.failure_count) + "\n";
      for (auto const& f : report.failures) {
        out += "    " + f + "\n";
      }
    }
    return out;
  }

  std::vector<Word> all_words(Rank rank, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (int x = 1; x <= rank.value(); ++x) {
          Word w = out[i];
          w.push_back(static_cast<Letter>(x));
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  std::vector<Word> column_readings(Rank rank, std::size_t max_len) {
    std::vector<Word> out;
    for (auto const& w : all_words(rank, max_len)) {
      if (column_reading(tableau_of_word(w)) == w) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<SymbolWord> accepted_partners(NfaMatcher<PairLetter>& matcher,
                                            Direction               direction,
                                            std::span<Symbol const> u,
                                            Symbol                  alphabet,
                                            std::size_t             max_len) {
    std::set<SymbolWord> found;
    SymbolWord           v;
    for (std::size_t len_v = 0; len_v <= max_len; ++len_v) {
      std::size_t const len    = std::max(u.size(), len_v);
      std::size_t const u_skip = direction == Direction::right ? 0 : len - u.size();
      std::size_t const v_skip = direction == Direction::right ? 0 : len - len_v;
      auto walk = [&](auto& self, std::size_t p, std::size_t id) -> void {
        if (matcher.is_dead(id)) {
          return;
        }
        if (p == len) {
          if (matcher.is_accepting(id)) {
            found.insert(v);
          }
          return;
        }
        Symbol const left = p >= u_skip && p - u_skip < u.size() ? u[p - u_skip] : padding;
        if (p < v_skip || p - v_skip >= len_v) {
          self(self, p + 1, matcher.next(id, {left, padding}));
          return;
        }
        for (Symbol x = 1; x <= alphabet; ++x) {
          v.push_back(x);
          self(self, p + 1, matcher.next(id, {left, x}));
          v.pop_back();
        }
      };
      walk(walk, 0, matcher.start_id());
    }
    return {found.begin(), found.end()};
  }

}  // namespace plactic
