#include "plactic/multipliers.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace plactic {

  SymbolWord to_symbols(std::span<ColumnSymbol const> w) {
    SymbolWord out;
    out.reserve(w.size());
    for (auto c : w) {
      out.push_back(c.mask());
    }
    return out;
  }

  SymbolWord to_symbols(std::span<Letter const> w) {
    return SymbolWord(w.begin(), w.end());
  }

  CWord to_cword(std::span<Symbol const> w) {
    CWord out;
    out.reserve(w.size());
    for (Symbol s : w) {
      out.emplace_back(s);
    }
    return out;
  }

  Word to_word(std::span<Symbol const> w) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) {
      out.push_back(static_cast<Letter>(s));
    }
    return out;
  }

  SymbolNamer column_namer(Rank rank) {
    return [rank](Symbol s) {
      return "c_" + format_subscript(ColumnSymbol(s).word(), rank);
    };
  }

  SymbolNamer letter_namer(Rank rank) {
    return [rank](Symbol s) {
      Letter const x = static_cast<Letter>(s);
      return format_word(std::span<Letter const>(&x, 1), rank);
    };
  }

  Nfa<Symbol> build_k_acceptor(Rank rank) {
    auto const  cols = all_columns(rank);
    Nfa<Symbol> k;
    k.add_state(true);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      k.add_state(true);
    }
    k.add_initial(0);
    for (auto b : cols) {
      k.add_transition(0, b.mask(), b.mask());
    }
    for (auto a : cols) {
      for (auto b : cols) {
        if (column_ge(a, b)) {
          k.add_transition(a.mask(), b.mask(), b.mask());
        }
      }
    }
    return k;
  }

  ////////////////////////////////////////////////////////////////////////
  // Right multiplication
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // What happens to the column x when a letter eta is inserted into row m
    // and is known to land in x or further left, given the column lambda
    // immediately left of x (empty mask: x is leftmost).
    struct CascadeEntry {
      enum class Kind {
        dead,  // inconsistent with the assumptions
        pass,  // lands further left; x is unchanged
        exit,  // x becomes beta and the cascade leaves it for the left
        done   // x becomes beta and the cascade ends in x
      } kind = Kind::dead;
      ColumnSymbol             beta;
      std::size_t              exit_row    = 0;
      Letter                   exit_letter = 0;
      std::vector<CascadeStep> steps;  // cells of x, column field unused
    };

    CascadeEntry cascade(ColumnSymbol lambda, ColumnSymbol x, std::size_t m, Letter eta) {
      CascadeEntry entry;
      bool const   has_left = lambda.mask() != 0;
      if (x.size() + 1 < m) {
        return entry;
      }
      // A row-m landing right of x would need every row-m entry <= eta.
      if (x.size() >= m && x.at_row(m) <= eta
          && (!has_left || lambda.at_row(m) <= eta)) {
        return entry;
      }
      std::vector<Column> fragment;
      if (has_left) {
        fragment.push_back(lambda.column());
      }
      fragment.push_back(x.column());
      auto              t       = Tableau::from_columns(std::move(fragment));
      std::size_t const x_index = has_left ? 1 : 0;
      auto const        trace   = t.insert_from_row(m, eta);
      for (auto const& landing : trace) {
        if (landing.column != x_index) {
          if (entry.steps.empty()) {
            entry.kind = CascadeEntry::Kind::pass;
            return entry;
          }
          entry.kind        = CascadeEntry::Kind::exit;
          entry.beta        = ColumnSymbol::from_column(t.columns()[x_index]);
          entry.exit_row    = landing.row;
          entry.exit_letter = landing.letter;
          return entry;
        }
        entry.steps.push_back({landing.row, 0, landing.letter});
        if (landing.appended) {
          entry.kind = CascadeEntry::Kind::done;
          entry.beta = ColumnSymbol::from_column(t.columns()[x_index]);
          return entry;
        }
      }
      throw std::logic_error("insertion ended without appending");
    }

    class CascadeTable {
     public:
      CascadeEntry const& at(ColumnSymbol lambda, ColumnSymbol x, std::size_t m, Letter eta) {
        auto key          = std::make_tuple(lambda.mask(), x.mask(), m, eta);
        auto [it, fresh]  = entries_.try_emplace(key);
        if (fresh) {
          it->second = cascade(lambda, x, m, eta);
        }
        return it->second;
      }

     private:
      std::map<std::tuple<std::uint32_t, std::uint32_t, std::size_t, Letter>, CascadeEntry>
          entries_;
    };

    // Machine states keyed by (phase, m, eta, guess); guess 0 is the end of
    // the word.
    enum class Phase : std::uint8_t { start, seek, done };
    using RightKey = std::tuple<Phase, std::size_t, Letter, std::uint32_t>;

  }  // namespace

  Transducer right_multiplier_reversed(Rank rank, Letter gamma) {
    check_letters(std::span<Letter const>(&gamma, 1), rank);
    auto const   cols = all_columns(rank);
    CascadeTable table;
    Transducer   t;
    for (auto c : cols) {
      t.declare_input(c.mask());
      t.declare_output(c.mask());
    }
    std::map<RightKey, State> ids;
    std::deque<RightKey>      queue;
    auto id = [&](RightKey const& key) {
      auto [it, fresh] = ids.try_emplace(key, 0);
      if (fresh) {
        bool const accept = std::get<0>(key) == Phase::done && std::get<3>(key) == 0;
        it->second        = t.add_state(accept);
        queue.push_back(key);
      }
      return it->second;
    };
    // Guesses for the symbol left of x: the end of the word, or any column
    // that may precede x in K.
    auto guesses = [&](ColumnSymbol x) {
      std::vector<ColumnSymbol> out{ColumnSymbol()};
      for (auto c : cols) {
        if (column_ge(c, x)) {
          out.push_back(c);
        }
      }
      return out;
    };
    ColumnSymbol const single = ColumnSymbol::letter(gamma);

    t.add_initial(id({Phase::start, 0, 0, 0}));
    while (!queue.empty()) {
      auto const key = queue.front();
      queue.pop_front();
      State const from = ids.at(key);
      auto const [phase, m, eta, g] = key;
      switch (phase) {
        case Phase::start: {
          std::vector<ColumnSymbol> first{ColumnSymbol()};
          first.insert(first.end(), cols.begin(), cols.end());
          for (auto c : first) {
            if (c.mask() == 0 || c.bottom() <= gamma) {
              t.add_transition(from, std::nullopt, {single.mask()}, id({Phase::done, 0, 0, c.mask()}));
            } else {
              t.add_transition(from, std::nullopt, {}, id({Phase::seek, 1, gamma, c.mask()}));
            }
          }
          break;
        }
        case Phase::seek: {
          if (g == 0) {
            break;
          }
          ColumnSymbol const x(g);
          for (auto lambda : guesses(x)) {
            auto const& e = table.at(lambda, x, m, eta);
            switch (e.kind) {
              case CascadeEntry::Kind::dead:
                break;
              case CascadeEntry::Kind::pass:
                t.add_transition(from, g, {g}, id({Phase::seek, m, eta, lambda.mask()}));
                break;
              case CascadeEntry::Kind::exit:
                t.add_transition(from, g, {e.beta.mask()},
                                 id({Phase::seek, e.exit_row, e.exit_letter, lambda.mask()}));
                break;
              case CascadeEntry::Kind::done:
                t.add_transition(from, g, {e.beta.mask()}, id({Phase::done, 0, 0, lambda.mask()}));
                break;
            }
          }
          break;
        }
        case Phase::done: {
          if (g == 0) {
            break;
          }
          for (auto lambda : guesses(ColumnSymbol(g))) {
            t.add_transition(from, g, {g}, id({Phase::done, 0, 0, lambda.mask()}));
          }
          break;
        }
      }
    }
    return t;
  }

  Transducer right_multiplier(Rank rank, Letter gamma) {
    return reverse_relation(right_multiplier_reversed(rank, gamma));
  }

  RightMultiplication trace_right_multiplication(Rank                          rank,
                                                 std::span<ColumnSymbol const> u,
                                                 Letter                        gamma) {
    check_letters(std::span<Letter const>(&gamma, 1), rank);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (!column_ge(u[i], u[i + 1])) {
        throw std::invalid_argument("word is not a normal form");
      }
    }
    CascadeTable        table;
    RightMultiplication result;
    CWord               reversed;  // output, rightmost column first
    std::size_t         i = u.size();
    if (i == 0 || u[i - 1].bottom() <= gamma) {
      reversed.push_back(ColumnSymbol::letter(gamma));
      result.steps.push_back({1, u.size(), gamma});
    } else {
      std::size_t m   = 1;
      Letter      eta = gamma;
      while (true) {
        if (i == 0) {
          throw std::logic_error("cascade ran past the first column");
        }
        --i;
        ColumnSymbol const lambda = i == 0 ? ColumnSymbol() : u[i - 1];
        auto const&        e      = table.at(lambda, u[i], m, eta);
        if (e.kind == CascadeEntry::Kind::dead) {
          throw std::logic_error("cascade table has no entry for a reachable case");
        }
        if (e.kind == CascadeEntry::Kind::pass) {
          reversed.push_back(u[i]);
          continue;
        }
        for (auto step : e.steps) {
          step.column = i;
          result.steps.push_back(step);
        }
        reversed.push_back(e.beta);
        if (e.kind == CascadeEntry::Kind::done) {
          break;
        }
        m   = e.exit_row;
        eta = e.exit_letter;
      }
    }
    while (i > 0) {
      reversed.push_back(u[--i]);
    }
    result.product.assign(reversed.rbegin(), reversed.rend());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left multiplication
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // (phase, pending letter, last column read); phase 0 pending, 1 copy,
    // 2 the final state after flushing the pending letter.
    using LeftKey = std::tuple<int, Letter, std::uint32_t>;

    // Walks every reachable (state, last symbol written) pair and checks the
    // written symbols form a normal form.
    void check_left_outputs(Transducer const& t) {
      std::set<std::pair<State, std::uint32_t>> seen;
      std::vector<std::pair<State, std::uint32_t>> stack;
      for (State s : t.initial_states()) {
        seen.insert({s, 0});
        stack.push_back({s, 0});
      }
      while (!stack.empty()) {
        auto [s, last] = stack.back();
        stack.pop_back();
        for (auto i : t.out_edges(s)) {
          auto const& e    = t.edges()[i];
          std::uint32_t now = last;
          for (Symbol out : e.output) {
            if (now != 0 && !column_ge(ColumnSymbol(now), ColumnSymbol(out))) {
              throw std::logic_error("left multiplier writes a word outside K");
            }
            now = out;
          }
          if (seen.insert({e.to, now}).second) {
            stack.push_back({e.to, now});
          }
        }
      }
    }

  }  // namespace

  Transducer left_multiplier(Rank rank, Letter gamma) {
    check_letters(std::span<Letter const>(&gamma, 1), rank);
    auto const cols = all_columns(rank);
    Transducer t;
    for (auto c : cols) {
      t.declare_input(c.mask());
      t.declare_output(c.mask());
    }
    std::map<LeftKey, State> ids;
    std::deque<LeftKey>      queue;
    auto id = [&](LeftKey const& key) {
      auto [it, fresh] = ids.try_emplace(key, 0);
      if (fresh) {
        it->second = t.add_state(std::get<0>(key) != 0);
        queue.push_back(key);
      }
      return it->second;
    };
    t.add_initial(id({0, gamma, 0}));
    while (!queue.empty()) {
      auto const key = queue.front();
      queue.pop_front();
      State const from              = ids.at(key);
      auto const [phase, eta, last] = key;
      if (phase == 2) {
        continue;
      }
      for (auto a : cols) {
        if (last != 0 && !column_ge(ColumnSymbol(last), a)) {
          continue;
        }
        if (phase == 1) {
          t.add_transition(from, a.mask(), {a.mask()}, id({1, 0, a.mask()}));
          continue;
        }
        ColumnSymbol const held = ColumnSymbol::letter(eta);
        auto const         p    = product_columns(held, a);
        switch (p.kind) {
          case ColumnProduct::Kind::irreducible:
            t.add_transition(from, a.mask(), {held.mask(), a.mask()}, id({1, 0, a.mask()}));
            break;
          case ColumnProduct::Kind::one:
            t.add_transition(from, a.mask(), {p.left.mask()}, id({1, 0, a.mask()}));
            break;
          case ColumnProduct::Kind::two:
            if (p.right.size() != 1) {
              throw std::logic_error("right column of a left product is not a letter");
            }
            t.add_transition(from, a.mask(), {p.left.mask()}, id({0, p.right.top(), a.mask()}));
            break;
        }
      }
      if (phase == 0) {
        t.add_transition(from, std::nullopt, {ColumnSymbol::letter(eta).mask()}, id({2, 0, 0}));
      }
    }
    check_left_outputs(t);
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lifting to A
  ////////////////////////////////////////////////////////////////////////

  QRelation build_q(Rank rank) {
    auto const cols = all_columns(rank);
    QRelation  q;
    State      s = q.expand.add_state(true);
    q.expand.add_initial(s);
    for (Letter x = 1; x <= rank.value(); ++x) {
      q.expand.declare_output(x);
    }
    for (auto c : cols) {
      q.expand.add_transition(s, c.mask(), to_symbols(c.word()), s);
    }
    q.factor = invert_relation(q.expand);
    return q;
  }

  Nfa<Symbol> build_L(Rank rank) {
    return apply_relation(build_k_acceptor(rank), build_q(rank).expand);
  }

  Transducer lift_multiplier(Transducer const& t, QRelation const& q) {
    return compose_relations(compose_relations(q.factor, t), q.expand);
  }

  Transducer identity_on_L(Rank rank) {
    return identity_transducer(build_L(rank));
  }

  Transducer lifted_multiplier(Rank rank, Side side, std::optional<Letter> gamma) {
    if (!gamma) {
      return identity_on_L(rank);
    }
    auto const q = build_q(rank);
    return lift_multiplier(side == Side::right ? right_multiplier(rank, *gamma)
                                               : left_multiplier(rank, *gamma),
                           q);
  }

  MultiplierAutomata multiplier_pair_automata(Rank                  rank,
                                              std::optional<Letter> gamma,
                                              std::size_t           max_states) {
    auto const         right = lifted_multiplier(rank, Side::right, gamma);
    auto const         left  = gamma ? lifted_multiplier(rank, Side::left, gamma) : right;
    std::size_t const  delay = multiplier_max_delay;
    MultiplierAutomata out;
    out.gamma   = gamma;
    out.right_R = synchronize(right, Direction::right, delay, max_states);
    out.left_R  = synchronize(left, Direction::right, delay, max_states);
    out.right_L = synchronize(right, Direction::left, delay, max_states);
    out.left_L  = synchronize(left, Direction::left, delay, max_states);
    return out;
  }

  Transducer general_multiplier(Rank rank, std::span<Letter const> b, Side side) {
    check_letters(b, rank);
    if (b.empty()) {
      return identity_on_L(rank);
    }
    auto const q    = build_q(rank);
    auto       step = [&](Letter x) {
      return lift_multiplier(side == Side::right ? right_multiplier(rank, x)
                                                 : left_multiplier(rank, x),
                             q);
    };
    if (side == Side::right) {
      Transducer out = step(b.front());
      for (std::size_t i = 1; i < b.size(); ++i) {
        out = compose_relations(out, step(b[i]));
      }
      return out;
    }
    Transducer out = step(b.back());
    for (std::size_t i = b.size() - 1; i-- > 0;) {
      out = compose_relations(out, step(b[i]));
    }
    return out;
  }

}  // namespace plactic
