#include "plactic/automata.hpp"

#include <deque>
#include <tuple>

#include "json.hpp"

namespace plactic {

  ////////////////////////////////////////////////////////////////////////
  // Padded pairs
  ////////////////////////////////////////////////////////////////////////

  PairWord delta_R(std::span<Symbol const> u, std::span<Symbol const> v) {
    std::size_t const len = std::max(u.size(), v.size());
    PairWord          out(len);
    for (std::size_t i = 0; i < len; ++i) {
      out[i] = {i < u.size() ? u[i] : padding, i < v.size() ? v[i] : padding};
    }
    return out;
  }

  PairWord delta_L(std::span<Symbol const> u, std::span<Symbol const> v) {
    std::size_t const len    = std::max(u.size(), v.size());
    std::size_t const u_skip = len - u.size();
    std::size_t const v_skip = len - v.size();
    PairWord          out(len);
    for (std::size_t i = 0; i < len; ++i) {
      out[i] = {i < u_skip ? padding : u[i - u_skip],
                i < v_skip ? padding : v[i - v_skip]};
    }
    return out;
  }

  PairWord delta(Direction d, std::span<Symbol const> u, std::span<Symbol const> v) {
    return d == Direction::right ? delta_R(u, v) : delta_L(u, v);
  }

  bool is_padded_pair(Direction d, std::span<PairLetter const> w) {
    // Positions carrying padding on a side must form a suffix (right) or a
    // prefix (left) of w.
    auto padded_block_ok = [&](auto side) {
      bool seen_pad = false, seen_real = false;
      for (auto const& p : w) {
        bool const pad = side(p) == padding;
        if (d == Direction::right) {
          if (seen_pad && !pad) {
            return false;
          }
        } else if (seen_real && pad) {
          return false;
        }
        seen_pad  = seen_pad || pad;
        seen_real = seen_real || !pad;
      }
      return true;
    };
    for (auto const& p : w) {
      if (p.left == padding && p.right == padding) {
        return false;
      }
    }
    return padded_block_ok([](PairLetter const& p) { return p.left; })
           && padded_block_ok([](PairLetter const& p) { return p.right; });
  }

  std::pair<SymbolWord, SymbolWord> unpad(std::span<PairLetter const> w) {
    std::pair<SymbolWord, SymbolWord> out;
    for (auto const& p : w) {
      if (p.left != padding) {
        out.first.push_back(p.left);
      }
      if (p.right != padding) {
        out.second.push_back(p.right);
      }
    }
    return out;
  }

  bool pair_automaton_accepts(PairAutomaton const&    p,
                              std::span<Symbol const> u,
                              std::span<Symbol const> v) {
    auto const w = delta(p.direction, u, v);
    return p.nfa.accepts(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Transducer
  ////////////////////////////////////////////////////////////////////////

  State Transducer::add_state(bool accepting) {
    accepting_.push_back(accepting);
    out_.emplace_back();
    return static_cast<State>(accepting_.size() - 1);
  }

  void Transducer::add_initial(State s) {
    initial_.push_back(s);
  }

  void Transducer::set_accepting(State s, bool value) {
    accepting_[s] = value;
  }

  void Transducer::add_transition(State                 from,
                                  std::optional<Symbol> input,
                                  SymbolWord            output,
                                  State                 to) {
    if (input) {
      input_alphabet_.insert(*input);
    }
    for (Symbol s : output) {
      output_alphabet_.insert(s);
    }
    out_[from].push_back(edges_.size());
    edges_.push_back({from, input, std::move(output), to});
  }

  std::size_t Transducer::max_output_length() const noexcept {
    std::size_t m = 0;
    for (auto const& e : edges_) {
      m = std::max(m, e.output.size());
    }
    return m;
  }

  namespace {

    // Copies alphabets and the states of t into a fresh transducer.
    Transducer copy_states(Transducer const& t) {
      Transducer out;
      for (State s = 0; s < t.num_states(); ++s) {
        out.add_state(t.is_accepting(s));
      }
      for (Symbol a : t.input_alphabet()) {
        out.declare_input(a);
      }
      for (Symbol a : t.output_alphabet()) {
        out.declare_output(a);
      }
      return out;
    }

  }  // namespace

  std::vector<SymbolWord> transducer_outputs(Transducer const&       t,
                                             std::span<Symbol const> u,
                                             std::size_t             bound) {
    using Config = std::tuple<State, std::size_t, SymbolWord>;
    std::set<Config>        seen;
    std::vector<Config>     stack;
    std::set<SymbolWord>    results;
    for (State s : t.initial_states()) {
      Config c{s, 0, {}};
      if (seen.insert(c).second) {
        stack.push_back(std::move(c));
      }
    }
    while (!stack.empty()) {
      auto [q, pos, out] = std::move(stack.back());
      stack.pop_back();
      if (pos == u.size() && t.is_accepting(q)) {
        results.insert(out);
      }
      for (auto i : t.out_edges(q)) {
        auto const& e    = t.edges()[i];
        std::size_t next = pos;
        if (e.input) {
          if (pos == u.size() || u[pos] != *e.input) {
            continue;
          }
          ++next;
        }
        SymbolWord w = out;
        w.insert(w.end(), e.output.begin(), e.output.end());
        Config c{e.to, next, std::move(w)};
        if (seen.insert(c).second) {
          if (seen.size() > bound) {
            throw ResourceLimit("transducer search exceeded "
                                + std::to_string(bound) + " configurations");
          }
          stack.push_back(std::move(c));
        }
      }
    }
    return {results.begin(), results.end()};
  }

  Transducer reverse_relation(Transducer const& t) {
    Transducer out = copy_states(t);
    for (State s = 0; s < t.num_states(); ++s) {
      out.set_accepting(s, false);
    }
    for (auto const& e : t.edges()) {
      SymbolWord w(e.output.rbegin(), e.output.rend());
      out.add_transition(e.to, e.input, std::move(w), e.from);
    }
    for (State s = 0; s < t.num_states(); ++s) {
      if (t.is_accepting(s)) {
        out.add_initial(s);
      }
    }
    for (State s : t.initial_states()) {
      out.set_accepting(s);
    }
    return out;
  }

  Transducer invert_relation(Transducer const& t) {
    Transducer out;
    for (State s = 0; s < t.num_states(); ++s) {
      out.add_state(t.is_accepting(s));
    }
    for (Symbol a : t.output_alphabet()) {
      out.declare_input(a);
    }
    for (Symbol a : t.input_alphabet()) {
      out.declare_output(a);
    }
    for (State s : t.initial_states()) {
      out.add_initial(s);
    }
    for (auto const& e : t.edges()) {
      SymbolWord written;
      if (e.input) {
        written.push_back(*e.input);
      }
      if (e.output.empty()) {
        out.add_transition(e.from, std::nullopt, std::move(written), e.to);
        continue;
      }
      State prev = e.from;
      for (std::size_t k = 0; k < e.output.size(); ++k) {
        State next = k + 1 == e.output.size() ? e.to : out.add_state();
        out.add_transition(prev, e.output[k], k == 0 ? written : SymbolWord{}, next);
        prev = next;
      }
    }
    return out;
  }

  Transducer split_outputs(Transducer const& t) {
    Transducer out = copy_states(t);
    for (State s : t.initial_states()) {
      out.add_initial(s);
    }
    for (auto const& e : t.edges()) {
      if (e.output.size() <= 1) {
        out.add_transition(e.from, e.input, e.output, e.to);
        continue;
      }
      State prev = e.from;
      for (std::size_t k = 0; k < e.output.size(); ++k) {
        State next = k + 1 == e.output.size() ? e.to : out.add_state();
        out.add_transition(prev, k == 0 ? e.input : std::nullopt, {e.output[k]}, next);
        prev = next;
      }
    }
    return out;
  }

  Transducer trim(Transducer const& t) {
    std::size_t const              n = t.num_states();
    std::vector<char>              fwd(n, 0), bwd(n, 0);
    std::vector<std::vector<State>> preds(n);
    for (auto const& e : t.edges()) {
      preds[e.to].push_back(e.from);
    }
    std::vector<State> stack(t.initial_states().begin(), t.initial_states().end());
    for (State s : stack) {
      fwd[s] = 1;
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (auto i : t.out_edges(s)) {
        State to = t.edges()[i].to;
        if (!fwd[to]) {
          fwd[to] = 1;
          stack.push_back(to);
        }
      }
    }
    for (State s = 0; s < n; ++s) {
      if (t.is_accepting(s)) {
        bwd[s] = 1;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State p : preds[s]) {
        if (!bwd[p]) {
          bwd[p] = 1;
          stack.push_back(p);
        }
      }
    }
    Transducer         out;
    std::vector<State> rename(n, 0);
    for (State s = 0; s < n; ++s) {
      if (fwd[s] && bwd[s]) {
        rename[s] = out.add_state(t.is_accepting(s));
      }
    }
    for (Symbol a : t.input_alphabet()) {
      out.declare_input(a);
    }
    for (Symbol a : t.output_alphabet()) {
      out.declare_output(a);
    }
    for (State s : t.initial_states()) {
      if (fwd[s] && bwd[s]) {
        out.add_initial(rename[s]);
      }
    }
    for (auto const& e : t.edges()) {
      if (fwd[e.from] && bwd[e.from] && fwd[e.to] && bwd[e.to]) {
        out.add_transition(rename[e.from], e.input, e.output, rename[e.to]);
      }
    }
    return out;
  }

  Transducer compose_relations(Transducer const& s, Transducer const& t) {
    Transducer const first  = split_outputs(s);
    Transducer const second = split_outputs(t);

    Transducer                         out;
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>>      queue;
    auto id = [&](State a, State b) {
      auto [it, inserted] = ids.try_emplace({a, b}, 0);
      if (inserted) {
        it->second = out.add_state(first.is_accepting(a) && second.is_accepting(b));
        queue.emplace_back(a, b);
      }
      return it->second;
    };
    for (State a : first.initial_states()) {
      for (State b : second.initial_states()) {
        out.add_initial(id(a, b));
      }
    }
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      State const from = ids.at({a, b});
      for (auto i : first.out_edges(a)) {
        auto const& e = first.edges()[i];
        if (e.output.empty()) {
          out.add_transition(from, e.input, {}, id(e.to, b));
          continue;
        }
        for (auto j : second.out_edges(b)) {
          auto const& f = second.edges()[j];
          if (f.input && *f.input == e.output[0]) {
            out.add_transition(from, e.input, f.output, id(e.to, f.to));
          }
        }
      }
      for (auto j : second.out_edges(b)) {
        auto const& f = second.edges()[j];
        if (!f.input) {
          out.add_transition(from, std::nullopt, f.output, id(a, f.to));
        }
      }
    }
    for (Symbol x : s.input_alphabet()) {
      out.declare_input(x);
    }
    for (Symbol x : t.output_alphabet()) {
      out.declare_output(x);
    }
    return trim(out);
  }

  Transducer identity_transducer(Nfa<Symbol> const& a) {
    Transducer out;
    for (State s = 0; s < a.num_states(); ++s) {
      out.add_state(a.is_accepting(s));
    }
    for (State s : a.initial_states()) {
      out.add_initial(s);
    }
    for (Symbol x : a.alphabet()) {
      out.declare_input(x);
      out.declare_output(x);
    }
    for (State s = 0; s < a.num_states(); ++s) {
      for (auto const& e : a.edges(s)) {
        if (e.label) {
          out.add_transition(s, *e.label, {*e.label}, e.to);
        } else {
          out.add_transition(s, std::nullopt, {}, e.to);
        }
      }
    }
    return out;
  }

  Nfa<Symbol> apply_relation(Nfa<Symbol> const& a, Transducer const& t) {
    Transducer const                   unit = split_outputs(t);
    Nfa<Symbol>                        out;
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>>      queue;
    auto id = [&](State p, State q) {
      auto [it, inserted] = ids.try_emplace({p, q}, 0);
      if (inserted) {
        it->second = out.add_state(a.is_accepting(p) && unit.is_accepting(q));
        queue.emplace_back(p, q);
      }
      return it->second;
    };
    auto link = [&](State from, SymbolWord const& w, State to) {
      if (w.empty()) {
        out.add_epsilon(from, to);
      } else {
        out.add_transition(from, w[0], to);
      }
    };
    for (State p : a.initial_states()) {
      for (State q : unit.initial_states()) {
        out.add_initial(id(p, q));
      }
    }
    for (Symbol x : t.output_alphabet()) {
      out.add_symbol(x);
    }
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop_front();
      State const from = ids.at({p, q});
      for (auto const& e : a.edges(p)) {
        if (!e.label) {
          out.add_epsilon(from, id(e.to, q));
          continue;
        }
        for (auto j : unit.out_edges(q)) {
          auto const& f = unit.edges()[j];
          if (f.input && *f.input == *e.label) {
            link(from, f.output, id(e.to, f.to));
          }
        }
      }
      for (auto j : unit.out_edges(q)) {
        auto const& f = unit.edges()[j];
        if (!f.input) {
          link(from, f.output, id(p, f.to));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Synchronization
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Phases of a right-padded pair word: both tapes live, the input tape
    // has ended, the output tape has ended.
    enum class Tapes : std::uint8_t { both, output_only, input_only };

    struct SyncConfig {
      State        q;
      SymbolWord   pending_in;   // read from the pair word, not consumed by t
      SymbolWord   pending_out;  // read from the pair word, not produced by t
      Tapes        tapes;
      std::uint8_t pads;

      auto operator<=>(SyncConfig const&) const = default;
    };

    // States from which an accepting state is reachable along edges
    // satisfying `usable`.
    template <typename Pred>
    std::vector<char> coreachable(Transducer const& t, Pred&& usable) {
      std::vector<std::vector<State>> preds(t.num_states());
      for (auto const& e : t.edges()) {
        if (usable(e)) {
          preds[e.to].push_back(e.from);
        }
      }
      std::vector<char>  mark(t.num_states(), 0);
      std::vector<State> stack;
      for (State s = 0; s < t.num_states(); ++s) {
        if (t.is_accepting(s)) {
          mark[s] = 1;
          stack.push_back(s);
        }
      }
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : preds[s]) {
          if (!mark[p]) {
            mark[p] = 1;
            stack.push_back(p);
          }
        }
      }
      return mark;
    }

    // Right-padded synchronization of a trimmed transducer whose outputs
    // have length at most one.  Only configurations from which acceptance
    // is still possible are kept.
    class Synchronizer {
     public:
      Synchronizer(Transducer unit, std::size_t max_delay, std::size_t max_states)
          : unit_(std::move(unit)), max_delay_(max_delay), max_states_(max_states) {
        std::set<Symbol> sigma(unit_.input_alphabet());
        sigma.insert(unit_.output_alphabet().begin(), unit_.output_alphabet().end());
        std::vector<Symbol> with_pad{padding};
        with_pad.insert(with_pad.end(), sigma.begin(), sigma.end());
        for (Symbol x : with_pad) {
          for (Symbol y : with_pad) {
            if (x != padding || y != padding) {
              letters_.push_back({x, y});
            }
          }
        }
        no_input_ = coreachable(unit_, [](TransducerEdge const& e) { return !e.input; });
        no_output_
            = coreachable(unit_, [](TransducerEdge const& e) { return e.output.empty(); });
      }

      PairAutomaton run() {
        result_.direction = Direction::right;
        for (auto const& l : letters_) {
          result_.nfa.add_symbol(l);
        }
        for (State q : unit_.initial_states()) {
          SyncConfig c{q, {}, {}, Tapes::both, 0};
          if (live(c)) {
            result_.nfa.add_initial(id(c));
          }
        }
        while (!queue_.empty()) {
          SyncConfig c = std::move(queue_.front());
          queue_.pop_front();
          expand(c);
        }
        return std::move(result_);
      }

     private:
      State id(SyncConfig const& c) {
        auto [it, inserted] = ids_.try_emplace(c, 0);
        if (inserted) {
          if (ids_.size() > max_states_) {
            throw ResourceLimit("synchronized automaton exceeds "
                                + std::to_string(max_states_) + " states");
          }
          bool const accept = unit_.is_accepting(c.q) && c.pending_in.empty()
                              && c.pending_out.empty();
          it->second = result_.nfa.add_state(accept);
          queue_.push_back(c);
        }
        return it->second;
      }

      void expand(SyncConfig const& c) {
        State const from  = ids_.at(c);
        bool        moved = false;
        for (auto i : unit_.out_edges(c.q)) {
          auto const& e = unit_.edges()[i];
          if (e.input && (c.pending_in.empty() || c.pending_in.front() != *e.input)) {
            continue;
          }
          if (!e.output.empty()
              && (c.pending_out.empty() || c.pending_out.front() != e.output[0])) {
            continue;
          }
          SyncConfig to = c;
          to.q          = e.to;
          if (e.input) {
            to.pending_in.erase(to.pending_in.begin());
          }
          if (!e.output.empty()) {
            to.pending_out.erase(to.pending_out.begin());
          }
          if (live(to)) {
            moved = true;
            result_.nfa.add_epsilon(from, id(to));
          }
        }
        for (auto const& l : letters_) {
          bool const left_pad  = l.left == padding;
          bool const right_pad = l.right == padding;
          SyncConfig to        = c;
          if (left_pad) {
            if (c.tapes == Tapes::input_only) {
              continue;
            }
            to.tapes = Tapes::output_only;
          } else if (right_pad) {
            if (c.tapes == Tapes::output_only) {
              continue;
            }
            to.tapes = Tapes::input_only;
          } else if (c.tapes != Tapes::both) {
            continue;
          }
          if (left_pad || right_pad) {
            ++to.pads;
          }
          if (!left_pad) {
            to.pending_in.push_back(l.left);
          }
          if (!right_pad) {
            to.pending_out.push_back(l.right);
          }
          if (!live(to)) {
            continue;
          }
          // The lag bound applies before the letter; the letter itself sits
          // on top of it until t consumes it.
          if (to.pending_in.size() > max_delay_ + 1 || to.pending_out.size() > max_delay_ + 1
              || to.pads > max_delay_) {
            // When t can still move, the same letter is read again after
            // the move; only a configuration where t is blocked needs room.
            if (!moved) {
              throw DelayExceeded("synchronization needs more than "
                                  + std::to_string(max_delay_)
                                  + " buffered symbols");
            }
            continue;
          }
          result_.nfa.add_transition(from, l, id(to));
        }
      }

      // Can t, from c.q, consume c.pending_in and produce c.pending_out, then
      // finish without touching a tape that has ended?
      bool live(SyncConfig const& c) {
        auto cached = live_.find(c);
        if (cached != live_.end()) {
          return cached->second;
        }
        bool const  input_closed  = c.tapes == Tapes::output_only;
        bool const  output_closed = c.tapes == Tapes::input_only;
        auto const  n_in          = c.pending_in.size();
        auto const  n_out         = c.pending_out.size();
        auto        key           = [&](State q, std::size_t i, std::size_t j) {
          return (static_cast<std::uint64_t>(q) * (n_in + 1) + i) * (n_out + 1) + j;
        };
        std::set<std::uint64_t>                           seen{key(c.q, 0, 0)};
        std::vector<std::tuple<State, std::size_t, std::size_t>> stack{{c.q, 0, 0}};
        bool found = false;
        while (!stack.empty()) {
          auto [q, i, j] = stack.back();
          stack.pop_back();
          if (i == n_in && j == n_out
              && (input_closed ? no_input_[q] : output_closed ? no_output_[q] : true)) {
            found = true;
            break;
          }
          for (auto k : unit_.out_edges(q)) {
            auto const& e  = unit_.edges()[k];
            std::size_t ni = i, nj = j;
            if (e.input) {
              if (i < n_in) {
                if (c.pending_in[i] != *e.input) {
                  continue;
                }
                ++ni;
              } else if (input_closed) {
                continue;
              }
            }
            if (!e.output.empty()) {
              if (j < n_out) {
                if (c.pending_out[j] != e.output[0]) {
                  continue;
                }
                ++nj;
              } else if (output_closed) {
                continue;
              }
            }
            if (seen.insert(key(e.to, ni, nj)).second) {
              stack.emplace_back(e.to, ni, nj);
            }
          }
        }
        live_.emplace(c, found);
        return found;
      }

      Transducer                  unit_;
      std::size_t                 max_delay_;
      std::size_t                 max_states_;
      std::vector<PairLetter>     letters_;
      std::vector<char>           no_input_;
      std::vector<char>           no_output_;
      PairAutomaton               result_;
      std::map<SyncConfig, State> ids_;
      std::deque<SyncConfig>      queue_;
      std::map<SyncConfig, bool>  live_;
    };

  }  // namespace

  PairAutomaton synchronize(Transducer const& t,
                            Direction         d,
                            std::size_t       max_delay,
                            std::size_t       max_states) {
    if (d == Direction::right) {
      return Synchronizer(split_outputs(trim(t)), max_delay, max_states).run();
    }
    // delta_L(u, v) is the reversal of delta_R(u^rev, v^rev).
    auto reversed = Synchronizer(split_outputs(trim(reverse_relation(t))), max_delay, max_states)
                        .run();
    return {Direction::left, reverse_nfa(reversed.nfa)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  std::string default_symbol_name(Symbol s) {
    return s == padding ? std::string("$") : std::to_string(s);
  }

  namespace {

    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        out += ch;
      }
      return out + '"';
    }

    std::string word_name(SymbolWord const& w, SymbolNamer const& names) {
      if (w.empty()) {
        return "ε";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += names(w[i]);
      }
      return out;
    }

    std::string pair_name(PairLetter const& p, SymbolNamer const& names) {
      auto side = [&](Symbol s) {
        return s == padding ? std::string("$") : names(s);
      };
      return "(" + side(p.left) + "," + side(p.right) + ")";
    }

    template <typename Sym, typename Label>
    std::string nfa_dot(Nfa<Sym> const& a, std::string const& name, Label&& label) {
      std::string out = "digraph " + quote(name) + " {\n  rankdir=LR;\n";
      out += "  node [shape=record];\n";
      for (State s = 0; s < a.num_states(); ++s) {
        out += "  " + std::to_string(s) + " [label=\"" + std::to_string(s)
               + (a.is_accepting(s) ? "|accept" : "") + "\"";
        if (a.is_accepting(s)) {
          out += ", peripheries=2";
        }
        out += "];\n";
      }
      for (State s : a.initial_states()) {
        out += "  init" + std::to_string(s) + " [shape=point];\n";
        out += "  init" + std::to_string(s) + " -> " + std::to_string(s) + ";\n";
      }
      for (State s = 0; s < a.num_states(); ++s) {
        for (auto const& e : a.edges(s)) {
          out += "  " + std::to_string(s) + " -> " + std::to_string(e.to)
                 + " [label=" + quote(e.label ? label(*e.label) : "ε") + "];\n";
        }
      }
      return out + "}\n";
    }

    template <typename Sym, typename Label>
    nlohmann::json nfa_json(Nfa<Sym> const& a, Label&& label) {
      nlohmann::json out;
      out["states"]    = a.num_states();
      out["initial"]   = a.initial_states();
      auto accepting   = nlohmann::json::array();
      auto transitions = nlohmann::json::array();
      auto alphabet    = nlohmann::json::array();
      for (auto const& x : a.alphabet()) {
        alphabet.push_back(label(x));
      }
      for (State s = 0; s < a.num_states(); ++s) {
        if (a.is_accepting(s)) {
          accepting.push_back(s);
        }
        for (auto const& e : a.edges(s)) {
          transitions.push_back(
              {{"from", s},
               {"label", e.label ? nlohmann::json(label(*e.label)) : nlohmann::json()},
               {"to", e.to}});
        }
      }
      out["alphabet"]    = alphabet;
      out["accepting"]   = accepting;
      out["transitions"] = transitions;
      return out;
    }

  }  // namespace

  std::string to_dot(Nfa<Symbol> const& a, std::string const& name, SymbolNamer const& names) {
    return nfa_dot(a, name, names);
  }

  std::string to_dot(PairAutomaton const& p, std::string const& name, SymbolNamer const& names) {
    return nfa_dot(p.nfa, name, [&](PairLetter const& l) { return pair_name(l, names); });
  }

  std::string to_dot(Transducer const&  t,
                     std::string const& name,
                     SymbolNamer const& input_names,
                     SymbolNamer const& output_names) {
    std::string out = "digraph " + quote(name) + " {\n  rankdir=LR;\n";
    out += "  node [shape=record];\n";
    for (State s = 0; s < t.num_states(); ++s) {
      out += "  " + std::to_string(s) + " [label=\"" + std::to_string(s)
             + (t.is_accepting(s) ? "|accept" : "") + "\"";
      if (t.is_accepting(s)) {
        out += ", peripheries=2";
      }
      out += "];\n";
    }
    for (State s : t.initial_states()) {
      out += "  init" + std::to_string(s) + " [shape=point];\n";
      out += "  init" + std::to_string(s) + " -> " + std::to_string(s) + ";\n";
    }
    for (auto const& e : t.edges()) {
      std::string label = (e.input ? input_names(*e.input) : std::string("ε")) + "/"
                          + word_name(e.output, output_names);
      out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to)
             + " [label=" + quote(label) + "];\n";
    }
    return out + "}\n";
  }

  std::string to_json(Nfa<Symbol> const& a, SymbolNamer const& names) {
    return nfa_json(a, names).dump();
  }

  std::string to_json(PairAutomaton const& p, SymbolNamer const& names) {
    auto out = nfa_json(p.nfa, [&](PairLetter const& l) {
      auto side = [&](Symbol s) {
        return s == padding ? std::string("$") : names(s);
      };
      return nlohmann::json::array({side(l.left), side(l.right)});
    });
    out["direction"] = p.direction == Direction::right ? "R" : "L";
    return out.dump();
  }

  std::string to_json(Transducer const&  t,
                      SymbolNamer const& input_names,
                      SymbolNamer const& output_names) {
    nlohmann::json out;
    out["states"]  = t.num_states();
    out["initial"] = t.initial_states();
    auto accepting = nlohmann::json::array();
    for (State s = 0; s < t.num_states(); ++s) {
      if (t.is_accepting(s)) {
        accepting.push_back(s);
      }
    }
    out["accepting"] = accepting;
    auto ins         = nlohmann::json::array();
    auto outs        = nlohmann::json::array();
    for (Symbol x : t.input_alphabet()) {
      ins.push_back(input_names(x));
    }
    for (Symbol x : t.output_alphabet()) {
      outs.push_back(output_names(x));
    }
    out["input_alphabet"]  = ins;
    out["output_alphabet"] = outs;
    auto transitions       = nlohmann::json::array();
    for (auto const& e : t.edges()) {
      auto written = nlohmann::json::array();
      for (Symbol x : e.output) {
        written.push_back(output_names(x));
      }
      transitions.push_back(
          {{"from", e.from},
           {"input", e.input ? nlohmann::json(input_names(*e.input)) : nlohmann::json()},
           {"output", written},
           {"to", e.to}});
    }
    out["transitions"] = transitions;
    return out.dump();
  }

}  // namespace plactic
