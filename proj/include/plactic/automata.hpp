// Finite automata and transducers over integer symbols, the padded pair
// encodings delta_R / delta_L, relation algebra (reversal, inversion,
// composition, images of regular languages) and the synchronization of
// bounded-discrepancy rational relations into letter-to-letter automata over
// padded pairs.
//
// Symbols are positive integers; 0 is reserved for the padding symbol $.

#ifndef PLACTIC_AUTOMATA_HPP
#define PLACTIC_AUTOMATA_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace plactic {

  using State      = std::uint32_t;
  using Symbol     = std::uint32_t;
  using SymbolWord = std::vector<Symbol>;

  inline constexpr Symbol padding = 0;

  class DelayExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  template <typename Sym>
  class Nfa {
   public:
    struct Edge {
      std::optional<Sym> label;  // nullopt is an epsilon transition
      State              to;
    };

    State add_state(bool accepting = false) {
      edges_.emplace_back();
      accepting_.push_back(accepting);
      return static_cast<State>(edges_.size() - 1);
    }

    void add_initial(State s) {
      initial_.push_back(s);
    }

    void set_accepting(State s, bool value = true) {
      accepting_[s] = value;
    }

    void add_symbol(Sym const& s) {
      alphabet_.insert(s);
    }

    void add_transition(State from, Sym const& label, State to) {
      alphabet_.insert(label);
      edges_[from].push_back({label, to});
    }

    void add_epsilon(State from, State to) {
      edges_[from].push_back({std::nullopt, to});
    }

    std::size_t num_states() const noexcept {
      return edges_.size();
    }

    std::size_t num_transitions() const noexcept {
      std::size_t n = 0;
      for (auto const& e : edges_) {
        n += e.size();
      }
      return n;
    }

    std::vector<State> const& initial_states() const noexcept {
      return initial_;
    }

    bool is_accepting(State s) const {
      return accepting_[s];
    }

    std::vector<Edge> const& edges(State s) const {
      return edges_[s];
    }

    std::set<Sym> const& alphabet() const noexcept {
      return alphabet_;
    }

    // Sorted epsilon closure.
    std::vector<State> closure(std::vector<State> states) const {
      std::vector<char>  seen(edges_.size(), 0);
      std::vector<State> stack;
      for (State s : states) {
        if (!seen[s]) {
          seen[s] = 1;
          stack.push_back(s);
        }
      }
      std::vector<State> result;
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        result.push_back(s);
        for (auto const& e : edges_[s]) {
          if (!e.label && !seen[e.to]) {
            seen[e.to] = 1;
            stack.push_back(e.to);
          }
        }
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    std::vector<State> start() const {
      return closure(initial_);
    }

    std::vector<State> step(std::vector<State> const& states, Sym const& s) const {
      std::vector<State> next;
      for (State q : states) {
        for (auto const& e : edges_[q]) {
          if (e.label && *e.label == s) {
            next.push_back(e.to);
          }
        }
      }
      return closure(std::move(next));
    }

    bool any_accepting(std::vector<State> const& states) const {
      return std::any_of(states.begin(), states.end(), [this](State q) {
        return accepting_[q] != 0;
      });
    }

    bool accepts(std::span<Sym const> w) const {
      auto current = start();
      for (auto const& s : w) {
        if (current.empty()) {
          return false;
        }
        current = step(current, s);
      }
      return any_accepting(current);
    }

   private:
    std::vector<std::vector<Edge>> edges_;
    std::vector<char>              accepting_;
    std::vector<State>             initial_;
    std::set<Sym>                  alphabet_;
  };

  // Accepts the reversals of the words accepted by a.
  template <typename Sym>
  Nfa<Sym> reverse_nfa(Nfa<Sym> const& a) {
    Nfa<Sym> out;
    for (State s = 0; s < a.num_states(); ++s) {
      out.add_state(false);
    }
    for (auto const& x : a.alphabet()) {
      out.add_symbol(x);
    }
    for (State s = 0; s < a.num_states(); ++s) {
      if (a.is_accepting(s)) {
        out.add_initial(s);
      }
      for (auto const& e : a.edges(s)) {
        if (e.label) {
          out.add_transition(e.to, *e.label, s);
        } else {
          out.add_epsilon(e.to, s);
        }
      }
    }
    for (State s : a.initial_states()) {
      out.set_accepting(s);
    }
    return out;
  }

  template <typename Sym>
  bool nfa_accepts(Nfa<Sym> const& a, std::span<Sym const> w) {
    return a.accepts(w);
  }

  // Membership queries against one Nfa with the reachable state sets and
  // their successors memoised, for bulk exhaustive checks.
  template <typename Sym>
  class NfaMatcher {
   public:
    explicit NfaMatcher(Nfa<Sym> const& nfa) : nfa_(nfa) {
      start_ = intern(nfa_.start());
    }

    bool accepts(std::span<Sym const> w) {
      std::size_t current = start_;
      for (auto const& s : w) {
        current = next(current, s);
      }
      return accepting_[current] != 0;
    }

    // Stepwise access; ids name interned state sets.
    std::size_t start_id() const noexcept {
      return start_;
    }

    std::size_t next(std::size_t id, Sym const& s) {
      auto found = successors_[id].find(s);
      if (found != successors_[id].end()) {
        return found->second;
      }
      std::size_t to = intern(nfa_.step(*subsets_[id], s));
      successors_[id].emplace(s, to);
      return to;
    }

    bool is_accepting(std::size_t id) const {
      return accepting_[id] != 0;
    }

    bool is_dead(std::size_t id) const {
      return subsets_[id]->empty();
    }

    std::size_t num_subsets() const noexcept {
      return subsets_.size();
    }

   private:
    std::size_t intern(std::vector<State> set) {
      auto [it, inserted] = ids_.try_emplace(std::move(set), subsets_.size());
      if (inserted) {
        subsets_.push_back(&it->first);
        accepting_.push_back(nfa_.any_accepting(it->first));
        successors_.emplace_back();
      }
      return it->second;
    }

    Nfa<Sym> const&                          nfa_;
    std::map<std::vector<State>, std::size_t> ids_;
    std::vector<std::vector<State> const*>   subsets_;
    std::vector<char>                        accepting_;
    std::vector<std::map<Sym, std::size_t>>  successors_;
    std::size_t                              start_ = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Padded pairs
  ////////////////////////////////////////////////////////////////////////

  // A letter of a padded pair word; either side may be the padding symbol.
  struct PairLetter {
    Symbol left  = padding;
    Symbol right = padding;

    auto operator<=>(PairLetter const&) const = default;
  };

  using PairWord = std::vector<PairLetter>;

  enum class Direction { right, left };

  // Pads the shorter word on the right.
  PairWord delta_R(std::span<Symbol const> u, std::span<Symbol const> v);
  // Pads the shorter word on the left.
  PairWord delta_L(std::span<Symbol const> u, std::span<Symbol const> v);

  PairWord delta(Direction d, std::span<Symbol const> u, std::span<Symbol const> v);

  // True iff w is delta_d(u, v) for some words u, v (padding on one side
  // only, and only at the end for right, at the start for left).
  bool is_padded_pair(Direction d, std::span<PairLetter const> w);

  // Recovers (u, v) from a well-formed padded pair word.
  std::pair<SymbolWord, SymbolWord> unpad(std::span<PairLetter const> w);

  struct PairAutomaton {
    Direction       direction = Direction::right;
    Nfa<PairLetter> nfa;
  };

  bool pair_automaton_accepts(PairAutomaton const&    p,
                              std::span<Symbol const> u,
                              std::span<Symbol const> v);

  ////////////////////////////////////////////////////////////////////////
  // Transducers
  ////////////////////////////////////////////////////////////////////////

  struct TransducerEdge {
    State                 from;
    std::optional<Symbol> input;  // nullopt reads nothing
    SymbolWord            output;
    State                 to;
  };

  class Transducer {
   public:
    State add_state(bool accepting = false);
    void  add_initial(State s);
    void  set_accepting(State s, bool value = true);
    void  add_transition(State                 from,
                         std::optional<Symbol> input,
                         SymbolWord            output,
                         State                 to);

    void declare_input(Symbol s) {
      input_alphabet_.insert(s);
    }
    void declare_output(Symbol s) {
      output_alphabet_.insert(s);
    }

    std::size_t num_states() const noexcept {
      return accepting_.size();
    }

    std::size_t num_transitions() const noexcept {
      return edges_.size();
    }

    std::vector<State> const& initial_states() const noexcept {
      return initial_;
    }

    bool is_accepting(State s) const {
      return accepting_[s] != 0;
    }

    std::vector<TransducerEdge> const& edges() const noexcept {
      return edges_;
    }

    // Indices into edges() of the transitions leaving s.
    std::vector<std::size_t> const& out_edges(State s) const {
      return out_[s];
    }

    std::set<Symbol> const& input_alphabet() const noexcept {
      return input_alphabet_;
    }

    std::set<Symbol> const& output_alphabet() const noexcept {
      return output_alphabet_;
    }

    std::size_t max_output_length() const noexcept;

   private:
    std::vector<char>                     accepting_;
    std::vector<State>                    initial_;
    std::vector<TransducerEdge>           edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::set<Symbol>                      input_alphabet_;
    std::set<Symbol>                      output_alphabet_;
  };

  inline constexpr std::size_t default_output_bound = 1'000'000;

  // All v with (u, v) in the relation, sorted.  Throws ResourceLimit if more
  // than `bound` configurations (state, input position, output) are visited,
  // which is how relations with unbounded outputs surface.
  std::vector<SymbolWord> transducer_outputs(Transducer const&       t,
                                             std::span<Symbol const> u,
                                             std::size_t bound = default_output_bound);

  // {(u^rev, v^rev) : (u, v) in R}: transitions reversed with reversed
  // outputs, initial and accepting states exchanged.
  Transducer reverse_relation(Transducer const& t);

  // {(v, u) : (u, v) in R}.  A transition a/w becomes a chain reading w one
  // symbol at a time that writes a on its first step.
  Transducer invert_relation(Transducer const& t);

  // {(u, w) : (u, v) in S and (v, w) in T for some v}.
  Transducer compose_relations(Transducer const& s, Transducer const& t);

  // Equivalent transducer in which every output has length at most one.
  Transducer split_outputs(Transducer const& t);

  // Keeps only states that are reachable and co-reachable, renumbered in
  // their original order.
  Transducer trim(Transducer const& t);

  // {(w, w) : w in L(a)}.
  Transducer identity_transducer(Nfa<Symbol> const& a);

  // {v : (u, v) in R for some u in L(a)}.
  Nfa<Symbol> apply_relation(Nfa<Symbol> const& a, Transducer const& t);

  inline constexpr std::size_t default_state_limit = 1'000'000;

  // Automaton over padded pairs accepting {delta_d(u, v) : (u, v) in R}.
  //
  // Right padding: states pair a state of t with the symbols already read
  // from each tape of the pair word that t has not consumed (input side) or
  // produced (output side) yet, plus which tapes are still open.  Before
  // each letter t may trail either tape by at most `max_delay` symbols, and
  // at most `max_delay` padding letters are read; configurations from which
  // t can no longer accept are dropped.
  // Left padding synchronizes the reversed relation and reverses the result.
  //
  // Throws DelayExceeded when t is blocked in a configuration that can still
  // lead to acceptance but needs more room than that, and ResourceLimit
  // beyond `max_states` states.
  PairAutomaton synchronize(Transducer const& t,
                            Direction         d,
                            std::size_t       max_delay,
                            std::size_t       max_states = default_state_limit);

  ////////////////////////////////////////////////////////////////////////
  // Export
  ////////////////////////////////////////////////////////////////////////

  using SymbolNamer = std::function<std::string(Symbol)>;

  std::string default_symbol_name(Symbol s);

  std::string to_dot(Nfa<Symbol> const& a,
                     std::string const& name,
                     SymbolNamer const& names = default_symbol_name);
  std::string to_dot(Transducer const&  t,
                     std::string const& name,
                     SymbolNamer const& input_names  = default_symbol_name,
                     SymbolNamer const& output_names = default_symbol_name);
  std::string to_dot(PairAutomaton const& p,
                     std::string const&   name,
                     SymbolNamer const&   names = default_symbol_name);

  std::string to_json(Nfa<Symbol> const& a,
                      SymbolNamer const& names = default_symbol_name);
  std::string to_json(Transducer const& t,
                      SymbolNamer const& input_names  = default_symbol_name,
                      SymbolNamer const& output_names = default_symbol_name);
  std::string to_json(PairAutomaton const& p,
                      SymbolNamer const&   names = default_symbol_name);

}  // namespace plactic

#endif  // PLACTIC_AUTOMATA_HPP
