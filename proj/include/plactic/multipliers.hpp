// The regular cross-section K over the column alphabet, the left and right
// multiplication transducers over C, their lifts to the letter alphabet A
// through Q : c_a -> a, and the padded multiplier automata.
//
// Symbol encoding shared by every machine here: the letter x of A is the
// symbol x, and c_a is the symbol a.mask().  Both are nonzero, so padding
// never collides with either alphabet.

#ifndef PLACTIC_MULTIPLIERS_HPP
#define PLACTIC_MULTIPLIERS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "automata.hpp"
#include "core.hpp"
#include "rewriting.hpp"

namespace plactic {

  enum class Side { right, left };

  SymbolWord   to_symbols(std::span<ColumnSymbol const> w);
  SymbolWord   to_symbols(std::span<Letter const> w);
  CWord        to_cword(std::span<Symbol const> w);
  Word         to_word(std::span<Symbol const> w);

  // "c_21" style names for C-symbols, plain letters for A-symbols.
  SymbolNamer column_namer(Rank rank);
  SymbolNamer letter_namer(Rank rank);

  // Start state 0, then one state per column in increasing mask order; the
  // state of c_a is a.mask().  Every state accepts.
  Nfa<Symbol> build_k_acceptor(Rank rank);

  // Right multiplication by c_gamma, reading and writing reversed words.
  Transducer right_multiplier_reversed(Rank rank, Letter gamma);
  // {(u, v) in K x K : u c_gamma = v in the plactic monoid}.
  Transducer right_multiplier(Rank rank, Letter gamma);
  // {(u, v) in K x K : c_gamma u = v in the plactic monoid}.
  Transducer left_multiplier(Rank rank, Letter gamma);

  // A cell written while inserting gamma; column indices are positions in
  // the input word counted from the left, so a cell of a new column has
  // index |u|.
  struct CascadeStep {
    std::size_t row;
    std::size_t column;
    Letter      letter;
  };

  struct RightMultiplication {
    CWord                    product;
    std::vector<CascadeStep> steps;
  };

  // Deterministic run of the right multiplier's lookup table on u, which must
  // be in K (std::invalid_argument otherwise).
  RightMultiplication trace_right_multiplication(Rank                          rank,
                                                 std::span<ColumnSymbol const> u,
                                                 Letter                        gamma);

  struct QRelation {
    Transducer expand;  // c_a -> a
    Transducer factor;  // every factorization of an A-word into columns
  };

  QRelation build_q(Rank rank);

  // The column readings of tableaux: the image of K under Q.
  Nfa<Symbol> build_L(Rank rank);

  // Q^{-1} o t o Q.
  Transducer lift_multiplier(Transducer const& t, QRelation const& q);

  Transducer identity_on_L(Rank rank);

  // Lifted multiplier by gamma over A; nullopt is the empty word.
  Transducer lifted_multiplier(Rank rank, Side side, std::optional<Letter> gamma);

  // Buffer bound for synchronizing the A-level multipliers, whose sides
  // differ in length by exactly one (zero for the empty word).
  inline constexpr std::size_t multiplier_max_delay = 2;

  struct MultiplierAutomata {
    std::optional<Letter> gamma;
    PairAutomaton         right_R;  // right multiplier, right padding
    PairAutomaton         left_R;   // left multiplier, right padding
    PairAutomaton         right_L;  // right multiplier, left padding
    PairAutomaton         left_L;   // left multiplier, left padding
  };

  MultiplierAutomata multiplier_pair_automata(Rank                  rank,
                                              std::optional<Letter> gamma,
                                              std::size_t           max_states
                                              = default_state_limit);

  // Multiplication by the word b over A.  Right multipliers are chained in
  // the order of the letters of b; left multipliers in the reverse order,
  // since c_b u = c_{b_1}(c_{b_2}(... u)).
  Transducer general_multiplier(Rank rank, std::span<Letter const> b, Side side);

}  // namespace plactic

#endif  // PLACTIC_MULTIPLIERS_HPP
