// Exhaustive desk-scale checks of every module against the tableau oracle.

#ifndef PLACTIC_VERIFY_HPP
#define PLACTIC_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "automata.hpp"
#include "core.hpp"

namespace plactic {

  struct VerifyOptions {
    Rank        rank{3};
    std::size_t max_len     = 6;
    std::size_t class_limit = default_class_limit;
    std::size_t max_states  = default_state_limit;
  };

  struct SuiteReport {
    std::string                                      name;
    std::vector<std::pair<std::string, std::size_t>> counts;
    std::vector<std::string>                         failures;  // first few witnesses
    std::size_t                                      failure_count = 0;

    bool passed() const noexcept {
      return failure_count == 0;
    }

    void count(std::string what, std::size_t n);
    void fail(std::string witness);
  };

  // "core", "rewriting", "automata", "multipliers".
  std::vector<std::string> const& suite_names();

  // Throws std::invalid_argument for an unknown suite name.
  SuiteReport run_suite(std::string_view name, VerifyOptions const& options);

  std::string format_report(SuiteReport const& report);

  // Every word of length at most max_len over the rank, shortest first and
  // lexicographic within a length.
  std::vector<Word> all_words(Rank rank, std::size_t max_len);

  // The column readings of tableaux with at most max_len cells, in the same
  // order.
  std::vector<Word> column_readings(Rank rank, std::size_t max_len);

  // Every v over {1, ..., alphabet} with |v| <= max_len such that the pair
  // automaton accepts (u, v), sorted.  Walks the automaton letter by letter
  // and abandons prefixes on which it has no live state.
  std::vector<SymbolWord> accepted_partners(NfaMatcher<PairLetter>& matcher,
                                            Direction               direction,
                                            std::span<Symbol const> u,
                                            Symbol                  alphabet,
                                            std::size_t             max_len);

}  // namespace plactic

#endif  // PLACTIC_VERIFY_HPP
