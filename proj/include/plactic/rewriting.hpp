// The finite complete rewriting system over the column alphabet
// C = {c_a : a a column}: rule generation, leftmost rewriting, the
// termination and critical-pair checks, and the Groebner-Shirshov basis
// export for the corresponding algebra.

#ifndef PLACTIC_REWRITING_HPP
#define PLACTIC_REWRITING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace plactic {

  // Largest rank for which column symbols (bitmasks) are supported.
  inline constexpr int max_column_rank = 20;

  // Throws RankError if rank exceeds max_column_rank.
  void check_column_rank(Rank rank);

  // The generator c_a of C.  Stored as the set of letters of the column a:
  // bit (x - 1) is set iff x occurs in a.  Comparing masks numerically is the
  // same as comparing the decreasing subscript words lexicographically.
  class ColumnSymbol {
   public:
    constexpr ColumnSymbol() = default;
    explicit constexpr ColumnSymbol(std::uint32_t mask) : mask_(mask) {}

    static ColumnSymbol from_column(Column const& c);
    static ColumnSymbol letter(Letter x) {
      return ColumnSymbol(std::uint32_t{1} << (x - 1));
    }

    std::uint32_t mask() const noexcept {
      return mask_;
    }

    std::size_t size() const noexcept;
    Column      column() const;
    Word        word() const;

    // Top (largest) and bottom (smallest) letters.
    Letter top() const noexcept;
    Letter bottom() const noexcept;

    // Letter at row r, counted from the bottom starting at 1.
    Letter at_row(std::size_t r) const;

    auto operator<=>(ColumnSymbol const&) const = default;

   private:
    std::uint32_t mask_ = 0;
  };

  using CWord = std::vector<ColumnSymbol>;

  bool column_ge(ColumnSymbol a, ColumnSymbol b);

  // All 2^n - 1 columns, in increasing mask (= lexicographic) order.
  std::vector<ColumnSymbol> all_columns(Rank rank);

  // P(ab) for columns a, b when a and b are not column_ge related.
  struct ColumnProduct {
    enum class Kind { irreducible, one, two };
    Kind         kind = Kind::irreducible;
    ColumnSymbol left;
    ColumnSymbol right;  // only for Kind::two
  };

  ColumnProduct product_columns(ColumnSymbol a, ColumnSymbol b);

  // Generated rules always have a two-symbol lhs; from_rules accepts any
  // nonempty lhs.
  struct Rule {
    CWord lhs;
    CWord rhs;

    bool operator==(Rule const&) const = default;
  };

  inline constexpr std::size_t default_rule_table_limit = std::size_t{1} << 22;

  class RewritingSystem {
   public:
    // One rule per ordered pair (a, b) with a not column_ge b.  Throws
    // ResourceLimit when the (2^n - 1)^2 lookup table would exceed
    // `table_limit` entries.
    static RewritingSystem generate(Rank        rank,
                                    std::size_t table_limit
                                    = default_rule_table_limit);

    // Arbitrary rule set, used to exercise the checks on broken systems.
    static RewritingSystem from_rules(Rank rank, std::vector<Rule> rules);

    Rank rank() const noexcept {
      return rank_;
    }

    // Generated rules are ordered by their lhs (c_a, c_b), a outermost.
    std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }

    std::size_t size() const noexcept {
      return rules_.size();
    }

    // The rule with lhs c_a c_b, if any.
    Rule const* find(ColumnSymbol a, ColumnSymbol b) const;

    // Rules whose lhs does not have length two (never produced by
    // generate()).
    std::vector<std::size_t> const& irregular_rules() const noexcept {
      return irregular_;
    }

   private:
    explicit RewritingSystem(Rank rank) : rank_(rank) {}
    void index();

    Rank                      rank_;
    std::vector<Rule>         rules_;
    std::vector<std::int32_t> table_;  // a.mask() * 2^n + b.mask() -> rule
    std::vector<std::size_t>  irregular_;
  };

  // Symbol order: c_a precedes c_b when |a| > |b|, equal lengths compare
  // their subscript words lexicographically.  Words compare length first,
  // then at the leftmost differing symbol.
  class OrderKey {
   public:
    bool symbol_less(ColumnSymbol a, ColumnSymbol b) const;
    bool word_less(std::span<ColumnSymbol const> u,
                   std::span<ColumnSymbol const> v) const;

    // "order: deglex; symbol order: |subscript| desc, then lex"
    std::string describe() const;
  };

  // Applies the rule at the leftmost redex, if any.
  std::optional<CWord> rewrite_step(std::span<ColumnSymbol const> w,
                                    RewritingSystem const&        system);

  CWord normalize(CWord w, RewritingSystem const& system);

  bool is_normal(std::span<ColumnSymbol const> w);

  class ViolationFound : public std::runtime_error {
   public:
    explicit ViolationFound(Rule rule);

    Rule const& rule() const noexcept {
      return rule_;
    }

   private:
    Rule rule_;
  };

  struct RuleComparison {
    Rule rule;
    // Which clause of the word order makes rhs smaller.
    enum class Reason { shorter, smaller_symbol } reason;
    std::size_t position;  // first differing position when smaller_symbol
  };

  struct TerminationCertificate {
    std::vector<RuleComparison> comparisons;
  };

  // Verifies rhs << lhs for every rule; throws ViolationFound on the first
  // rule that does not decrease.
  TerminationCertificate check_termination(RewritingSystem const& system,
                                           OrderKey const&        order);

  // An overlap c_a c_b c_c where both c_a c_b and c_b c_c are redexes, with
  // the normal forms reached after rewriting each redex first.  Only rules
  // with two-symbol left-hand sides take part.
  struct CriticalPair {
    ColumnSymbol a, b, c;
    CWord        via_left;
    CWord        via_right;

    bool converges() const {
      return via_left == via_right;
    }
  };

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& system);

  // l - r over the free algebra on C; coefficients are the integers +1 / -1
  // so the basis is valid over every field.
  struct Binomial {
    CWord leading;
    CWord trailing;
    int   leading_coeff  = 1;
    int   trailing_coeff = -1;
  };

  struct GsbBasis {
    Rank                      rank;
    std::vector<ColumnSymbol> generators;
    OrderKey                  order;
    std::vector<Binomial>     elements;
  };

  // Throws ViolationFound if some rule does not decrease under `order`.
  GsbBasis gsb_export(RewritingSystem const& system, OrderKey const& order);

  CWord encode_word(std::span<Letter const> w);
  Word  decode_word(std::span<ColumnSymbol const> w);

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  // "c_21 c_1"; the empty word prints as the empty string.
  std::string format_cword(std::span<ColumnSymbol const> w, Rank rank);

  // Parses "c:21,1" (the "c:" prefix is optional).  Throws ParseError for
  // malformed input, RankError for letters outside the rank, and ParseError
  // for subscripts that are not columns.
  CWord parse_cword(std::string_view text, Rank rank);

  // {"rank":2,"rules":[{"lhs":["1","21"],"rhs":["21","1"]},...]}
  std::string rules_to_json(RewritingSystem const& system);
  std::string rules_to_text(RewritingSystem const& system);

  // Header line naming the order, then one binomial per line:
  // c[2]*c[1] - c[21]
  std::string gsb_to_text(GsbBasis const& basis);
  std::string gsb_to_json(GsbBasis const& basis);

}  // namespace plactic

#endif  // PLACTIC_REWRITING_HPP
