// Words, columns and Young tableaux over the ordered alphabet {1 < ... < n},
// Schensted insertion, readings, and the brute-force oracles (longest
// subsequences, Knuth-class search) that the other modules are checked
// against.

#ifndef PLACTIC_CORE_HPP
#define PLACTIC_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plactic {

  using Letter = std::uint16_t;
  using Word   = std::vector<Letter>;

  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class RankError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ResourceLimit : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Size of the alphabet A = {1, ..., n}.
  class Rank {
   public:
    static constexpr int max_value = 65535;

    explicit Rank(int n) : n_(n) {
      if (n < 1 || n > max_value) {
        throw RankError("rank must lie in [1, 65535], got " + std::to_string(n));
      }
    }

    int value() const noexcept {
      return n_;
    }

    bool contains(Letter x) const noexcept {
      return x >= 1 && x <= n_;
    }

    bool operator==(Rank const&) const = default;

   private:
    int n_;
  };

  // Throws RankError naming the first letter outside {1, ..., n}.
  void check_letters(std::span<Letter const> w, Rank rank);

  bool is_row(std::span<Letter const> w);
  bool is_column(std::span<Letter const> w);

  // Row domination: |a| <= |b| and a_i > b_i for every i <= |a|.
  bool dominates(std::span<Letter const> a, std::span<Letter const> b);

  // A strictly decreasing nonempty word, stored in written (top-to-bottom)
  // order.  Rows are counted from the bottom starting at 1, so at_row(1) is
  // the last written letter.
  class Column {
   public:
    explicit Column(Word letters);

    Word const& letters() const noexcept {
      return letters_;
    }

    std::size_t size() const noexcept {
      return letters_.size();
    }

    Letter at_row(std::size_t r) const {
      return letters_[letters_.size() - r];
    }

    Letter top() const noexcept {
      return letters_.front();
    }

    Letter bottom() const noexcept {
      return letters_.back();
    }

    auto operator<=>(Column const&) const = default;

   private:
    friend class Tableau;
    Column() = default;
    Word letters_;
  };

  // a can stand immediately left of b in a tableau: |a| >= |b| and, indexing
  // from the bottom, a_i <= b_i for i <= |b|.
  bool column_ge(Column const& a, Column const& b);

  // A cell reached by one step of a bumping cascade.  `column` is 0-based from
  // the left, `row` is 1-based from the bottom.
  struct Landing {
    std::size_t row;
    std::size_t column;
    Letter      letter;
    bool        appended;  // no letter was displaced
    Letter      bumped;    // meaningful only when !appended
  };

  // Tableau stored as its list of columns, left to right, each column
  // dominating (column_ge) the next one.
  class Tableau {
   public:
    Tableau() = default;

    // Throws std::invalid_argument unless consecutive columns are
    // column_ge-chained.
    static Tableau from_columns(std::vector<Column> columns);

    std::vector<Column> const& columns() const noexcept {
      return columns_;
    }

    std::size_t num_columns() const noexcept {
      return columns_.size();
    }

    std::size_t num_rows() const noexcept {
      return columns_.empty() ? 0 : columns_.front().size();
    }

    std::size_t num_cells() const noexcept;

    bool empty() const noexcept {
      return columns_.empty();
    }

    // Row r (1 = bottom) as a non-decreasing word.
    Word row(std::size_t r) const;

    // Rows in order of domination, i.e. top row first.
    std::vector<Word> rows() const;

    // Continues a bumping cascade by inserting x into row `row` (1 = bottom)
    // and returns every landing in order.  Inserting into row 1 is exactly
    // Schensted's algorithm for right multiplication by x.
    std::vector<Landing> insert_from_row(std::size_t row, Letter x);

    bool operator==(Tableau const&) const = default;

   private:
    std::vector<Column> columns_;
  };

  // P(t x) for a letter x.
  Tableau insert(Tableau t, Letter x);

  // P(w), built by iterated insertion from the empty tableau.
  Tableau tableau_of_word(std::span<Letter const> w);

  Word column_reading(Tableau const& t);
  Word row_reading(Tableau const& t);

  // Longest non-decreasing / strictly decreasing subsequence lengths.
  std::size_t lnds(std::span<Letter const> w);
  std::size_t lds(std::span<Letter const> w);

  // Defining relations {(xzy, zxy) : x <= y < z} U {(yxz, yzx) : x < y <= z}.
  std::vector<std::pair<Word, Word>> knuth_relations(Rank rank);

  inline constexpr std::size_t default_class_limit = 1'000'000;

  // Every word reachable from w by applying Knuth relations in either
  // direction, sorted.  Throws ResourceLimit once more than `limit` words
  // have been found.
  std::vector<Word> knuth_class(std::span<Letter const> w,
                                std::size_t limit = default_class_limit);

  bool knuth_equivalent(std::span<Letter const> u,
                        std::span<Letter const> v,
                        std::size_t limit = default_class_limit);

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  // Digit strings for rank <= 9 ("6345511235"), comma-separated integers
  // otherwise ("10,3,3").
  std::string format_word(std::span<Letter const> w, Rank rank);
  Word        parse_word(std::string_view text, Rank rank);

  // Letters of a single column or cell group: digits for rank <= 9, joined by
  // '.' otherwise.
  std::string format_subscript(std::span<Letter const> w, Rank rank);
  Word        parse_subscript(std::string_view text, Rank rank);

  // Left-justified rows, top row first, one row per line.
  std::string to_planar(Tableau const& t, Rank rank);

  // {"columns": ["631", "41", ...]}
  std::string tableau_to_json(Tableau const& t, Rank rank);

}  // namespace plactic

#endif  // PLACTIC_CORE_HPP
