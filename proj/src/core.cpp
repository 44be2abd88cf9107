#include "plactic/core.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "json.hpp"

namespace plactic {

  namespace {

    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = w.size();
        for (Letter x : w) {
          h = h * 1'000'003u ^ x;
        }
        return h;
      }
    };

    // Applies every single Knuth move (in either direction) to w.
    template <typename Visit>
    void for_each_knuth_neighbour(Word const& w, Visit&& visit) {
      if (w.size() < 3) {
        return;
      }
      Word next = w;
      for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        Letter const a = w[i], b = w[i + 1], c = w[i + 2];
        // xzy <-> zxy with x <= y < z: the first two letters swap.
        if ((a <= c && c < b) || (b <= c && c < a)) {
          std::swap(next[i], next[i + 1]);
          visit(next);
          std::swap(next[i], next[i + 1]);
        }
        // yxz <-> yzx with x < y <= z: the last two letters swap.
        if ((b < a && a <= c) || (c < a && a <= b)) {
          std::swap(next[i + 1], next[i + 2]);
          visit(next);
          std::swap(next[i + 1], next[i + 2]);
        }
      }
    }

    Letter parse_letter(std::string_view tok, Rank rank) {
      if (tok.empty()) {
        throw ParseError("empty letter");
      }
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("not a letter: '" + std::string(tok) + "'");
      }
      if (value < 1 || value > static_cast<unsigned>(rank.value())) {
        throw RankError("letter " + std::string(tok) + " outside rank "
                        + std::to_string(rank.value()));
      }
      return static_cast<Letter>(value);
    }

    Word parse_separated(std::string_view text, char sep, Rank rank) {
      Word result;
      std::size_t start = 0;
      while (true) {
        std::size_t end = text.find(sep, start);
        result.push_back(parse_letter(text.substr(start, end - start), rank));
        if (end == std::string_view::npos) {
          break;
        }
        start = end + 1;
      }
      return result;
    }

  }  // namespace

  void check_letters(std::span<Letter const> w, Rank rank) {
    for (Letter x : w) {
      if (!rank.contains(x)) {
        throw RankError("letter " + std::to_string(x) + " outside rank "
                        + std::to_string(rank.value()));
      }
    }
  }

  bool is_row(std::span<Letter const> w) {
    return std::is_sorted(w.begin(), w.end());
  }

  bool is_column(std::span<Letter const> w) {
    return std::adjacent_find(w.begin(), w.end(), std::less_equal<>())
           == w.end();
  }

  bool dominates(std::span<Letter const> a, std::span<Letter const> b) {
    if (a.size() > b.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] <= b[i]) {
        return false;
      }
    }
    return true;
  }

  Column::Column(Word letters) : letters_(std::move(letters)) {
    if (letters_.empty() || !is_column(letters_)) {
      throw std::invalid_argument("a column is a nonempty strictly "
                                  "decreasing word");
    }
  }

  bool column_ge(Column const& a, Column const& b) {
    if (a.size() < b.size()) {
      return false;
    }
    for (std::size_t i = 1; i <= b.size(); ++i) {
      if (a.at_row(i) > b.at_row(i)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tableau
  ////////////////////////////////////////////////////////////////////////

  Tableau Tableau::from_columns(std::vector<Column> columns) {
    for (std::size_t i = 0; i + 1 < columns.size(); ++i) {
      if (!column_ge(columns[i], columns[i + 1])) {
        throw std::invalid_argument("columns " + std::to_string(i) + " and "
                                    + std::to_string(i + 1)
                                    + " cannot be adjacent in a tableau");
      }
    }
    Tableau t;
    t.columns_ = std::move(columns);
    return t;
  }

  std::size_t Tableau::num_cells() const noexcept {
    std::size_t n = 0;
    for (auto const& c : columns_) {
      n += c.size();
    }
    return n;
  }

  Word Tableau::row(std::size_t r) const {
    Word result;
    for (auto const& c : columns_) {
      if (c.size() < r) {
        break;
      }
      result.push_back(c.at_row(r));
    }
    return result;
  }

  std::vector<Word> Tableau::rows() const {
    std::vector<Word> result;
    for (std::size_t r = num_rows(); r >= 1; --r) {
      result.push_back(row(r));
    }
    return result;
  }

  std::vector<Landing> Tableau::insert_from_row(std::size_t r, Letter x) {
    std::vector<Landing> trace;
    while (true) {
      // Columns reaching row r form a prefix since lengths weakly decrease.
      std::size_t len = 0;
      while (len < columns_.size() && columns_[len].size() >= r) {
        ++len;
      }
      std::size_t c = 0;
      while (c < len && columns_[c].at_row(r) <= x) {
        ++c;
      }
      if (c == len) {
        if (len == columns_.size()) {
          // Only the bottom row may grow a new column.
          if (r != 1) {
            throw std::logic_error("cannot append to row "
                                   + std::to_string(r));
          }
          Column fresh;
          fresh.letters_.push_back(x);
          columns_.push_back(std::move(fresh));
        } else {
          if (columns_[len].size() + 1 != r) {
            throw std::logic_error("row " + std::to_string(r)
                                   + " is not adjacent to column "
                                   + std::to_string(len));
          }
          auto& letters = columns_[len].letters_;
          letters.insert(letters.begin(), x);
        }
        trace.push_back({r, len, x, true, 0});
        return trace;
      }
      auto&        letters = columns_[c].letters_;
      Letter&      slot    = letters[letters.size() - r];
      Letter const bumped  = slot;
      slot                 = x;
      trace.push_back({r, c, x, false, bumped});
      x = bumped;
      ++r;
    }
  }

  Tableau insert(Tableau t, Letter x) {
    t.insert_from_row(1, x);
    return t;
  }

  Tableau tableau_of_word(std::span<Letter const> w) {
    Tableau t;
    for (Letter x : w) {
      t.insert_from_row(1, x);
    }
    return t;
  }

  Word column_reading(Tableau const& t) {
    Word result;
    for (auto const& c : t.columns()) {
      result.insert(result.end(), c.letters().begin(), c.letters().end());
    }
    return result;
  }

  Word row_reading(Tableau const& t) {
    Word result;
    for (auto const& r : t.rows()) {
      result.insert(result.end(), r.begin(), r.end());
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles
  ////////////////////////////////////////////////////////////////////////

  std::size_t lnds(std::span<Letter const> w) {
    std::vector<std::size_t> best(w.size(), 1);
    std::size_t              result = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (w[j] <= w[i]) {
          best[i] = std::max(best[i], best[j] + 1);
        }
      }
      result = std::max(result, best[i]);
    }
    return result;
  }

  std::size_t lds(std::span<Letter const> w) {
    std::vector<std::size_t> best(w.size(), 1);
    std::size_t              result = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (w[j] > w[i]) {
          best[i] = std::max(best[i], best[j] + 1);
        }
      }
      result = std::max(result, best[i]);
    }
    return result;
  }

  std::vector<std::pair<Word, Word>> knuth_relations(Rank rank) {
    int const                          n = rank.value();
    std::vector<std::pair<Word, Word>> result;
    for (int x = 1; x <= n; ++x) {
      for (int y = x; y <= n; ++y) {
        for (int z = y + 1; z <= n; ++z) {
          Letter a = x, b = y, c = z;
          result.push_back({{a, c, b}, {c, a, b}});
        }
      }
    }
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        for (int z = y; z <= n; ++z) {
          Letter a = x, b = y, c = z;
          result.push_back({{b, a, c}, {b, c, a}});
        }
      }
    }
    return result;
  }

  std::vector<Word> knuth_class(std::span<Letter const> w, std::size_t limit) {
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word>                   frontier;
    Word                               start(w.begin(), w.end());
    seen.insert(start);
    frontier.push_back(std::move(start));
    while (!frontier.empty()) {
      Word current = std::move(frontier.front());
      frontier.pop_front();
      for_each_knuth_neighbour(current, [&](Word const& next) {
        if (seen.insert(next).second) {
          if (seen.size() > limit) {
            throw ResourceLimit("Knuth class exceeds "
                                + std::to_string(limit) + " words");
          }
          frontier.push_back(next);
        }
      });
    }
    std::vector<Word> result(seen.begin(), seen.end());
    std::sort(result.begin(), result.end());
    return result;
  }

  bool knuth_equivalent(std::span<Letter const> u,
                        std::span<Letter const> v,
                        std::size_t             limit) {
    if (u.size() != v.size()) {
      return false;
    }
    Word const target(v.begin(), v.end());
    if (std::equal(u.begin(), u.end(), v.begin())) {
      return true;
    }
    auto const cls = knuth_class(u, limit);
    return std::binary_search(cls.begin(), cls.end(), target);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  std::string format_word(std::span<Letter const> w, Rank rank) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (rank.value() > 9 && i > 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  Word parse_word(std::string_view text, Rank rank) {
    if (text.empty()) {
      return {};
    }
    if (text.find(',') != std::string_view::npos || rank.value() > 9) {
      return parse_separated(text, ',', rank);
    }
    Word result;
    for (char ch : text) {
      result.push_back(parse_letter(std::string_view(&ch, 1), rank));
    }
    return result;
  }

  std::string format_subscript(std::span<Letter const> w, Rank rank) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (rank.value() > 9 && i > 0) {
        out += '.';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  Word parse_subscript(std::string_view text, Rank rank) {
    if (text.empty()) {
      throw ParseError("empty column subscript");
    }
    if (text.find('.') != std::string_view::npos || rank.value() > 9) {
      return parse_separated(text, '.', rank);
    }
    Word result;
    for (char ch : text) {
      result.push_back(parse_letter(std::string_view(&ch, 1), rank));
    }
    return result;
  }

  std::string to_planar(Tableau const& t, Rank rank) {
    std::string out;
    std::size_t width = 1;
    if (rank.value() > 9) {
      width = std::to_string(rank.value()).size();
    }
    for (auto const& r : t.rows()) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        auto cell = std::to_string(r[i]);
        if (rank.value() > 9) {
          if (i > 0) {
            out += ' ';
          }
          out += std::string(width - cell.size(), ' ');
        }
        out += cell;
      }
      out += '\n';
    }
    return out;
  }

  std::string tableau_to_json(Tableau const& t, Rank rank) {
    nlohmann::json cols = nlohmann::json::array();
    for (auto const& c : t.columns()) {
      cols.push_back(format_subscript(c.letters(), rank));
    }
    return nlohmann::json{{"columns", cols}}.dump();
  }

}  // namespace plactic
