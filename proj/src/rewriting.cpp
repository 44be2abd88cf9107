#include "plactic/rewriting.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace plactic {

  void check_column_rank(Rank rank) {
    if (rank.value() > max_column_rank) {
      throw RankError("column alphabets are supported up to rank "
                      + std::to_string(max_column_rank) + ", got "
                      + std::to_string(rank.value()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // ColumnSymbol
  ////////////////////////////////////////////////////////////////////////

  ColumnSymbol ColumnSymbol::from_column(Column const& c) {
    std::uint32_t mask = 0;
    for (Letter x : c.letters()) {
      if (x < 1 || x > max_column_rank) {
        throw RankError("letter " + std::to_string(x)
                        + " too large for a column symbol");
      }
      mask |= std::uint32_t{1} << (x - 1);
    }
    return ColumnSymbol(mask);
  }

  std::size_t ColumnSymbol::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  Word ColumnSymbol::word() const {
    Word result;
    for (int bit = 31; bit >= 0; --bit) {
      if (mask_ & (std::uint32_t{1} << bit)) {
        result.push_back(static_cast<Letter>(bit + 1));
      }
    }
    return result;
  }

  Column ColumnSymbol::column() const {
    return Column(word());
  }

  Letter ColumnSymbol::top() const noexcept {
    return static_cast<Letter>(32 - std::countl_zero(mask_));
  }

  Letter ColumnSymbol::bottom() const noexcept {
    return static_cast<Letter>(std::countr_zero(mask_) + 1);
  }

  Letter ColumnSymbol::at_row(std::size_t r) const {
    std::uint32_t m = mask_;
    for (std::size_t i = 1; i < r; ++i) {
      m &= m - 1;
    }
    return static_cast<Letter>(std::countr_zero(m) + 1);
  }

  bool column_ge(ColumnSymbol a, ColumnSymbol b) {
    if (a.size() < b.size()) {
      return false;
    }
    std::uint32_t x = a.mask(), y = b.mask();
    while (y != 0) {
      if (std::countr_zero(x) > std::countr_zero(y)) {
        return false;
      }
      x &= x - 1;
      y &= y - 1;
    }
    return true;
  }

  std::vector<ColumnSymbol> all_columns(Rank rank) {
    check_column_rank(rank);
    std::uint32_t const       end = std::uint32_t{1} << rank.value();
    std::vector<ColumnSymbol> result;
    result.reserve(end - 1);
    for (std::uint32_t m = 1; m < end; ++m) {
      result.emplace_back(m);
    }
    return result;
  }

  ColumnProduct product_columns(ColumnSymbol a, ColumnSymbol b) {
    if (column_ge(a, b)) {
      return {};
    }
    Word w = a.word();
    for (Letter x : b.word()) {
      w.push_back(x);
    }
    auto const  t    = tableau_of_word(w);
    auto const& cols = t.columns();
    if (cols.size() == 1) {
      return {ColumnProduct::Kind::one, ColumnSymbol::from_column(cols[0]), {}};
    }
    if (cols.size() == 2) {
      return {ColumnProduct::Kind::two,
              ColumnSymbol::from_column(cols[0]),
              ColumnSymbol::from_column(cols[1])};
    }
    throw std::logic_error("product of two columns has "
                           + std::to_string(cols.size()) + " columns");
  }

  ////////////////////////////////////////////////////////////////////////
  // RewritingSystem
  ////////////////////////////////////////////////////////////////////////

  RewritingSystem RewritingSystem::generate(Rank rank, std::size_t table_limit) {
    check_column_rank(rank);
    std::size_t const side = (std::size_t{1} << rank.value()) - 1;
    if (side * side > table_limit) {
      throw ResourceLimit("rule table for rank " + std::to_string(rank.value())
                          + " needs " + std::to_string(side * side)
                          + " entries, limit is "
                          + std::to_string(table_limit));
    }
    RewritingSystem system(rank);
    auto const      cols = all_columns(rank);
    for (auto a : cols) {
      for (auto b : cols) {
        auto const p = product_columns(a, b);
        switch (p.kind) {
          case ColumnProduct::Kind::irreducible:
            break;
          case ColumnProduct::Kind::one:
            system.rules_.push_back({{a, b}, {p.left}});
            break;
          case ColumnProduct::Kind::two:
            system.rules_.push_back({{a, b}, {p.left, p.right}});
            break;
        }
      }
    }
    system.index();
    return system;
  }

  RewritingSystem RewritingSystem::from_rules(Rank rank, std::vector<Rule> rules) {
    check_column_rank(rank);
    RewritingSystem system(rank);
    system.rules_ = std::move(rules);
    system.index();
    return system;
  }

  void RewritingSystem::index() {
    std::size_t const side = std::size_t{1} << rank_.value();
    table_.assign(side * side, -1);
    irregular_.clear();
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      auto const& lhs = rules_[i].lhs;
      if (lhs.empty()) {
        throw std::invalid_argument("rule with empty left-hand side");
      }
      if (lhs.size() != 2) {
        irregular_.push_back(i);
        continue;
      }
      auto& slot = table_[lhs[0].mask() * side + lhs[1].mask()];
      if (slot != -1) {
        throw std::invalid_argument("two rules share a left-hand side");
      }
      slot = static_cast<std::int32_t>(i);
    }
  }

  Rule const* RewritingSystem::find(ColumnSymbol a, ColumnSymbol b) const {
    std::size_t const side = std::size_t{1} << rank_.value();
    auto const        i    = table_[a.mask() * side + b.mask()];
    return i < 0 ? nullptr : &rules_[static_cast<std::size_t>(i)];
  }

  ////////////////////////////////////////////////////////////////////////
  // Orders and rewriting
  ////////////////////////////////////////////////////////////////////////

  bool OrderKey::symbol_less(ColumnSymbol a, ColumnSymbol b) const {
    if (a.size() != b.size()) {
      return a.size() > b.size();
    }
    return a < b;
  }

  bool OrderKey::word_less(std::span<ColumnSymbol const> u,
                           std::span<ColumnSymbol const> v) const {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] != v[i]) {
        return symbol_less(u[i], v[i]);
      }
    }
    return false;
  }

  std::string OrderKey::describe() const {
    return "order: deglex; symbol order: |subscript| desc, then lex";
  }

  std::optional<CWord> rewrite_step(std::span<ColumnSymbol const> w,
                                    RewritingSystem const&        system) {
    auto const& rules = system.rules();
    for (std::size_t i = 0; i < w.size(); ++i) {
      Rule const* rule = nullptr;
      for (auto k : system.irregular_rules()) {
        auto const& lhs = rules[k].lhs;
        if (i + lhs.size() <= w.size()
            && std::equal(lhs.begin(), lhs.end(), w.begin() + i)) {
          rule = &rules[k];
          break;
        }
      }
      if (rule == nullptr && i + 1 < w.size()) {
        rule = system.find(w[i], w[i + 1]);
      }
      if (rule != nullptr) {
        CWord result(w.begin(), w.begin() + i);
        result.insert(result.end(), rule->rhs.begin(), rule->rhs.end());
        result.insert(result.end(), w.begin() + i + rule->lhs.size(), w.end());
        return result;
      }
    }
    return std::nullopt;
  }

  CWord normalize(CWord w, RewritingSystem const& system) {
    while (auto next = rewrite_step(w, system)) {
      w = std::move(*next);
    }
    return w;
  }

  bool is_normal(std::span<ColumnSymbol const> w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!column_ge(w[i], w[i + 1])) {
        return false;
      }
    }
    return true;
  }

  ViolationFound::ViolationFound(Rule rule)
      : std::runtime_error("rule does not decrease under the word order"),
        rule_(std::move(rule)) {}

  TerminationCertificate check_termination(RewritingSystem const& system,
                                           OrderKey const&        order) {
    TerminationCertificate cert;
    for (auto const& rule : system.rules()) {
      if (!order.word_less(rule.rhs, rule.lhs)) {
        throw ViolationFound(rule);
      }
      if (rule.rhs.size() < rule.lhs.size()) {
        cert.comparisons.push_back({rule, RuleComparison::Reason::shorter, 0});
      } else {
        auto const diff = std::mismatch(rule.rhs.begin(), rule.rhs.end(),
                                        rule.lhs.begin());
        cert.comparisons.push_back(
            {rule,
             RuleComparison::Reason::smaller_symbol,
             static_cast<std::size_t>(diff.first - rule.rhs.begin())});
      }
    }
    return cert;
  }

  std::vector<CriticalPair> critical_pairs(RewritingSystem const& system) {
    std::vector<CriticalPair> result;
    auto const                cols = all_columns(system.rank());
    for (auto const& first : system.rules()) {
      if (first.lhs.size() != 2) {
        continue;
      }
      auto const a = first.lhs[0], b = first.lhs[1];
      for (auto c : cols) {
        Rule const* second = system.find(b, c);
        if (second == nullptr) {
          continue;
        }
        CWord left = first.rhs;
        left.push_back(c);
        CWord right{a};
        right.insert(right.end(), second->rhs.begin(), second->rhs.end());
        result.push_back({a,
                          b,
                          c,
                          normalize(std::move(left), system),
                          normalize(std::move(right), system)});
      }
    }
    return result;
  }

  GsbBasis gsb_export(RewritingSystem const& system, OrderKey const& order) {
    check_termination(system, order);
    GsbBasis basis{system.rank(), all_columns(system.rank()), order, {}};
    for (auto const& rule : system.rules()) {
      basis.elements.push_back({rule.lhs, rule.rhs});
    }
    return basis;
  }

  CWord encode_word(std::span<Letter const> w) {
    CWord result;
    result.reserve(w.size());
    for (Letter x : w) {
      if (x < 1 || x > max_column_rank) {
        throw RankError("letter " + std::to_string(x)
                        + " too large for a column symbol");
      }
      result.push_back(ColumnSymbol::letter(x));
    }
    return result;
  }

  Word decode_word(std::span<ColumnSymbol const> w) {
    Word result;
    for (auto c : w) {
      auto const letters = c.word();
      result.insert(result.end(), letters.begin(), letters.end());
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text forms
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string subscript(ColumnSymbol c, Rank rank) {
      return format_subscript(c.word(), rank);
    }

    nlohmann::json subscripts(std::span<ColumnSymbol const> w, Rank rank) {
      auto out = nlohmann::json::array();
      for (auto c : w) {
        out.push_back(subscript(c, rank));
      }
      return out;
    }

    std::string gsb_monomial(std::span<ColumnSymbol const> w, Rank rank) {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += '*';
        }
        out += "c[" + subscript(w[i], rank) + "]";
      }
      return out.empty() ? "1" : out;
    }

  }  // namespace

  std::string format_cword(std::span<ColumnSymbol const> w, Rank rank) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += "c_" + subscript(w[i], rank);
    }
    return out;
  }

  CWord parse_cword(std::string_view text, Rank rank) {
    check_column_rank(rank);
    if (text.starts_with("c:")) {
      text.remove_prefix(2);
    }
    CWord result;
    if (text.empty()) {
      return result;
    }
    std::size_t start = 0;
    while (true) {
      std::size_t const end     = text.find(',', start);
      Word const        letters = parse_subscript(text.substr(start, end - start), rank);
      if (!is_column(letters)) {
        throw ParseError("not a column: '"
                         + std::string(text.substr(start, end - start)) + "'");
      }
      result.push_back(ColumnSymbol::from_column(Column(letters)));
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return result;
  }

  std::string rules_to_json(RewritingSystem const& system) {
    Rank const rank  = system.rank();
    auto       rules = nlohmann::json::array();
    for (auto const& rule : system.rules()) {
      rules.push_back({{"lhs", subscripts(rule.lhs, rank)},
                       {"rhs", subscripts(rule.rhs, rank)}});
    }
    return nlohmann::json{{"rank", rank.value()}, {"rules", rules}}.dump();
  }

  std::string rules_to_text(RewritingSystem const& system) {
    std::string out;
    for (auto const& rule : system.rules()) {
      out += format_cword(rule.lhs, system.rank()) + " -> "
             + format_cword(rule.rhs, system.rank()) + '\n';
    }
    return out;
  }

  std::string gsb_to_text(GsbBasis const& basis) {
    std::string out = basis.order.describe() + '\n';
    for (auto const& b : basis.elements) {
      out += gsb_monomial(b.leading, basis.rank) + " - "
             + gsb_monomial(b.trailing, basis.rank) + '\n';
    }
    return out;
  }

  std::string gsb_to_json(GsbBasis const& basis) {
    auto elements = nlohmann::json::array();
    for (auto const& b : basis.elements) {
      elements.push_back({{"leading", subscripts(b.leading, basis.rank)},
                          {"leading_coeff", b.leading_coeff},
                          {"trailing", subscripts(b.trailing, basis.rank)},
                          {"trailing_coeff", b.trailing_coeff}});
    }
    return nlohmann::json{{"rank", basis.rank.value()},
                          {"order", basis.order.describe()},
                          {"generators", subscripts(basis.generators, basis.rank)},
                          {"elements", elements}}
        .dump();
  }

}  // namespace plactic
