#include "commands.hpp"

#include <charconv>
#include <cstdlib>

#include "json.hpp"
#include "plactic/rewriting.hpp"
#include "plactic/verify.hpp"

namespace plactic::cli {

  namespace {

    std::optional<std::size_t> env_size(char const* name) {
      char const* value = std::getenv(name);
      if (value == nullptr || *value == '\0') {
        return std::nullopt;
      }
      std::size_t      n = 0;
      std::string_view s(value);
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
      if (ec != std::errc() || ptr != s.data() + s.size() || n == 0) {
        throw std::invalid_argument(std::string(name) + " must be a positive integer");
      }
      return n;
    }

    std::string shown(std::span<Letter const> w, Rank rank) {
      return w.empty() ? std::string("ε") : format_word(w, rank);
    }

    std::string shown(std::span<ColumnSymbol const> w, Rank rank) {
      return w.empty() ? std::string("ε") : format_cword(w, rank);
    }

    void require_format(Config const& config, std::initializer_list<Format> allowed) {
      for (Format f : allowed) {
        if (config.format == f) {
          return;
        }
      }
      throw std::invalid_argument("format not supported by this command");
    }

  }  // namespace

  void apply_environment(Config& config) {
    if (auto n = env_size("PLACTIC_MAX_STATES")) {
      config.max_states = *n;
    }
    if (auto n = env_size("PLACTIC_MAX_CLASS")) {
      config.class_limit = *n;
    }
  }

  std::string cmd_tableau(Config const& config, std::string_view word) {
    require_format(config, {Format::text, Format::json});
    Word const w = parse_word(word, config.rank);
    auto const t = tableau_of_word(w);
    if (config.format == Format::json) {
      auto doc = nlohmann::json::parse(tableau_to_json(t, config.rank));
      auto rows = nlohmann::json::array();
      for (auto const& r : t.rows()) {
        rows.push_back(format_word(r, config.rank));
      }
      doc["rows"]    = rows;
      doc["reading"] = format_word(column_reading(t), config.rank);
      return doc.dump() + "\n";
    }
    if (w.empty()) {
      return "";
    }
    return to_planar(t, config.rank) + format_word(column_reading(t), config.rank) + "\n";
  }

  std::string cmd_normalize(Config const& config, std::string_view input) {
    require_format(config, {Format::text, Format::json});
    CWord w;
    if (input.starts_with("c:")) {
      w = parse_cword(input, config.rank);
    } else {
      w = encode_word(parse_word(input, config.rank));
    }
    auto const system = RewritingSystem::generate(config.rank);
    auto const nf     = normalize(std::move(w), system);
    auto const word   = decode_word(nf);
    if (config.format == Format::json) {
      auto cols = nlohmann::json::array();
      for (auto c : nf) {
        cols.push_back(format_subscript(c.word(), config.rank));
      }
      return nlohmann::json{{"normal_form", cols}, {"word", format_word(word, config.rank)}}
                 .dump()
             + "\n";
    }
    return shown(nf, config.rank) + "\n" + shown(word, config.rank) + "\n";
  }

  std::string cmd_multiply(Config const&    config,
                           std::string_view u_text,
                           std::string_view gamma_text,
                           Side             side,
                           bool             check) {
    require_format(config, {Format::text, Format::json});
    Word const u     = parse_word(u_text, config.rank);
    Word const gamma = parse_word(gamma_text, config.rank);
    if (gamma.size() != 1) {
      throw ParseError("the multiplier must be a single letter");
    }
    if (!build_L(config.rank).accepts(to_symbols(u))) {
      throw NotInL("'" + std::string(u_text) + "' is not the column reading of a tableau");
    }
    auto const t    = lifted_multiplier(config.rank, side, gamma[0]);
    auto const outs = transducer_outputs(t, to_symbols(u));
    if (outs.size() != 1) {
      throw CheckFailed("multiplier produced " + std::to_string(outs.size()) + " results");
    }
    Word const product = to_word(outs[0]);
    if (check) {
      Word w = u;
      if (side == Side::right) {
        w.push_back(gamma[0]);
      } else {
        w.insert(w.begin(), gamma[0]);
      }
      auto const system = RewritingSystem::generate(config.rank);
      if (decode_word(normalize(encode_word(w), system)) != product) {
        throw CheckFailed("multiplier disagrees with normalization: "
                          + shown(product, config.rank));
      }
    }
    if (config.format == Format::json) {
      return nlohmann::json{{"side", side == Side::right ? "right" : "left"},
                            {"input", format_word(u, config.rank)},
                            {"gamma", format_word(gamma, config.rank)},
                            {"product", format_word(product, config.rank)}}
                 .dump()
             + "\n";
    }
    return shown(product, config.rank) + "\n";
  }

  std::string cmd_rules(Config const& config) {
    require_format(config, {Format::text, Format::json});
    auto const system = RewritingSystem::generate(config.rank);
    return config.format == Format::json ? rules_to_json(system) + "\n" : rules_to_text(system);
  }

  std::string cmd_gsb(Config const& config) {
    require_format(config, {Format::text, Format::json});
    auto const basis = gsb_export(RewritingSystem::generate(config.rank), OrderKey());
    return config.format == Format::json ? gsb_to_json(basis) + "\n" : gsb_to_text(basis);
  }

  std::map<std::string, std::string> machine_files(Config const&         config,
                                                   std::optional<Letter> gamma) {
    Rank const rank = config.rank;
    if (gamma) {
      check_letters(std::span<Letter const>(&*gamma, 1), rank);
    }
    std::map<std::string, std::string> files;
    auto const cnames = column_namer(rank);
    auto const lnames = letter_namer(rank);
    std::string const ext = config.format == Format::dot    ? ".dot"
                            : config.format == Format::json ? ".json"
                                                            : ".txt";
    auto summary = [](std::size_t states, std::size_t transitions) {
      return "states " + std::to_string(states) + ", transitions "
             + std::to_string(transitions) + "\n";
    };
    auto nfa = [&](std::string const& name, Nfa<Symbol> const& a, SymbolNamer const& names) {
      files[name + ext] = config.format == Format::dot    ? to_dot(a, name, names)
                          : config.format == Format::json ? to_json(a, names) + "\n"
                                                          : summary(a.num_states(), a.num_transitions());
    };
    auto transducer = [&](std::string const& name, Transducer const& t, SymbolNamer const& in,
                          SymbolNamer const& out) {
      files[name + ext] = config.format == Format::dot    ? to_dot(t, name, in, out)
                          : config.format == Format::json ? to_json(t, in, out) + "\n"
                                                          : summary(t.num_states(), t.num_transitions());
    };
    auto pair = [&](std::string const& name, PairAutomaton const& p) {
      files[name + ext] = config.format == Format::dot    ? to_dot(p, name, lnames)
                          : config.format == Format::json ? to_json(p, lnames) + "\n"
                                                          : summary(p.nfa.num_states(), p.nfa.num_transitions());
    };
    nfa("K", build_k_acceptor(rank), cnames);
    nfa("L", build_L(rank), lnames);
    std::string const tag = gamma ? std::to_string(*gamma) : std::string("eps");
    if (gamma) {
      transducer("right_C_" + tag, right_multiplier(rank, *gamma), cnames, cnames);
      transducer("left_C_" + tag, left_multiplier(rank, *gamma), cnames, cnames);
    }
    transducer("right_A_" + tag, lifted_multiplier(rank, Side::right, gamma), lnames, lnames);
    transducer("left_A_" + tag, lifted_multiplier(rank, Side::left, gamma), lnames, lnames);
    auto const autos = multiplier_pair_automata(rank, gamma, config.max_states);
    pair("right_" + tag + "_deltaR", autos.right_R);
    pair("left_" + tag + "_deltaR", autos.left_R);
    pair("right_" + tag + "_deltaL", autos.right_L);
    pair("left_" + tag + "_deltaL", autos.left_L);
    return files;
  }

  std::string cmd_machines(Config const& config, std::optional<Letter> gamma) {
    auto const  files = machine_files(config, gamma);
    std::string out;
    if (config.format == Format::json) {
      nlohmann::json doc = nlohmann::json::object();
      for (auto const& [name, body] : files) {
        doc[name.substr(0, name.size() - 5)] = nlohmann::json::parse(body);
      }
      return doc.dump() + "\n";
    }
    for (auto const& [name, body] : files) {
      if (config.format == Format::dot) {
        out += "// " + name + "\n" + body;
      } else {
        out += name.substr(0, name.size() - 4) + ": " + body;
      }
    }
    return out;
  }

  VerifyOutcome cmd_verify(Config const& config, std::string_view suite) {
    VerifyOptions options;
    options.rank        = config.rank;
    options.max_len     = config.max_len;
    options.class_limit = config.class_limit;
    options.max_states  = config.max_states;
    std::vector<std::string> names;
    if (suite == "all") {
      names = suite_names();
    } else {
      names.emplace_back(suite);
    }
    VerifyOutcome outcome;
    outcome.text = "rank " + std::to_string(config.rank.value()) + ", max length "
                   + std::to_string(config.max_len) + "\n";
    for (auto const& name : names) {
      auto const report = run_suite(name, options);
      outcome.text += format_report(report);
      outcome.passed = outcome.passed && report.passed();
    }
    return outcome;
  }

}  // namespace plactic::cli
