#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "plactic/rewriting.hpp"

namespace {

  using namespace plactic;
  using namespace plactic::cli;

  constexpr int exit_ok      = 0;
  constexpr int exit_failure = 1;
  constexpr int exit_usage   = 2;

  void emit(std::string const& out_path, std::string const& text) {
    if (out_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot write " + out_path);
    }
    file << text;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plactic monoid tableaux, rewriting and multiplier automata"};
  app.require_subcommand(1);

  int         rank_value = 3;
  std::size_t max_len    = 6;
  std::string format     = "text";
  std::string out_path;
  bool        thorough = false;

  std::map<std::string, Format> const formats{
      {"text", Format::text}, {"json", Format::json}, {"dot", Format::dot}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--rank,-n", rank_value, "Alphabet size n")->check(CLI::Range(1, 65535));
    sub->add_option("--format,-f", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out,-o", out_path, "Write to this file (directory for machines)");
  };

  std::string word;
  auto*       tableau = app.add_subcommand("tableau", "Planar tableau and column reading of a word");
  common(tableau);
  tableau->add_option("word", word, "Word over {1..n}")->required();

  auto* normalize = app.add_subcommand("normalize", "Normal form over the column alphabet");
  common(normalize);
  normalize->add_option("word", word, "A-word, or C-word as c:21,1")->required();

  std::string gamma_text;
  std::string side = "right";
  bool        check = false;
  auto*       multiply = app.add_subcommand("multiply", "Multiply a column reading by a letter");
  common(multiply);
  multiply->add_option("word", word, "Column reading of a tableau")->required();
  multiply->add_option("gamma", gamma_text, "Letter")->required();
  multiply->add_option("--side", side, "right or left")->check(CLI::IsMember({"right", "left"}));
  multiply->add_flag("--check", check, "Cross-check against normalization");

  auto* rules = app.add_subcommand("rules", "Rewriting rules over the column alphabet");
  common(rules);
  auto* gsb = app.add_subcommand("gsb", "Groebner-Shirshov basis");
  common(gsb);

  std::string machine_gamma;
  auto*       machines = app.add_subcommand("machines", "Export multiplier machines");
  common(machines);
  machines->add_option("--gamma", machine_gamma, "Letter, or eps for the empty word")
      ->required();

  std::string suite;
  auto*       verify = app.add_subcommand("verify", "Run exhaustive verification suites");
  common(verify);
  verify->add_option("--max-len", max_len, "Word length bound");
  verify->add_flag("--thorough", thorough, "Raise bounds to rank 4, length 7");
  verify->add_option("suite", suite, "core, rewriting, automata, multipliers or all")
      ->required()
      ->check(CLI::IsMember({"core", "rewriting", "automata", "multipliers", "all"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    Config config;
    config.rank     = Rank(rank_value);
    config.max_len  = max_len;
    config.format   = formats.at(format);
    config.thorough = thorough;
    apply_environment(config);

    if (tableau->parsed()) {
      emit(out_path, cmd_tableau(config, word));
    } else if (normalize->parsed()) {
      emit(out_path, cmd_normalize(config, word));
    } else if (multiply->parsed()) {
      emit(out_path, cmd_multiply(config, word, gamma_text,
                                  side == "right" ? Side::right : Side::left, check));
    } else if (rules->parsed()) {
      emit(out_path, cmd_rules(config));
    } else if (gsb->parsed()) {
      emit(out_path, cmd_gsb(config));
    } else if (machines->parsed()) {
      std::optional<Letter> gamma;
      if (machine_gamma != "eps") {
        auto const w = parse_word(machine_gamma, config.rank);
        if (w.size() != 1) {
          throw ParseError("--gamma takes a single letter or eps");
        }
        gamma = w[0];
      }
      if (out_path.empty()) {
        std::cout << cmd_machines(config, gamma);
      } else {
        std::filesystem::create_directories(out_path);
        for (auto const& [name, body] : machine_files(config, gamma)) {
          emit((std::filesystem::path(out_path) / name).string(), body);
        }
      }
    } else if (verify->parsed()) {
      if (thorough) {
        config.rank    = Rank(std::max(rank_value, 4));
        config.max_len = std::max<std::size_t>(max_len, 7);
      }
      auto const outcome = cmd_verify(config, suite);
      emit(out_path, outcome.text);
      return outcome.passed ? exit_ok : exit_failure;
    }
  } catch (CheckFailed const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  } catch (ViolationFound const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  } catch (DelayExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  } catch (std::logic_error const& e) {
    // invalid_argument (bad input such as NotInL) is a usage error; any
    // other logic_error is an internal failure.
    std::cerr << "error: " << e.what() << "\n";
    return dynamic_cast<std::invalid_argument const*>(&e) ? exit_usage : exit_failure;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}
