// Command implementations behind the plactic executable.  Each returns the
// text to print; errors surface as exceptions that main maps to exit codes.

#ifndef PLACTIC_TOOLS_COMMANDS_HPP
#define PLACTIC_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "plactic/automata.hpp"
#include "plactic/core.hpp"
#include "plactic/multipliers.hpp"

namespace plactic::cli {

  enum class Format { text, json, dot };

  struct Config {
    Rank        rank{3};
    std::size_t max_len     = 6;
    Format      format      = Format::text;
    bool        thorough    = false;
    std::size_t max_states  = default_state_limit;
    std::size_t class_limit = default_class_limit;
  };

  // Limits from PLACTIC_MAX_STATES and PLACTIC_MAX_CLASS, when set.
  void apply_environment(Config& config);

  // The word is not a column reading of a tableau.
  class NotInL : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A multiplier disagreed with the normal-form oracle under --check.
  class CheckFailed : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  std::string cmd_tableau(Config const& config, std::string_view word);

  // Accepts an A-word or a C-word written "c:21,1".
  std::string cmd_normalize(Config const& config, std::string_view input);

  std::string cmd_multiply(Config const&    config,
                           std::string_view u,
                           std::string_view gamma,
                           Side             side,
                           bool             check);

  std::string cmd_rules(Config const& config);
  std::string cmd_gsb(Config const& config);

  // File name -> contents for every machine of the multiplier by gamma
  // (nullopt: the empty word) in the configured format.
  std::map<std::string, std::string> machine_files(Config const& config,
                                                   std::optional<Letter> gamma);

  std::string cmd_machines(Config const& config, std::optional<Letter> gamma);

  struct VerifyOutcome {
    std::string text;
    bool        passed = true;
  };

  // suite is one of the library suites or "all".
  VerifyOutcome cmd_verify(Config const& config, std::string_view suite);

}  // namespace plactic::cli

#endif  // PLACTIC_TOOLS_COMMANDS_HPP
