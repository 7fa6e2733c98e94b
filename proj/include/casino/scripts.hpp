#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casino/roulette.hpp"

namespace casino::scripts {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Whitespace-separated integers; '#' starts a comment.
std::vector<int> parse_integers(std::string_view text);

/// W/T/L symbols with optional grouping and repetition, e.g. "(WWL)^19 W".
/// '#' starts a comment.
std::vector<roulette::Outcome> parse_outcomes(std::string_view text);

/// Either an outcome script or a list of pocket numbers, decided by the first token.
using Script = std::variant<std::vector<roulette::Outcome>, std::vector<int>>;
Script parse_script(std::string_view text);

/// Whole file contents; throws std::runtime_error if unreadable.
std::string read_file(const std::string& path);

}  // namespace casino::scripts
