// Grammar text format:
//   start: S
//   S -> a S B
//   B -> b
//   A -> @eps
// Tokens matching [A-Z][A-Za-z0-9_]* are nonterminals; any other single
// printable character is a terminal. `#` starts a comment.
#pragma once

#include <string>
#include <string_view>

#include "gsa/grammar.hpp"
#include "gsa/parse_error.hpp"

namespace gsa {

Cfg parse_grammar(std::string_view text, const std::string& source = "<input>");

/// Notes become leading `#` comment lines.
std::string format_grammar(const HeadNormalGrammar& g);
std::string format_cfg(const Cfg& g, const std::vector<std::string>& notes = {});

}  // namespace gsa
