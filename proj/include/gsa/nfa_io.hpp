// NFA text format:
//   states: q0 q1 q2
//   start: q0
//   final: q2
//   q0 a q1
//   q1 eps q2
// `#` starts a comment. An optional `alphabet:` line declares symbols that
// label no transition.
#pragma once

#include <string>
#include <string_view>

#include "gsa/nfa.hpp"
#include "gsa/parse_error.hpp"

namespace gsa {

Nfa parse_nfa(std::string_view text, const std::string& source = "<input>");
std::string format_nfa(const Nfa& m);

}  // namespace gsa
