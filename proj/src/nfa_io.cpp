#include "gsa/nfa_io.hpp"

#include <cctype>
#include <map>

namespace gsa {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(b, i - b), b + 1});
  }
  return out;
}

}  // namespace

Nfa parse_nfa(std::string_view text, const std::string& source) {
  Nfa m;
  std::map<std::string, StateId> ids;
  bool have_states = false, have_start = false;
  std::size_t line_no = 0, pos = 0;

  auto lookup = [&](const Token& t) {
    auto it = ids.find(std::string(t.text));
    if (it == ids.end())
      throw ParseError(source, line_no, t.column, "unknown state '" + std::string(t.text) + "'");
    return it->second;
  };

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const auto head = toks[0].text;

    if (head == "states:") {
      if (have_states) throw ParseError(source, line_no, toks[0].column, "duplicate states line");
      have_states = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::string name(toks[i].text);
        if (ids.count(name)) throw ParseError(source, line_no, toks[i].column, "duplicate state '" + name + "'");
        ids[name] = m.add_state(name);
      }
      continue;
    }
    if (!have_states) throw ParseError(source, line_no, toks[0].column, "expected 'states:' first");
    if (head == "start:") {
      if (have_start) throw ParseError(source, line_no, toks[0].column, "duplicate start line");
      if (toks.size() != 2) throw ParseError(source, line_no, toks[0].column, "expected 'start: <state>'");
      m.set_start(lookup(toks[1]));
      have_start = true;
    } else if (head == "final:") {
      for (std::size_t i = 1; i < toks.size(); ++i) m.add_final(lookup(toks[i]));
    } else if (head == "alphabet:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text.size() != 1) throw ParseError(source, line_no, toks[i].column, "symbols are single characters");
        m.add_symbol(toks[i].text[0]);
      }
    } else {
      if (toks.size() != 3)
        throw ParseError(source, line_no, toks[0].column, "expected '<state> <symbol|eps> <state>'");
      const auto from = lookup(toks[0]);
      const auto to = lookup(toks[2]);
      const auto label = toks[1].text;
      if (label == "eps") {
        m.add_transition(from, std::nullopt, to);
      } else if (label.size() == 1 && std::isprint(static_cast<unsigned char>(label[0]))) {
        m.add_transition(from, label[0], to);
      } else {
        throw ParseError(source, line_no, toks[1].column, "transition label must be one symbol or 'eps'");
      }
    }
  }
  if (!have_states) throw ParseError(source, line_no, 1, "missing 'states:' line");
  if (!have_start) throw ParseError(source, line_no, 1, "missing 'start:' line");
  return m;
}

std::string format_nfa(const Nfa& m) {
  std::string out;
  for (const auto& n : m.notes) out += "# " + n + "\n";
  out += "states:";
  for (StateId s = 0; s < m.size(); ++s) out += " " + m.name(s);
  out += "\nstart: " + (m.size() ? m.name(m.start()) : std::string()) + "\nfinal:";
  for (auto f : m.finals()) out += " " + m.name(f);
  out += "\n";
  Alphabet labelled;
  for (const auto& t : m.transitions())
    if (t.label) labelled.insert(*t.label);
  std::string extra;
  for (Symbol a : m.alphabet())
    if (!labelled.count(a)) extra += std::string(" ") + a;
  if (!extra.empty()) out += "alphabet:" + extra + "\n";
  for (const auto& t : m.transitions())
    out += m.name(t.from) + " " + (t.label ? std::string(1, *t.label) : std::string("eps")) + " " +
           m.name(t.to) + "\n";
  return out;
}

}  // namespace gsa
