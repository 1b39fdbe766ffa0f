#include "gsa/grammar_io.hpp"

#include <cctype>

namespace gsa {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t b = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(b, i - b), offset + b + 1});
  }
  return out;
}

}  // namespace

Cfg parse_grammar(std::string_view text, const std::string& source) {
  std::optional<Nonterminal> start;
  std::set<CfgProduction> prods;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line, 0);
    if (toks.empty()) continue;

    if (toks[0].text == "start:") {
      if (start) throw ParseError(source, line_no, toks[0].column, "duplicate start line");
      if (toks.size() != 2 || !is_nonterminal_name(toks[1].text))
        throw ParseError(source, line_no, toks[0].column, "expected 'start: <Nonterminal>'");
      start = Nonterminal(toks[1].text);
      continue;
    }
    if (!is_nonterminal_name(toks[0].text))
      throw ParseError(source, line_no, toks[0].column, "expected a nonterminal on the left-hand side");
    if (toks.size() < 2 || toks[1].text != "->")
      throw ParseError(source, line_no, toks.size() < 2 ? toks[0].column + toks[0].text.size() : toks[1].column,
                       "expected '->'");

    CfgProduction p{Nonterminal(toks[0].text), {}};
    if (toks.size() == 3 && toks[2].text == "@eps") {
      prods.insert(std::move(p));
      continue;
    }
    if (toks.size() == 2) throw ParseError(source, line_no, toks[1].column, "empty right-hand side; write @eps");
    for (std::size_t k = 2; k < toks.size(); ++k) {
      const auto& t = toks[k];
      if (is_nonterminal_name(t.text)) {
        p.rhs.emplace_back(Nonterminal(t.text));
      } else if (t.text.size() == 1 && std::isprint(static_cast<unsigned char>(t.text[0]))) {
        p.rhs.emplace_back(t.text[0]);
      } else if (t.text == "@eps") {
        throw ParseError(source, line_no, t.column, "@eps must be the whole right-hand side");
      } else {
        throw ParseError(source, line_no, t.column,
                         "token '" + std::string(t.text) + "' is neither a nonterminal nor a single terminal");
      }
    }
    prods.insert(std::move(p));
  }
  if (!start) throw ParseError(source, line_no, 1, "missing 'start:' line");
  return Cfg::from_productions(*start, std::move(prods));
}

std::string format_cfg(const Cfg& g, const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& n : notes) out += "# " + n + "\n";
  out += "start: " + g.start + "\n";
  for (const auto& p : g.productions) out += to_string(p) + "\n";
  return out;
}

std::string format_grammar(const HeadNormalGrammar& g) {
  std::vector<std::string> notes = g.notes;
  notes.push_back(std::string("class: ") + to_string(g.class_tag()));
  std::string out;
  for (const auto& n : notes) out += "# " + n + "\n";
  out += "start: " + g.start() + "\n";
  for (const auto& p : g.productions()) out += to_string(p) + "\n";
  return out;
}

}  // namespace gsa
