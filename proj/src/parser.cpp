#include "dscsib/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dscsib/error.hpp"

namespace dscsib {

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  fail("ParseError", what + " at position " + std::to_string(pos));
}

/// Hand-rolled scanner/parser for the expression grammar. Two spots need
/// one-token backtracking: a '+ nat' after an ordinal or after 'eta' belongs
/// to the next term when a '*' follows the number.
class Parser {
 public:
  Parser(std::string_view text, const Declarations& decls)
      : text_(text), decls_(decls) {}

  DscDescription parse_description() {
    DscDescription d;
    parse_term(d);
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      parse_term(d);
      skip_ws();
    }
    if (pos_ != text_.size()) parse_fail(pos_, "trailing input");
    if (d.empty()) parse_fail(pos_, "empty description");
    return normalize(d);
  }

  OrderType parse_single_chain() {
    const OrderType t = parse_chain_node();
    skip_ws();
    if (pos_ != text_.size()) parse_fail(pos_, "trailing input");
    return t;
  }

  Cardinal parse_single_cardinal() {
    const Cardinal c = parse_card();
    skip_ws();
    if (pos_ != text_.size()) parse_fail(pos_, "trailing input");
    return c;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) parse_fail(pos_, std::string("expected '") + c + "' in " + what);
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t parse_nat() {
    skip_ws();
    if (!at_digit()) parse_fail(pos_, "expected a number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (UINT64_MAX - digit) / 10) parse_fail(pos_, "number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::string parse_ident() {
    skip_ws();
    if (pos_ >= text_.size() ||
        (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_')) {
      parse_fail(pos_, "expected an identifier");
    }
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_++];
    }
    return out;
  }

  bool lookahead_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_).substr(0, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    return true;
  }

  bool eat_word(std::string_view word) {
    if (!lookahead_word(word)) return false;
    pos_ += word.size();
    return true;
  }

  Cardinal parse_card() {
    skip_ws();
    if (at_digit()) return Cardinal::finite(parse_nat());
    if (eat_word("alephw")) return Cardinal::aleph_omega();
    // 'aleph3' scans as one identifier, 'aleph 3' as a word plus a number.
    if (lookahead_word("aleph")) {
      pos_ += 5;
      return Cardinal::aleph(parse_nat());
    }
    const std::size_t save = pos_;
    if (pos_ < text_.size() && text_.substr(pos_, 5) == "aleph") {
      pos_ += 5;
      if (at_digit()) return Cardinal::aleph(parse_nat());
      pos_ = save;
    }
    parse_fail(pos_, "expected a cardinal");
  }

  bool at_card_start() {
    if (at_digit()) return true;
    skip_ws();
    return text_.substr(pos_).substr(0, 5) == "aleph";
  }

  CnfTerm parse_wpart() {
    skip_ws();
    if (!eat_word("w")) parse_fail(pos_, "expected 'w'");
    CnfTerm term{1, 1};
    if (eat('^')) {
      term.exp = parse_nat();
      if (term.exp < 1) parse_fail(pos_, "omega exponents must be >= 1");
    }
    if (eat('*')) {
      term.coef = parse_nat();
      if (term.coef < 1) parse_fail(pos_, "omega coefficients must be >= 1");
    }
    return term;
  }

  CnfOrdinal parse_ordinal() {
    CnfOrdinal value({parse_wpart()}, 0);
    while (true) {
      const std::size_t save = pos_;
      if (!eat('+')) break;
      if (lookahead_word("w")) {
        value = value.plus(CnfOrdinal({parse_wpart()}, 0));
        continue;
      }
      if (at_digit()) {
        const std::uint64_t tail = parse_nat();
        // '3*C^2' after a '+' is the next term, not a tail.
        if (peek() == '*' || peek() == '^') {
          pos_ = save;
          break;
        }
        value = value.plus_finite(tail);
        break;
      }
      pos_ = save;
      break;
    }
    return value;
  }

  OrderType parse_chain_node() {
    skip_ws();
    if (eat_word("C")) {
      expect('^', "a finite chain");
      const std::uint64_t n = parse_nat();
      if (n < 1) parse_fail(pos_, "finite chains have size >= 1");
      return fin_chain(n);
    }
    if (eat_word("rev")) {
      expect('(', "rev(...)");
      CnfOrdinal alpha = parse_ordinal();
      expect(')', "rev(...)");
      return rev_chain(std::move(alpha));
    }
    if (eat_word("eta")) {
      std::uint64_t tail = 0;
      const std::size_t save = pos_;
      if (eat('+')) {
        if (at_digit()) {
          const std::uint64_t n = parse_nat();
          if (peek() == '*' || peek() == '^') {
            pos_ = save;
          } else {
            tail = n;
          }
        } else {
          pos_ = save;
        }
      }
      return eta_chain(tail);
    }
    if (eat_word("X")) {
      expect('(', "X(name)");
      const std::string name = parse_ident();
      expect(')', "X(name)");
      return decls_.get(name);
    }
    if (eat('(')) {
      CnfOrdinal alpha = parse_ordinal();
      expect(')', "a parenthesized ordinal");
      return ord_chain(std::move(alpha));
    }
    if (lookahead_word("w")) return ord_chain(parse_ordinal());
    parse_fail(pos_, "expected a chain");
  }

  void parse_term(DscDescription& d) {
    skip_ws();
    const std::size_t term_pos = pos_;
    if (eat_word("Did")) {
      d.families.push_back(FinFamily{1, 1});
      return;
    }
    if (eat_word("Fam")) {
      expect('(', "Fam(a,b)");
      const std::uint64_t a = parse_nat();
      expect(',', "Fam(a,b)");
      const std::uint64_t b = parse_nat();
      expect(')', "Fam(a,b)");
      if (b < 1) parse_fail(term_pos, "family offset must be >= 1");
      d.families.push_back(FinFamily{a, b});
      return;
    }
    if (eat_word("A")) {
      expect('^', "an antichain");
      const Cardinal count = parse_card();
      if (count == Cardinal::finite(0)) {
        fail("ZeroMultiplicity", "zero multiplicity at position " +
                                     std::to_string(term_pos));
      }
      d.classes.push_back({fin_chain(1), count});
      return;
    }
    Cardinal mult = Cardinal::finite(1);
    if (at_card_start()) {
      mult = parse_card();
      expect('*', "a multiplied chain");
      if (mult == Cardinal::finite(0)) {
        fail("ZeroMultiplicity", "zero multiplicity at position " +
                                     std::to_string(term_pos));
      }
    }
    d.classes.push_back({parse_chain_node(), mult});
  }

  std::string_view text_;
  const Declarations& decls_;
  std::size_t pos_ = 0;
};

SibCount sib_from_json(const nlohmann::json& j) {
  auto atom = [](const std::string& name) {
    if (name == "One") return SibAtom::one;
    if (name == "Aleph0") return SibAtom::aleph0;
    if (name == "Continuum") return SibAtom::continuum;
    if (name == "Infinite") return SibAtom::infinite;
    fail("InvalidArgument", "unknown sibling count token: " + name);
  };
  if (j.is_string()) return SibCount::exact(atom(j.get<std::string>()));
  if (j.is_array() && j.size() == 2) {
    return SibCount::range(atom(j[0].get<std::string>()),
                           atom(j[1].get<std::string>()));
  }
  fail("InvalidArgument", "sibling count must be an atom or a [lo, hi] pair");
}

}  // namespace

void Declarations::add(DeclaredChain chain) {
  if (chains_.count(chain.name) > 0) {
    fail("InvalidArgument", "declared chain defined twice: " + chain.name);
  }
  chains_.emplace(chain.name, std::move(chain));
  validate_and_close();
}

bool Declarations::contains(const std::string& name) const {
  return chains_.count(name) > 0;
}

const DeclaredChain& Declarations::get(const std::string& name) const {
  auto it = chains_.find(name);
  if (it == chains_.end()) {
    fail("UnknownDeclared", "declared chain not defined: " + name);
  }
  return it->second;
}

void Declarations::validate_and_close() {
  for (auto& [name, chain] : chains_) {
    if (chain.size.is_finite()) {
      fail("InvalidArgument",
           "declared chains must be infinite, use C^n for " + name);
    }
  }
  // Unify both declared directions into one edge relation over the known
  // names, close it transitively (embeddability is a quasi-order), and
  // write both views back. Edges to names not declared yet are kept as
  // written and picked up once the name appears.
  std::map<std::string, std::set<std::string>> edges;
  for (const auto& [name, chain] : chains_) edges[name];
  for (const auto& [name, chain] : chains_) {
    for (const std::string& into : chain.embeds_into) {
      if (chains_.count(into)) edges[name].insert(into);
    }
    for (const std::string& from : chain.embeds_from) {
      if (chains_.count(from)) edges[from].insert(name);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [from, outs] : edges) {
      for (const std::string& mid : std::set<std::string>(outs)) {
        for (const std::string& far : edges[mid]) {
          if (far != from && outs.insert(far).second) changed = true;
        }
      }
    }
  }
  for (auto& [from, outs] : edges) {
    for (const std::string& to : outs) {
      chains_.at(from).embeds_into.insert(to);
      chains_.at(to).embeds_from.insert(from);
    }
  }
}

Declarations Declarations::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("InvalidArgument", "cannot open declarations file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_json_text(buffer.str());
}

Declarations Declarations::load_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("declarations are not valid JSON: ") + e.what());
  }
  Declarations out;
  if (!doc.contains("declared")) return out;
  for (const nlohmann::json& entry : doc["declared"]) {
    DeclaredChain chain;
    chain.name = entry.at("name").get<std::string>();
    chain.size = parse_cardinal(entry.at("size").get<std::string>());
    chain.sib = sib_from_json(entry.at("sib"));
    if (entry.contains("embeds_into")) {
      for (const auto& n : entry["embeds_into"]) {
        chain.embeds_into.insert(n.get<std::string>());
      }
    }
    if (entry.contains("embeds_from")) {
      for (const auto& n : entry["embeds_from"]) {
        chain.embeds_from.insert(n.get<std::string>());
      }
    }
    if (out.chains_.count(chain.name) > 0) {
      fail("InvalidArgument", "declared chain defined twice: " + chain.name);
    }
    out.chains_.emplace(chain.name, std::move(chain));
  }
  for (const auto& [name, chain] : out.chains_) {
    for (const std::string& other : chain.embeds_into) {
      if (!out.contains(other)) {
        fail("UnknownDeclared", "relation of " + name + " mentions unknown " + other);
      }
    }
    for (const std::string& other : chain.embeds_from) {
      if (!out.contains(other)) {
        fail("UnknownDeclared", "relation of " + name + " mentions unknown " + other);
      }
    }
  }
  out.validate_and_close();
  return out;
}

DscDescription parse_dsc(std::string_view text, const Declarations& decls) {
  return Parser(text, decls).parse_description();
}

OrderType parse_chain(std::string_view text, const Declarations& decls) {
  return Parser(text, decls).parse_single_chain();
}

Cardinal parse_cardinal(std::string_view text) {
  return Parser(text, {}).parse_single_cardinal();
}

}  // namespace dscsib
