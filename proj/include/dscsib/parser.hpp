#pragma once

#include <map>
#include <string>
#include <string_view>

#include "dscsib/dsc.hpp"

namespace dscsib {

/// Registry of user-declared opaque chains, keyed by name. Loading validates
/// that sizes are infinite, that relation sets mention known names only, and
/// then closes the declared embeddability edges transitively so that the
/// catalog stays a quasi-order.
class Declarations {
 public:
  Declarations() = default;

  void add(DeclaredChain chain);
  bool contains(const std::string& name) const;
  const DeclaredChain& get(const std::string& name) const;  // UnknownDeclared
  const std::map<std::string, DeclaredChain>& all() const { return chains_; }

  /// JSON document: {"declared": [{"name", "size", "sib",
  /// "embeds_into", "embeds_from"}, ...]}. Sizes use cardinal syntax, sib is
  /// an atom name or a two-element [lo, hi] range.
  static Declarations load_file(const std::string& path);
  static Declarations load_json_text(const std::string& text);

 private:
  void validate_and_close();
  std::map<std::string, DeclaredChain> chains_;
  friend Declarations parse_declarations_impl(const std::string&);
};

/// Parses the shared expression grammar into a normalized description.
///
///   dsc     := term ('+' term)*
///   term    := [card '*'] chain | 'A^' card | 'Did' | 'Fam(' nat ',' nat ')'
///   chain   := 'C^' nat | ordinal | '(' ordinal ')' | 'rev(' ordinal ')'
///            | 'eta' ['+' nat] | 'X(' ident ')'
///   ordinal := wpart ('+' wpart)* ['+' nat]
///   wpart   := 'w' ['^' nat] ['*' nat]
///   card    := nat | 'aleph' nat | 'alephw'
///
/// Whitespace-insensitive. Fails with ParseError (carrying a position),
/// UnknownDeclared or ZeroMultiplicity.
DscDescription parse_dsc(std::string_view text, const Declarations& decls = {});

/// Parses a single chain, e.g. for generator targets.
OrderType parse_chain(std::string_view text, const Declarations& decls = {});

/// Parses a cardinal literal.
Cardinal parse_cardinal(std::string_view text);

}  // namespace dscsib
