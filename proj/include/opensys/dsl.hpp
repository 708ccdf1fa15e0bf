#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "opensys/dynam.hpp"

namespace opensys {

/// A composition expression: a network name, `a ; b` or `a | b`.
struct Expr {
  enum class Kind { Name, Sequence, Parallel };

  Kind kind = Kind::Name;
  std::string name;
  std::shared_ptr<const Expr> lhs, rhs;
  std::size_t line = 0, column = 0;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct NamedNetwork {
  std::string name;
  OpenNetwork network;
};

struct Composition {
  std::string name;
  Expr expr;
};

struct NetworkDocument {
  std::vector<NamedNetwork> networks;
  std::vector<Composition> compositions;

  const NamedNetwork* find_network(std::string_view name) const;
  const Composition* find_composition(std::string_view name) const;
};

/// Structural equality including every label.
bool same_document(const NetworkDocument& a, const NetworkDocument& b);

/// Line-oriented grammar:
///
///   network <name>
///     species A B C
///     reaction <name>: 2 A + B -> 3 C rate <rational>
///     inputs a1->A a2->A
///     outputs d->D
///   end
///   compose <out> = n1 ; n2 | n3
///
/// `#` starts a comment; `|` binds tighter than `;`, both associate to the
/// left; `0` is the empty complex. Compositions are type-checked against the
/// boundary labels. Throws ParseError.
NetworkDocument parse_document(std::string_view text);

/// Canonical text that parses back to the same document.
std::string pretty_print(const NetworkDocument& doc);

/// The open system named `name` (a network or a composition). Throws
/// InvalidValue for an unknown name.
OpenSystem evaluate(const NetworkDocument& doc, std::string_view name);

}  // namespace opensys
