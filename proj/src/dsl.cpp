#include "opensys/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "opensys/error.hpp"

namespace opensys {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::Name) return a.name == b.name;
  return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
}

const NamedNetwork* NetworkDocument::find_network(std::string_view name) const {
  for (const auto& n : networks) {
    if (n.name == name) return &n;
  }
  return nullptr;
}

const Composition* NetworkDocument::find_composition(std::string_view name) const {
  for (const auto& c : compositions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool same_labels(const FinSet& a, const FinSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.label(k) != b.label(k)) return false;
  }
  return true;
}

bool same_leg(const FinFunction& f, const FinFunction& g) {
  return same_labels(f.dom(), g.dom()) && f.table() == g.table();
}

bool same_network(const NamedNetwork& a, const NamedNetwork& b) {
  const auto& na = a.network.network;
  const auto& nb = b.network.network;
  if (a.name != b.name || !same_labels(na.species(), nb.species())) return false;
  if (na.reactions().size() != nb.reactions().size()) return false;
  for (std::size_t k = 0; k < na.reactions().size(); ++k) {
    const Reaction& ra = na.reactions()[k];
    const Reaction& rb = nb.reactions()[k];
    if (ra.name != rb.name || ra.input != rb.input || ra.output != rb.output || ra.rate != rb.rate) return false;
  }
  return same_leg(a.network.inputs, b.network.inputs) && same_leg(a.network.outputs, b.network.outputs);
}

}  // namespace

bool same_document(const NetworkDocument& a, const NetworkDocument& b) {
  if (a.networks.size() != b.networks.size() || a.compositions.size() != b.compositions.size()) return false;
  for (std::size_t k = 0; k < a.networks.size(); ++k) {
    if (!same_network(a.networks[k], b.networks[k])) return false;
  }
  for (std::size_t k = 0; k < a.compositions.size(); ++k) {
    if (a.compositions[k].name != b.compositions[k].name || !(a.compositions[k].expr == b.compositions[k].expr)) {
      return false;
    }
  }
  return true;
}

namespace {

enum class Tok { Ident, Number, Arrow, Plus, Colon, Semi, Bar, Equals, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "a name";
    case Tok::Number: return "a number";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Colon: return "':'";
    case Tok::Semi: return "';'";
    case Tok::Bar: return "'|'";
    case Tok::Equals: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of line";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    char c = line[k];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    auto push = [&](Tok t, std::size_t len) {
      out.push_back({t, std::string(line.substr(start, len)), start + 1});
      k = start + len;
    };
    if (ident_start(c)) {
      std::size_t e = k;
      while (e < line.size() && ident_char(line[e])) ++e;
      push(Tok::Ident, e - k);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t e = k;
      while (e < line.size() && (std::isdigit(static_cast<unsigned char>(line[e])) || line[e] == '.' || line[e] == '/')) {
        ++e;
      }
      push(Tok::Number, e - k);
    } else if (c == '-' && k + 1 < line.size() && line[k + 1] == '>') {
      push(Tok::Arrow, 2);
    } else if (c == '+') {
      push(Tok::Plus, 1);
    } else if (c == ':') {
      push(Tok::Colon, 1);
    } else if (c == ';') {
      push(Tok::Semi, 1);
    } else if (c == '|') {
      push(Tok::Bar, 1);
    } else if (c == '=') {
      push(Tok::Equals, 1);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line_no, k + 1);
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

// Cursor over the tokens of one line.
class LineCursor {
 public:
  LineCursor(std::vector<Token> tokens, std::size_t line) : tokens_(std::move(tokens)), line_(line) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  const Token& expect(Tok t, std::string_view what = {}) {
    if (!at(t)) fail(peek(), "expected " + std::string(what.empty() ? describe(t) : what));
    return next();
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    std::string found = t.kind == Tok::End ? "end of line" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, line_, t.column);
  }
  [[noreturn]] void error_at(const Token& t, const std::string& message) const {
    throw ParseError(message, line_, t.column);
  }
  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

struct NetworkBuilder {
  std::string name;
  std::size_t line = 0;
  std::vector<std::string> species;
  std::map<std::string, std::size_t> species_index;
  std::vector<Reaction> reactions;
  std::vector<std::string> input_labels, output_labels;
  std::vector<std::size_t> input_targets, output_targets;
};

std::size_t species_of(const NetworkBuilder& b, LineCursor& cur) {
  const Token& t = cur.expect(Tok::Ident, "a species name");
  auto it = b.species_index.find(t.text);
  if (it == b.species_index.end()) cur.error_at(t, "unknown species '" + t.text + "' in network '" + b.name + "'");
  return it->second;
}

std::vector<std::uint32_t> parse_complex(const NetworkBuilder& b, LineCursor& cur) {
  std::vector<std::uint32_t> stoich(b.species.size(), 0);
  if (cur.at(Tok::Number) && cur.peek().text == "0") {
    cur.next();
    return stoich;
  }
  while (true) {
    std::uint32_t coef = 1;
    if (cur.at(Tok::Number)) {
      const Token& t = cur.next();
      bool integer = !t.text.empty() && std::all_of(t.text.begin(), t.text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (!integer || t.text.size() > 9 || std::stoul(t.text) == 0) {
        cur.error_at(t, "stoichiometric coefficient must be a positive integer");
      }
      coef = static_cast<std::uint32_t>(std::stoul(t.text));
    }
    stoich[species_of(b, cur)] += coef;
    if (!cur.at(Tok::Plus)) break;
    cur.next();
  }
  return stoich;
}

void parse_boundary(NetworkBuilder& b, LineCursor& cur, std::vector<std::string>& labels,
                    std::vector<std::size_t>& targets) {
  while (!cur.at(Tok::End)) {
    const Token& l = cur.expect(Tok::Ident, "a boundary name");
    if (std::find(labels.begin(), labels.end(), l.text) != labels.end()) {
      cur.error_at(l, "boundary name '" + l.text + "' used twice");
    }
    cur.expect(Tok::Arrow);
    std::size_t s = species_of(b, cur);
    labels.push_back(l.text);
    targets.push_back(s);
  }
}

OpenNetwork build(const NetworkBuilder& b) {
  FinSet species(b.species);
  ReactionNetwork net(species, b.reactions);
  return OpenNetwork{std::move(net), FinFunction(FinSet(b.input_labels), species, b.input_targets),
                     FinFunction(FinSet(b.output_labels), species, b.output_targets)};
}

struct BoundaryType {
  FinSet left, right;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  NetworkDocument run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      handle_line(LineCursor(tokenize(line, line_no), line_no));
      if (end == text_.size()) break;
      start = end + 1;
    }
    if (current_) {
      throw ParseError("network '" + current_->name + "' is missing 'end'", current_->line, 1);
    }
    return std::move(doc_);
  }

 private:
  void handle_line(LineCursor cur) {
    if (cur.at(Tok::End)) return;
    const Token& head = cur.expect(Tok::Ident, "a keyword");
    const std::string& kw = head.text;
    if (current_) {
      if (kw == "species") {
        while (!cur.at(Tok::End)) {
          const Token& s = cur.expect(Tok::Ident, "a species name");
          if (current_->species_index.count(s.text)) cur.error_at(s, "species '" + s.text + "' declared twice");
          current_->species_index[s.text] = current_->species.size();
          current_->species.push_back(s.text);
          for (auto& r : current_->reactions) {
            r.input.push_back(0);
            r.output.push_back(0);
          }
        }
      } else if (kw == "reaction") {
        Reaction r;
        r.name = cur.expect(Tok::Ident, "a reaction name").text;
        cur.expect(Tok::Colon);
        r.input = parse_complex(*current_, cur);
        cur.expect(Tok::Arrow);
        r.output = parse_complex(*current_, cur);
        const Token& kw_rate = cur.expect(Tok::Ident, "'rate'");
        if (kw_rate.text != "rate") cur.fail(kw_rate, "expected 'rate'");
        const Token& value = cur.expect(Tok::Number, "a rate");
        try {
          r.rate = parse_rational(value.text);
        } catch (const InvalidValue&) {
          cur.error_at(value, "malformed rate '" + value.text + "'");
        }
        if (r.rate <= 0) cur.error_at(value, "rate must be positive");
        cur.expect(Tok::End);
        current_->reactions.push_back(std::move(r));
      } else if (kw == "inputs") {
        parse_boundary(*current_, cur, current_->input_labels, current_->input_targets);
      } else if (kw == "outputs") {
        parse_boundary(*current_, cur, current_->output_labels, current_->output_targets);
      } else if (kw == "end") {
        cur.expect(Tok::End);
        doc_.networks.push_back({current_->name, build(*current_)});
        types_.emplace(current_->name, BoundaryType{doc_.networks.back().network.inputs.dom(),
                                                    doc_.networks.back().network.outputs.dom()});
        current_.reset();
      } else {
        cur.fail(head, "expected 'species', 'reaction', 'inputs', 'outputs' or 'end'");
      }
      return;
    }
    if (kw == "network") {
      const Token& name = cur.expect(Tok::Ident, "a network name");
      check_fresh(cur, name);
      cur.expect(Tok::End);
      current_.emplace();
      current_->name = name.text;
      current_->line = cur.line();
    } else if (kw == "compose") {
      const Token& name = cur.expect(Tok::Ident, "a composition name");
      check_fresh(cur, name);
      cur.expect(Tok::Equals);
      Expr e = parse_sequence(cur);
      cur.expect(Tok::End, "';', '|' or end of line");
      BoundaryType t = type_of(e, cur);
      types_.emplace(name.text, std::move(t));
      doc_.compositions.push_back({name.text, std::move(e)});
    } else {
      cur.fail(head, "expected 'network' or 'compose'");
    }
  }

  void check_fresh(LineCursor& cur, const Token& name) {
    if (types_.count(name.text) || (current_ && current_->name == name.text)) {
      cur.error_at(name, "name '" + name.text + "' already defined");
    }
  }

  Expr parse_sequence(LineCursor& cur) {
    Expr e = parse_parallel(cur);
    while (cur.at(Tok::Semi)) {
      const Token& op = cur.next();
      Expr rhs = parse_parallel(cur);
      e = binary(Expr::Kind::Sequence, std::move(e), std::move(rhs), op, cur.line());
    }
    return e;
  }

  Expr parse_parallel(LineCursor& cur) {
    Expr e = parse_atom(cur);
    while (cur.at(Tok::Bar)) {
      const Token& op = cur.next();
      Expr rhs = parse_atom(cur);
      e = binary(Expr::Kind::Parallel, std::move(e), std::move(rhs), op, cur.line());
    }
    return e;
  }

  Expr parse_atom(LineCursor& cur) {
    if (cur.at(Tok::LParen)) {
      cur.next();
      Expr e = parse_sequence(cur);
      cur.expect(Tok::RParen);
      return e;
    }
    const Token& t = cur.expect(Tok::Ident, "a network name or '('");
    if (!types_.count(t.text)) cur.error_at(t, "unknown network or composition '" + t.text + "'");
    Expr e;
    e.name = t.text;
    e.line = cur.line();
    e.column = t.column;
    return e;
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, const Token& op, std::size_t line) {
    Expr e;
    e.kind = kind;
    e.lhs = std::make_shared<const Expr>(std::move(lhs));
    e.rhs = std::make_shared<const Expr>(std::move(rhs));
    e.line = line;
    e.column = op.column;
    return e;
  }

  BoundaryType type_of(const Expr& e, const LineCursor& cur) const {
    if (e.kind == Expr::Kind::Name) return types_.at(e.name);
    BoundaryType a = type_of(*e.lhs, cur), b = type_of(*e.rhs, cur);
    if (e.kind == Expr::Kind::Parallel) {
      return {coproduct(a.left, b.left).sum, coproduct(a.right, b.right).sum};
    }
    if (!same_labels(a.right, b.left)) {
      auto show = [](const FinSet& s) {
        std::string out = "{";
        for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + s.label(k);
        return out + "}";
      };
      throw ParseError("boundary mismatch: outputs " + show(a.right) + " do not match inputs " + show(b.left),
                       e.line, e.column);
    }
    return {a.left, b.right};
  }

  std::string_view text_;
  NetworkDocument doc_;
  std::optional<NetworkBuilder> current_;
  std::map<std::string, BoundaryType> types_;
};

void print_complex(std::ostream& os, const std::vector<std::uint32_t>& stoich, const FinSet& species) {
  bool first = true;
  for (std::size_t k = 0; k < stoich.size(); ++k) {
    if (stoich[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (stoich[k] != 1) os << stoich[k] << ' ';
    os << species.label(k);
  }
  if (first) os << '0';
}

void print_leg(std::ostream& os, const char* keyword, const FinFunction& f) {
  if (f.dom().size() == 0) return;
  os << "  " << keyword;
  for (std::size_t k = 0; k < f.dom().size(); ++k) os << ' ' << f.dom().label(k) << "->" << f.cod().label(f(k));
  os << '\n';
}

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name: return e.name;
    case Expr::Kind::Sequence: {
      std::string rhs = print_expr(*e.rhs);
      if (e.rhs->kind == Expr::Kind::Sequence) rhs = "(" + rhs + ")";
      return print_expr(*e.lhs) + " ; " + rhs;
    }
    case Expr::Kind::Parallel: {
      std::string lhs = print_expr(*e.lhs), rhs = print_expr(*e.rhs);
      if (e.lhs->kind == Expr::Kind::Sequence) lhs = "(" + lhs + ")";
      if (e.rhs->kind != Expr::Kind::Name) rhs = "(" + rhs + ")";
      return lhs + " | " + rhs;
    }
  }
  return {};
}

OpenSystem evaluate_expr(const NetworkDocument& doc, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name: return evaluate(doc, e.name);
    case Expr::Kind::Sequence: return decorated_compose(evaluate_expr(doc, *e.lhs), evaluate_expr(doc, *e.rhs));
    case Expr::Kind::Parallel: return decorated_tensor(evaluate_expr(doc, *e.lhs), evaluate_expr(doc, *e.rhs));
  }
  throw InvalidValue("malformed expression");
}

}  // namespace

NetworkDocument parse_document(std::string_view text) { return DocumentParser(text).run(); }

std::string pretty_print(const NetworkDocument& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, onet] : doc.networks) {
    if (!first) os << '\n';
    first = false;
    const FinSet& species = onet.network.species();
    os << "network " << name << '\n';
    if (species.size() > 0) {
      os << "  species";
      for (std::size_t k = 0; k < species.size(); ++k) os << ' ' << species.label(k);
      os << '\n';
    }
    for (const auto& r : onet.network.reactions()) {
      os << "  reaction " << r.name << ": ";
      print_complex(os, r.input, species);
      os << " -> ";
      print_complex(os, r.output, species);
      os << " rate " << to_string(r.rate) << '\n';
    }
    print_leg(os, "inputs", onet.inputs);
    print_leg(os, "outputs", onet.outputs);
    os << "end\n";
  }
  if (!doc.compositions.empty() && !doc.networks.empty()) os << '\n';
  for (const auto& c : doc.compositions) os << "compose " << c.name << " = " << print_expr(c.expr) << '\n';
  return os.str();
}

OpenSystem evaluate(const NetworkDocument& doc, std::string_view name) {
  if (const auto* n = doc.find_network(name)) return open_network_to_morphism(n->network);
  if (const auto* c = doc.find_composition(name)) return evaluate_expr(doc, c->expr);
  throw InvalidValue("no network or composition named '" + std::string(name) + "'");
}

}  // namespace opensys
