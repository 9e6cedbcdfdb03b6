#pragma once

// Text format for rich incomplete argumentation frameworks, in the style of
// ASPARTIX apx files:
//
//   arg(a).      certain argument
//   ?arg(f).     uncertain argument
//   att(b,a).    certain attack
//   ?att(e,a).   uncertain attack
//   sym(a,b).    conflict of unknown direction (one directive per pair)
//   % comment to end of line
//
// Directives may appear in any order. Identical directives are rejected, as
// are sym(a,b) and sym(b,a) in the same document.

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riaf/core.hpp"

namespace riaf {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

enum class DirectiveKind { Arg, UncertainArg, Att, UncertainAtt, Sym };

struct Directive {
  DirectiveKind kind;
  std::vector<std::string> names;
  std::size_t line;
  std::size_t column;
};

class RiafParser {
public:
  explicit RiafParser(std::string_view text) : text_(text) {}

  std::vector<Directive> directives() {
    std::vector<Directive> out;
    for (;;) {
      skip_blank();
      if (at_end()) return out;
      out.push_back(directive());
    }
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

  void skip_blank() {
    while (!at_end()) {
      const char ch = peek();
      if (ch == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  static bool name_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '_';
  }

  std::string name() {
    skip_blank();
    const auto line = line_;
    const auto column = column_;
    std::string out;
    while (!at_end() && name_char(peek())) {
      out += peek();
      advance();
    }
    if (out.empty()) {
      if (!at_end() && static_cast<unsigned char>(peek()) >= 0x80) fail("non-ASCII character");
      fail("expected a name");
    }
    if (out.size() > kMaxNameLength) throw ParseError(line, column, "name longer than 255 characters");
    return out;
  }

  void expect(char ch) {
    skip_blank();
    if (at_end()) fail(std::string("expected '") + ch + "' before end of input");
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  Directive directive() {
    const auto line = line_;
    const auto column = column_;
    bool uncertain = false;
    if (peek() == '?') {
      uncertain = true;
      advance();
    }
    const auto keyword = name();
    DirectiveKind kind;
    std::size_t arity = 2;
    if (keyword == "arg") {
      kind = uncertain ? DirectiveKind::UncertainArg : DirectiveKind::Arg;
      arity = 1;
    } else if (keyword == "att") {
      kind = uncertain ? DirectiveKind::UncertainAtt : DirectiveKind::Att;
    } else if (keyword == "sym" && !uncertain) {
      kind = DirectiveKind::Sym;
    } else {
      throw ParseError(line, column, "unknown directive '" + std::string(uncertain ? "?" : "") +
                                         keyword + "'");
    }
    expect('(');
    std::vector<std::string> names{name()};
    if (arity == 2) {
      expect(',');
      names.push_back(name());
    }
    expect(')');
    expect('.');
    return Directive{kind, std::move(names), line, column};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline bool mentions_pair(const Directive& d, const std::string& a, const std::string& b) {
  if (d.names.size() != 2) return false;
  if (d.names[0] == a && d.names[1] == b) return true;
  return d.kind == DirectiveKind::Sym && d.names[0] == b && d.names[1] == a;
}

/// Location of the directive responsible for a validation error.
inline const Directive& culprit(const std::vector<Directive>& directives, const RiafError& err) {
  const auto& subjects = err.subjects();
  const Directive* found = nullptr;
  for (const auto& d : directives) {
    switch (err.kind()) {
      case ErrorKind::ArgumentOverlap:
        // the later of the two declarations
        if (d.names.size() == 1 && d.names[0] == subjects[0].name()) found = &d;
        break;
      case ErrorKind::RelationOverlap:
        if (mentions_pair(d, subjects[0].name(), subjects[1].name())) found = &d;
        break;
      case ErrorKind::UndeclaredArgument:
        if (!found && d.names.size() == 2 &&
            (d.names[0] == subjects[0].name() || d.names[1] == subjects[0].name())) {
          found = &d;
        }
        break;
      case ErrorKind::SelfConflict:
        if (!found && d.kind == DirectiveKind::Sym && d.names[0] == d.names[1] &&
            d.names[0] == subjects[0].name()) {
          found = &d;
        }
        break;
    }
  }
  return found ? *found : directives.front();
}

}  // namespace detail

inline RichIAF parse_riaf(std::string_view text) {
  using detail::DirectiveKind;
  const auto directives = detail::RiafParser(text).directives();

  std::map<std::pair<int, std::vector<std::string>>, const detail::Directive*> seen;
  RiafCandidate raw;
  for (const auto& d : directives) {
    auto key_names = d.names;
    if (d.kind == DirectiveKind::Sym && key_names[1] < key_names[0]) {
      std::swap(key_names[0], key_names[1]);
    }
    const auto [it, fresh] = seen.emplace(std::pair{static_cast<int>(d.kind), key_names}, &d);
    if (!fresh) {
      throw ParseError(d.line, d.column,
                       "duplicate directive (first at line " + std::to_string(it->second->line) +
                           ")");
    }
    switch (d.kind) {
      case DirectiveKind::Arg: raw.certain_args.emplace(d.names[0]); break;
      case DirectiveKind::UncertainArg: raw.uncertain_args.emplace(d.names[0]); break;
      case DirectiveKind::Att:
        raw.certain_attacks.insert(Attack{ArgumentId(d.names[0]), ArgumentId(d.names[1])});
        break;
      case DirectiveKind::UncertainAtt:
        raw.uncertain_attacks.insert(Attack{ArgumentId(d.names[0]), ArgumentId(d.names[1])});
        break;
      case DirectiveKind::Sym:
        raw.uncertain_conflicts.insert(Attack{ArgumentId(d.names[0]), ArgumentId(d.names[1])});
        break;
    }
  }
  try {
    return validate_riaf(std::move(raw));
  } catch (const RiafError& err) {
    const auto& d = detail::culprit(directives, err);
    throw ParseError(d.line, d.column, err.what());
  }
}

/// Canonical text: arg, ?arg, att, ?att, sym, each block sorted, one sym per
/// pair with the smaller name first.
inline std::string serialize_riaf(const RichIAF& riaf) {
  std::ostringstream out;
  for (const auto& a : riaf.certain_args()) out << "arg(" << a << ").\n";
  for (const auto& a : riaf.uncertain_args()) out << "?arg(" << a << ").\n";
  for (const auto& att : riaf.certain_attacks()) {
    out << "att(" << att.source << ',' << att.target << ").\n";
  }
  for (const auto& att : riaf.uncertain_attacks()) {
    out << "?att(" << att.source << ',' << att.target << ").\n";
  }
  for (const auto& [a, b] : riaf.conflict_pairs()) out << "sym(" << a << ',' << b << ").\n";
  return out.str();
}

inline std::string serialize_af(const ArgumentationFramework& af) {
  return serialize_riaf(lift_af(af));
}

}  // namespace riaf
