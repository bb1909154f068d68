#include <charconv>
#include <map>
#include <set>

#include "idpl/featmodel.hpp"
#include "idpl/utf8.hpp"

namespace idpl::fm {
namespace {

enum class Tok { ident, integer, lbrace, rbrace, lbracket, rbracket, comma, colon, dotdot, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

struct SyntaxError {
  std::string message;
  int line;
  int column;
};

bool is_ident_start(char32_t c) {
  if (c < 0x80) return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  // Non-ASCII: accept everything except common punctuation and space blocks.
  if (c >= 0x80 && c <= 0xBF) return false;
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c == 0xFEFF) return false;
  return true;
}

bool is_ident_continue(char32_t c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;

    const char c = src_[pos_];
    auto single = [&](Tok k) {
      t.kind = k;
      t.text = std::string(1, c);
      advance(1);
      return t;
    };
    switch (c) {
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ',': return single(Tok::comma);
      case ':': return single(Tok::colon);
      default: break;
    }
    if (c == '.' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
      t.kind = Tok::dotdot;
      t.text = "..";
      advance(2);
      return t;
    }
    if ((c >= '0' && c <= '9') ||
        (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] >= '0' && src_[pos_ + 1] <= '9')) {
      std::size_t end = pos_ + 1;
      while (end < src_.size() && src_[end] >= '0' && src_[end] <= '9') ++end;
      t.kind = Tok::integer;
      t.text = std::string(src_.substr(pos_, end - pos_));
      advance(end - pos_);
      return t;
    }
    auto d = utf8::decode(src_, pos_);
    if (d.length == 0) throw SyntaxError{"invalid UTF-8 byte sequence", line_, column_};
    if (!is_ident_start(d.codepoint)) {
      throw SyntaxError{"unexpected character '" + std::string(src_.substr(pos_, d.length)) + "'",
                        line_, column_};
    }
    std::size_t end = pos_;
    while (end < src_.size()) {
      auto e = utf8::decode(src_, end);
      if (e.length == 0 || !is_ident_continue(e.codepoint)) break;
      end += e.length;
    }
    t.kind = Tok::ident;
    t.text = std::string(src_.substr(pos_, end - pos_));
    advance(end - pos_);
    return t;
  }

 private:
  void advance(std::size_t bytes) {
    const std::size_t stop = pos_ + bytes;
    while (pos_ < stop) {
      auto d = utf8::decode(src_, pos_);
      const std::size_t n = d.length == 0 ? 1 : d.length;
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      pos_ += n;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (src_.substr(pos_, 3) == "\xEF\xBB\xBF") {
        pos_ += 3;  // BOM
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string_view describe(Tok k) {
  switch (k) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::dotdot: return "'..'";
    case Tok::end: return "end of input";
  }
  return "token";
}

struct PendingConstraint {
  CrossTreeConstraint constraint;
  Token lhs;
  Token rhs;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { current_ = lexer_.next(); }

  ModelParseResult run() {
    ModelParseResult result;
    FeatureModel model;
    try {
      expect_keyword("featuremodel");
      model.name = expect(Tok::ident).text;
      Token kw = expect(Tok::ident);
      if (kw.text != "root") {
        throw SyntaxError{"expected 'root', found '" + kw.text + "'", kw.line, kw.column};
      }
      model.root = parse_feature(Variability::mandatory, kw, /*is_root=*/true);
      if (current_.kind != Tok::end) {
        throw SyntaxError{"unexpected " + std::string(describe(current_.kind)) + " after root feature",
                          current_.line, current_.column};
      }
    } catch (const SyntaxError& e) {
      result.diagnostics.push_back(error_at("SYNTAX_ERROR", e.message, e.line, e.column));
      return result;
    }

    for (const auto& pc : constraints_) {
      bool ok = true;
      for (const Token* end : {&pc.lhs, &pc.rhs}) {
        if (!declared_.count(end->text)) {
          diags_.push_back(error_at("UNKNOWN_FEATURE",
                                    "constraint references unknown feature '" + end->text + "'",
                                    end->line, end->column));
          ok = false;
        }
      }
      if (ok && pc.constraint.lhs == pc.constraint.rhs) {
        diags_.push_back(error_at("CONSTRAINT_SELF",
                                  "constraint relates '" + pc.constraint.lhs + "' to itself",
                                  pc.lhs.line, pc.lhs.column));
      }
      model.constraints.push_back(pc.constraint);
    }

    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.model = std::move(model);
    return result;
  }

 private:
  static Diagnostic error_at(std::string code, std::string msg, int line, int col) {
    Diagnostic d = make_error(std::move(code), std::move(msg));
    d.line = line;
    d.column = col;
    return d;
  }

  Token take() {
    Token t = std::move(current_);
    current_ = lexer_.next();
    return t;
  }

  Token expect(Tok kind) {
    if (current_.kind != kind) {
      std::string found = current_.kind == Tok::end ? "end of input" : "'" + current_.text + "'";
      throw SyntaxError{"expected " + std::string(describe(kind)) + ", found " + found,
                        current_.line, current_.column};
    }
    return take();
  }

  void expect_keyword(std::string_view kw) {
    if (current_.kind != Tok::ident || current_.text != kw) {
      throw SyntaxError{"expected '" + std::string(kw) + "'", current_.line, current_.column};
    }
    take();
  }

  bool at_ident(std::string_view text) const {
    return current_.kind == Tok::ident && current_.text == text;
  }

  void declare(const Token& name) {
    auto [it, inserted] = declared_.emplace(name.text, std::make_pair(name.line, name.column));
    if (!inserted) {
      diags_.push_back(error_at("DUPLICATE_FEATURE",
                                "feature '" + name.text + "' already declared at line " +
                                    std::to_string(it->second.first),
                                name.line, name.column));
    }
  }

  int parse_int(const Token& t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || v < INT32_MIN || v > INT32_MAX) {
      throw SyntaxError{"integer out of range: " + t.text, t.line, t.column};
    }
    return static_cast<int>(v);
  }

  std::int64_t parse_int64(const Token& t) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) throw SyntaxError{"integer out of range: " + t.text, t.line, t.column};
    return v;
  }

  Cardinality parse_card(bool is_root, const std::string& feature) {
    Token open = expect(Tok::lbracket);
    Token lo = expect(Tok::integer);
    expect(Tok::dotdot);
    Token hi = expect(Tok::integer);
    expect(Tok::rbracket);
    Cardinality c{parse_int(lo), parse_int(hi)};
    if (c.min < 0) {
      diags_.push_back(error_at("CARD_NEGATIVE", "cardinality bounds must be non-negative",
                                lo.line, lo.column));
    } else if (c.min > c.max) {
      diags_.push_back(error_at("MIN_GT_MAX",
                                "cardinality [" + lo.text + ".." + hi.text + "] of '" + feature +
                                    "' has min greater than max",
                                lo.line, lo.column));
    } else if (c.max < 1) {
      diags_.push_back(error_at("CARD_MAX_ZERO", "cardinality max must be at least 1", hi.line,
                                hi.column));
    } else if (is_root && c.is_clone()) {
      diags_.push_back(error_at("ROOT_CARDINALITY", "the root feature must have cardinality [1..1]",
                                open.line, open.column));
    }
    return c;
  }

  Feature parse_feature(Variability v, const Token& keyword, bool is_root) {
    Token name = expect(Tok::ident);
    (void)keyword;
    Feature f;
    f.name = name.text;
    f.variability = v;
    if (is_root) declare(name);
    if (current_.kind == Tok::lbracket) f.cardinality = parse_card(is_root, f.name);
    if (current_.kind == Tok::lbrace) parse_block(f);
    return f;
  }

  AttributeDecl parse_attribute() {
    AttributeDecl a;
    Token name = expect(Tok::ident);
    a.name = name.text;
    expect(Tok::colon);
    Token kind = expect(Tok::ident);
    if (kind.text == "enum") {
      EnumDomain e;
      expect(Tok::lbrace);
      std::set<std::string> seen;
      do {
        Token lit = expect(Tok::ident);
        if (!seen.insert(lit.text).second) {
          diags_.push_back(error_at("DUPLICATE_ENUM_LITERAL",
                                    "enum literal '" + lit.text + "' repeated", lit.line,
                                    lit.column));
        }
        e.literals.push_back(lit.text);
        if (current_.kind != Tok::comma) break;
        take();
      } while (true);
      expect(Tok::rbrace);
      a.domain = std::move(e);
    } else if (kind.text == "int") {
      expect(Tok::lbracket);
      Token lo = expect(Tok::integer);
      expect(Tok::dotdot);
      Token hi = expect(Tok::integer);
      expect(Tok::rbracket);
      IntRangeDomain r{parse_int64(lo), parse_int64(hi)};
      if (r.lo > r.hi) {
        diags_.push_back(error_at("INT_RANGE_INVALID",
                                  "int range of attribute '" + a.name + "' has lo greater than hi",
                                  lo.line, lo.column));
      }
      a.domain = r;
    } else if (kind.text == "text") {
      a.domain = TextDomain{};
    } else {
      throw SyntaxError{"expected 'enum', 'int' or 'text', found '" + kind.text + "'", kind.line,
                        kind.column};
    }
    if (at_ident("required")) {
      take();
      a.required = true;
    }
    return a;
  }

  void parse_block(Feature& f) {
    expect(Tok::lbrace);
    // Group members declared in this block, keyed by name -> (group, child).
    std::map<std::string, std::pair<std::size_t, std::size_t>> members;
    std::set<std::string> elaborated;
    std::set<std::string> attr_names;

    while (current_.kind != Tok::rbrace) {
      if (current_.kind != Tok::ident) {
        throw SyntaxError{"expected a declaration, found " +
                              (current_.kind == Tok::end ? std::string("end of input")
                                                         : "'" + current_.text + "'"),
                          current_.line, current_.column};
      }
      const std::string kw = current_.text;
      if (kw == "mandatory" || kw == "optional" || kw == "root") {
        Token keyword = take();
        if (kw == "root") {
          diags_.push_back(error_at("NESTED_ROOT", "'root' is only allowed for the top feature",
                                    keyword.line, keyword.column));
        }
        const Token name = current_;
        const auto v = kw == "optional" ? Variability::optional : Variability::mandatory;
        auto member = members.find(name.text);
        if (member != members.end()) {
          // Elaboration of a group member declared earlier in this block.
          Feature elab = parse_feature(v, keyword, false);
          if (!elaborated.insert(name.text).second) {
            diags_.push_back(error_at("DUPLICATE_FEATURE",
                                      "group member '" + name.text + "' elaborated twice",
                                      name.line, name.column));
            continue;
          }
          if (v == Variability::mandatory) {
            diags_.push_back(error_at("MANDATORY_GROUP_MEMBER",
                                      "member '" + name.text +
                                          "' of an alternative/or group cannot be mandatory",
                                      keyword.line, keyword.column));
          }
          Feature& target = f.groups[member->second.first].children[member->second.second];
          target.cardinality = elab.cardinality;
          target.groups = std::move(elab.groups);
          target.attributes = std::move(elab.attributes);
          continue;
        }
        if (current_.kind == Tok::ident) declare(current_);
        Feature child = parse_feature(v, keyword, false);
        if (f.groups.empty() || f.groups.back().kind != GroupKind::and_) {
          f.groups.push_back(Group{GroupKind::and_, {}});
        }
        f.groups.back().children.push_back(std::move(child));
      } else if (kw == "alternative" || kw == "or") {
        take();
        Group g{kw == "or" ? GroupKind::or_ : GroupKind::alternative, {}};
        expect(Tok::lbrace);
        do {
          Token name = expect(Tok::ident);
          declare(name);
          members.emplace(name.text, std::make_pair(f.groups.size(), g.children.size()));
          Feature child;
          child.name = name.text;
          child.variability = Variability::optional;
          g.children.push_back(std::move(child));
          if (current_.kind != Tok::comma) break;
          take();
        } while (true);
        expect(Tok::rbrace);
        f.groups.push_back(std::move(g));
      } else if (kw == "attribute") {
        take();
        const Token name = current_;
        AttributeDecl a = parse_attribute();
        if (!attr_names.insert(a.name).second) {
          diags_.push_back(error_at("DUPLICATE_ATTRIBUTE",
                                    "attribute '" + a.name + "' declared twice on '" + f.name + "'",
                                    name.line, name.column));
        }
        f.attributes.push_back(std::move(a));
      } else if (kw == "constraint") {
        take();
        PendingConstraint pc;
        pc.lhs = expect(Tok::ident);
        Token kind = expect(Tok::ident);
        if (kind.text == "requires") {
          pc.constraint.kind = ConstraintKind::requires_;
        } else if (kind.text == "excludes") {
          pc.constraint.kind = ConstraintKind::excludes;
        } else {
          throw SyntaxError{"expected 'requires' or 'excludes', found '" + kind.text + "'",
                            kind.line, kind.column};
        }
        pc.rhs = expect(Tok::ident);
        pc.constraint.lhs = pc.lhs.text;
        pc.constraint.rhs = pc.rhs.text;
        constraints_.push_back(std::move(pc));
      } else {
        throw SyntaxError{"unknown declaration '" + kw + "'", current_.line, current_.column};
      }
    }
    expect(Tok::rbrace);
  }

  Lexer lexer_;
  Token current_;
  Diagnostics diags_;
  std::map<std::string, std::pair<int, int>> declared_;
  std::vector<PendingConstraint> constraints_;
};

}  // namespace

ModelParseResult parse_model(std::string_view source) { return Parser(source).run(); }

}  // namespace idpl::fm
