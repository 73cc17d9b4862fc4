#include "dproc/dsl.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dproc/errors.hpp"

namespace dproc {
namespace {

enum class Tok { ident, integer, string, lbrace, rbrace, lparen, rparen, comma, semi, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::string: return "string";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      const std::size_t line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, {}, line, col});
        return out;
      }
      char c = text_[pos_];
      auto single = [&](Tok kind) {
        advance();
        out.push_back({kind, std::string(1, c), line, col});
      };
      switch (c) {
        case '{': single(Tok::lbrace); continue;
        case '}': single(Tok::rbrace); continue;
        case '(': single(Tok::lparen); continue;
        case ')': single(Tok::rparen); continue;
        case ',': single(Tok::comma); continue;
        case ';': single(Tok::semi); continue;
        default: break;
      }
      if (c == '"') {
        out.push_back({Tok::string, read_string(), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          s += text_[pos_];
          advance();
        }
        out.push_back({Tok::integer, std::move(s), line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          s += text_[pos_];
          advance();
        }
        out.push_back({Tok::ident, std::move(s), line, col});
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;  // count UTF-8 code points, not bytes
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string read_string() {
    const std::size_t line = line_, col = col_;
    advance();  // opening quote
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') break;
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
        advance();
        char e = text_[pos_];
        s += e == 'n' ? '\n' : e == 't' ? '\t' : e;
      } else {
        s += text_[pos_];
      }
      advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"') throw SyntaxError("unterminated string", line, col);
    advance();
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string where(const Token& t) { return std::to_string(t.line) + ":" + std::to_string(t.column) + ": "; }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ProcessSpec run() {
    ProcessSpec spec;
    keyword("process");
    spec.name = expect(Tok::ident).text;
    expect(Tok::lbrace);
    keyword("activities");
    expect(Tok::lbrace);
    std::vector<Activity> acts;
    do {
      const Token& num = expect(Tok::integer);
      Activity a;
      a.id = static_cast<ActivityId>(acts.size());
      a.label = normalize_int(num);
      if (peek().kind == Tok::string) a.description = next().text;
      expect(Tok::semi);
      for (const auto& prev : acts) {
        if (prev.label == a.label) throw DuplicateActivityId(where(num) + "duplicate activity " + a.label);
      }
      acts.push_back(std::move(a));
    } while (peek().kind == Tok::integer);
    expect(Tok::rbrace);
    alphabet_ = Alphabet(std::move(acts));

    keyword("constraints");
    expect(Tok::lbrace);
    std::vector<ConstraintTemplate> constraints;
    while (peek().kind != Tok::rbrace) {
      constraints.push_back(constraint());
      expect(Tok::semi);
    }
    expect(Tok::rbrace);
    expect(Tok::rbrace);
    spec.process = make_process(alphabet_, std::move(constraints));

    while (peek().kind != Tok::end) {
      const Token& kw = keyword("stakeholder");
      std::string label = expect(Tok::ident).text;
      for (const auto& prev : spec.stakeholders) {
        if (prev.label == label) throw SyntaxError("duplicate stakeholder " + label, kw.line, kw.column);
      }
      std::string description;
      if (peek().kind == Tok::string) description = next().text;
      expect(Tok::lbrace);
      keyword("prefer");
      Preference preference = disjunction();
      expect(Tok::semi);
      expect(Tok::rbrace);
      spec.stakeholders.push_back({std::move(label), std::move(description), std::move(preference)});
    }
    return spec;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_keyword(std::string_view word) const { return peek().kind == Tok::ident && peek().text == word; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("expected " + expected + ", got " + got, t.line, t.column);
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(std::string(describe(kind)));
    return next();
  }

  const Token& keyword(std::string_view word) {
    if (!at_keyword(word)) fail("'" + std::string(word) + "'");
    return next();
  }

  static std::string normalize_int(const Token& t) {
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{}) throw SyntaxError("integer out of range", t.line, t.column);
    return std::to_string(v);
  }

  ActivityId activity(const Token& t) {
    auto id = alphabet_.find(normalize_int(t));
    if (!id) throw UnknownActivity(where(t) + "unknown activity " + t.text);
    return *id;
  }

  ConstraintTemplate constraint() {
    const Token& name = expect(Tok::ident);
    auto kind = template_from_name(name.text);
    if (!kind) throw SyntaxError("unknown constraint template '" + name.text + "'", name.line, name.column);
    expect(Tok::lparen);
    std::vector<ActivityId> args;
    std::size_t at_least = 1;
    try {
      if (*kind == TemplateKind::choice) {
        if (name.text == "choice") {
          const Token& k = expect(Tok::integer);
          at_least = std::stoull(normalize_int(k));
          expect(Tok::comma);
        }
        expect(Tok::lbrace);
        args.push_back(activity(expect(Tok::integer)));
        while (peek().kind == Tok::comma) {
          next();
          args.push_back(activity(expect(Tok::integer)));
        }
        expect(Tok::rbrace);
      } else {
        if (peek().kind == Tok::lbrace) {
          throw ArityError(std::string(template_name(*kind)) + " does not take an activity set");
        }
        if (peek().kind != Tok::rparen) {
          args.push_back(activity(expect(Tok::integer)));
          while (peek().kind == Tok::comma) {
            next();
            args.push_back(activity(expect(Tok::integer)));
          }
        }
      }
      expect(Tok::rparen);
      return ConstraintTemplate::make(*kind, std::move(args), at_least);
    } catch (const ArityError& e) {
      throw ArityError(where(name) + e.what());
    }
  }

  Preference disjunction() {
    Preference p = conjunction();
    while (at_keyword("or")) {
      next();
      p = Preference::disj(std::move(p), conjunction());
    }
    return p;
  }

  Preference conjunction() {
    Preference p = negation();
    while (at_keyword("and")) {
      next();
      p = Preference::conj(std::move(p), negation());
    }
    return p;
  }

  Preference negation() {
    if (at_keyword("not")) {
      next();
      return Preference::negate(negation());
    }
    if (peek().kind == Tok::lparen) {
      next();
      Preference p = disjunction();
      expect(Tok::rparen);
      return p;
    }
    if (peek().kind != Tok::ident) fail("constraint, 'not' or '('");
    return Preference::of(constraint());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Alphabet alphabet_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

int precedence(const Preference& p) {
  switch (p.op()) {
    case Preference::Op::or_: return 1;
    case Preference::Op::and_: return 2;
    case Preference::Op::not_: return 3;
    case Preference::Op::constraint: return 4;
  }
  return 4;
}

// Left operands may share the parent's level; right operands must bind tighter.
std::string format_pref(const Preference& p, const Alphabet& alphabet, int min_prec) {
  std::string s;
  switch (p.op()) {
    case Preference::Op::constraint:
      s = format_constraint(p.constraint(), alphabet);
      break;
    case Preference::Op::not_:
      s = "not " + format_pref(p.lhs(), alphabet, 3);
      break;
    case Preference::Op::and_:
      s = format_pref(p.lhs(), alphabet, 2) + " and " + format_pref(p.rhs(), alphabet, 3);
      break;
    case Preference::Op::or_:
      s = format_pref(p.lhs(), alphabet, 1) + " or " + format_pref(p.rhs(), alphabet, 2);
      break;
  }
  return precedence(p) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

StakeholderSystem ProcessSpec::system() const { return StakeholderSystem(name, process, stakeholders); }

ProcessSpec parse_spec(std::string_view text) { return Parser(Lexer(text).run()).run(); }

ProcessSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string format_constraint(const ConstraintTemplate& c, const Alphabet& alphabet) {
  std::string out;
  if (c.kind() == TemplateKind::choice) {
    out = c.at_least() == 1 ? "choice1({" : "choice(" + std::to_string(c.at_least()) + ", {";
  } else {
    out = std::string(template_name(c.kind())) + "(";
  }
  for (std::size_t i = 0; i < c.args().size(); ++i) {
    if (i) out += ", ";
    out += alphabet.label(c.args()[i]);
  }
  return out + (c.kind() == TemplateKind::choice ? "})" : ")");
}

std::string format_preference(const Preference& p, const Alphabet& alphabet) {
  return format_pref(p, alphabet, 1);
}

std::string print_spec(const ProcessSpec& spec) {
  const Alphabet& alphabet = spec.process.alphabet();
  std::string out = "process " + spec.name + " {\n  activities {\n";
  for (const auto& a : alphabet.activities()) {
    out += "    " + a.label;
    if (!a.description.empty()) out += " " + quote(a.description);
    out += ";\n";
  }
  out += "  }\n  constraints {\n";
  for (const auto& c : spec.process.constraints()) out += "    " + format_constraint(c, alphabet) + ";\n";
  out += "  }\n}\n";
  for (const auto& s : spec.stakeholders) {
    out += "\nstakeholder " + s.label;
    if (!s.description.empty()) out += " " + quote(s.description);
    out += " {\n  prefer " + format_preference(s.preference, alphabet) + ";\n}\n";
  }
  return out;
}

}  // namespace dproc
