#include "vomas/dsl/compile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

namespace vomas::dsl {

SpecError::SpecError(Kind kind, int line, int column, std::string message, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(kind_name(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string_view kind_name(SpecError::Kind kind) {
  switch (kind) {
    case SpecError::Kind::syntax: return "syntax error";
    case SpecError::Kind::unknown_vo_agent: return "unknown VO agent";
    case SpecError::Kind::type: return "type error";
    case SpecError::Kind::duplicate_name: return "duplicate name";
    case SpecError::Kind::unknown_attribute: return "unknown attribute";
  }
  return "error";
}

namespace {

enum class Tok { name, integer, real, punct, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
  Value number;
};

constexpr int kMaxDepth = 200;

const std::set<std::string, std::less<>> kReserved = {
    "vo",    "watch",  "invariant", "every",  "on_violation", "at_termination", "and",   "or",
    "not",   "true",   "false",     "tick",   "count",        "sum",            "min",   "max",
    "avg",   "forall", "exists",    "approx", "agents",       "within",         "components",
    "largest_component_fraction"};

std::string describe(const Token& t) {
  if (t.type == Tok::end) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      t.begin = pos_;
      if (pos_ >= src_.size()) {
        t.type = Tok::end;
        t.end = pos_;
        out.push_back(std::move(t));
        return out;
      }
      const char c = src_[pos_];
      if (is_name_start(c)) {
        while (pos_ < src_.size() && is_name_char(src_[pos_])) advance();
        t.type = Tok::name;
      } else if (is_digit(c)) {
        lex_number(t);
      } else {
        lex_punct(t);
      }
      t.end = pos_;
      t.text = std::string(src_.substr(t.begin, t.end - t.begin));
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_name_char(char c) { return is_name_start(c) || is_digit(c); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_number(Token& t) {
    bool real = false;
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && is_digit(src_[pos_ + 1])) {
      real = true;
      advance();
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && is_digit(src_[look])) {
        real = true;
        while (pos_ < look) advance();
        while (pos_ < src_.size() && is_digit(src_[pos_])) advance();
      }
    }
    const auto text = src_.substr(t.begin, pos_ - t.begin);
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (real) {
      double d = 0.0;
      auto [ptr, ec] = std::from_chars(first, last, d);
      if (ec != std::errc{} || ptr != last || !std::isfinite(d)) {
        throw SpecError(SpecError::Kind::syntax, t.line, t.column, "real literal '" + std::string(text) + "' out of range");
      }
      t.type = Tok::real;
      t.number = d;
    } else {
      std::int64_t i = 0;
      auto [ptr, ec] = std::from_chars(first, last, i);
      if (ec != std::errc{} || ptr != last) {
        throw SpecError(SpecError::Kind::syntax, t.line, t.column,
                        "integer literal '" + std::string(text) + "' out of range");
      }
      t.type = Tok::integer;
      t.number = i;
    }
  }

  void lex_punct(Token& t) {
    static constexpr std::string_view two[] = {"==", "!=", "<=", ">=", "->"};
    static constexpr std::string_view one = "()[],:=<>+-*/.";
    t.type = Tok::punct;
    for (auto p : two) {
      if (src_.substr(pos_, 2) == p) {
        advance();
        advance();
        return;
      }
    }
    if (one.find(src_[pos_]) != std::string_view::npos) {
      advance();
      return;
    }
    const auto byte = static_cast<unsigned char>(src_[pos_]);
    std::string shown = byte >= 0x20 && byte < 0x7f ? std::string(1, src_[pos_]) : "\\x" + std::to_string(byte);
    throw SpecError(SpecError::Kind::syntax, t.line, t.column, "unexpected character '" + shown + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Typed {
  ExprPtr expr;
  Type type;
};

class Parser {
 public:
  Parser(std::string_view src, const AttributeSchema& schema) : src_(src), schema_(schema) {
    toks_ = Lexer(src).run();
  }

  VomasSpec parse() {
    VomasSpec spec;
    spec.source = std::string(src_);
    std::set<std::string> vo_names, watch_names, invariant_names;

    while (peek().type != Tok::end) {
      const Token t = peek(1);  // the item's name
      if (is_name("vo")) {
        auto vo = parse_vo();
        check_unique(vo_names, vo.name, t);
        spec.vo_agents.push_back(std::move(vo));
      } else if (is_name("watch")) {
        auto w = parse_watch();
        check_unique(watch_names, w.name, t);
        spec.watches.push_back(std::move(w));
      } else if (is_name("invariant")) {
        auto inv = parse_invariant();
        check_unique(invariant_names, inv.name, t);
        spec.invariants.push_back(std::move(inv));
      } else {
        syntax_error({"vo", "watch", "invariant"});
      }
    }

    for (const auto& w : withins_) {
      if (!vo_names.contains(w.name)) {
        throw SpecError(SpecError::Kind::unknown_vo_agent, w.line, w.column,
                        "within(" + w.name + ") references an undeclared VO agent");
      }
    }
    return spec;
  }

 private:
  struct WithinRef {
    std::string name;
    int line;
    int column;
  };

  // ---- token helpers -------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_name(std::string_view n, std::size_t ahead = 0) const {
    return peek(ahead).type == Tok::name && peek(ahead).text == n;
  }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).type == Tok::punct && peek(ahead).text == p;
  }

  [[noreturn]] void syntax_error(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += "; found " + describe(t);
    throw SpecError(SpecError::Kind::syntax, t.line, t.column, msg, std::move(expected));
  }

  [[noreturn]] static void type_error(const Token& at, std::string msg) {
    throw SpecError(SpecError::Kind::type, at.line, at.column, std::move(msg));
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) syntax_error({"'" + std::string(p) + "'"});
    take();
  }
  void expect_keyword(std::string_view k) {
    if (!is_name(k)) syntax_error({"'" + std::string(k) + "'"});
    take();
  }
  std::string expect_identifier(const std::string& what) {
    const Token& t = peek();
    if (t.type != Tok::name || kReserved.contains(t.text)) syntax_error({what});
    return take().text;
  }
  double expect_nonnegative_number(const std::string& what) {
    const Token& t = peek();
    if (t.type != Tok::integer && t.type != Tok::real) syntax_error({what});
    return as_double(take().number);
  }
  Value expect_number_literal(const std::string& what) {
    const Token& t = peek();
    if (t.type != Tok::integer && t.type != Tok::real) syntax_error({what});
    return take().number;
  }

  void check_unique(std::set<std::string>& seen, const std::string& name, const Token& at) {
    if (!seen.insert(name).second) {
      throw SpecError(SpecError::Kind::duplicate_name, at.line, at.column, "'" + name + "' is already declared");
    }
  }

  // ---- items ---------------------------------------------------------------

  VoAgentDef parse_vo() {
    take();  // vo
    VoAgentDef vo;
    vo.name = expect_identifier("VO agent name");
    if (is_name("global")) {
      take();
      vo.placement = VoPlacementGlobal{};
    } else if (is_name("at")) {
      take();
      VoPlacementSpatial s;
      expect_punct("(");
      s.x = expect_nonnegative_number("x coordinate");
      expect_punct(",");
      s.y = expect_nonnegative_number("y coordinate");
      expect_punct(")");
      expect_keyword("radius");
      s.radius = expect_nonnegative_number("radius");
      vo.placement = s;
    } else {
      syntax_error({"'at'", "'global'"});
    }
    if (is_name("kind")) {
      take();
      vo.kind_filter = expect_identifier("agent kind");
    }
    return vo;
  }

  Watch parse_watch() {
    take();  // watch
    Watch w;
    w.name = expect_identifier("watch name");
    expect_punct("=");
    const Token& start = peek();
    auto [expr, type] = parse_expr();
    w.source = slice(start);
    if (type == Type::symbol) type_error(start, "watch '" + w.name + "' must yield a number or boolean, not a symbol");
    w.expr = expr;
    if (is_name("every")) {
      take();
      const Token& p = peek();
      if (p.type != Tok::integer || std::get<std::int64_t>(p.number) < 1) syntax_error({"positive integer period"});
      w.period = std::get<std::int64_t>(take().number);
    }
    return w;
  }

  Invariant parse_invariant() {
    take();  // invariant
    Invariant inv;
    inv.name = expect_identifier("invariant name");
    expect_punct(":");
    if (is_name("at_termination")) {
      take();
      inv.scope = InvariantScope::at_termination;
    }
    const Token& start = peek();
    auto [expr, type] = parse_expr();
    inv.source = slice(start);
    if (type != Type::boolean) {
      type_error(start, "invariant '" + inv.name + "' must be boolean, got " + std::string(type_name(type)));
    }
    inv.predicate = expr;
    if (is_name("on_violation")) {
      const Token policy_tok = take();
      if (is_name("halt") && inv.scope == InvariantScope::at_termination) {
        type_error(policy_tok, "invariant '" + inv.name + "': halt policy needs an every-tick invariant");
      }
      if (is_name("halt")) {
        inv.on_violation = ViolationPolicy::halt;
      } else if (is_name("log")) {
        inv.on_violation = ViolationPolicy::log_only;
      } else {
        syntax_error({"'halt'", "'log'"});
      }
      take();
    }
    return inv;
  }

  // Source text from `start` up to the last consumed token.
  std::string slice(const Token& start) const {
    const Token& last = toks_[pos_ == 0 ? 0 : pos_ - 1];
    if (last.end <= start.begin) return {};
    return std::string(src_.substr(start.begin, last.end - start.begin));
  }

  // ---- expressions ---------------------------------------------------------

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) {
        const Token& t = p.peek();
        throw SpecError(SpecError::Kind::syntax, t.line, t.column, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  Typed parse_expr() { return parse_or(); }

  Typed parse_or() {
    auto lhs = parse_and();
    while (is_name("or")) {
      const Token op = take();
      auto rhs = parse_and();
      lhs = logical(BinaryOp::logical_or, op, lhs, rhs);
    }
    return lhs;
  }

  Typed parse_and() {
    auto lhs = parse_not();
    while (is_name("and")) {
      const Token op = take();
      auto rhs = parse_not();
      lhs = logical(BinaryOp::logical_and, op, lhs, rhs);
    }
    return lhs;
  }

  Typed logical(BinaryOp op, const Token& at, const Typed& lhs, const Typed& rhs) {
    if (lhs.type != Type::boolean || rhs.type != Type::boolean) {
      type_error(at, "'" + at.text + "' expects boolean operands, got " + std::string(type_name(lhs.type)) + " and " +
                         std::string(type_name(rhs.type)));
    }
    return {make_expr(Binary{op, lhs.expr, rhs.expr}, at.line, at.column), Type::boolean};
  }

  Typed parse_not() {
    DepthGuard guard(*this);
    if (is_name("not")) {
      const Token op = take();
      auto operand = parse_not();
      if (operand.type != Type::boolean) {
        type_error(op, "'not' expects a boolean, got " + std::string(type_name(operand.type)));
      }
      return {make_expr(Unary{UnaryOp::logical_not, operand.expr}, op.line, op.column), Type::boolean};
    }
    return parse_comparison();
  }

  std::optional<BinaryOp> comparison_op() const {
    if (peek().type != Tok::punct) return std::nullopt;
    const auto& s = peek().text;
    if (s == "==") return BinaryOp::eq;
    if (s == "!=") return BinaryOp::ne;
    if (s == "<") return BinaryOp::lt;
    if (s == "<=") return BinaryOp::le;
    if (s == ">") return BinaryOp::gt;
    if (s == ">=") return BinaryOp::ge;
    return std::nullopt;
  }

  Typed parse_comparison() {
    auto lhs = parse_additive();
    while (auto op = comparison_op()) {
      const Token at = take();
      auto rhs = parse_additive();
      const bool equality = *op == BinaryOp::eq || *op == BinaryOp::ne;
      if (equality ? lhs.type != rhs.type : (lhs.type != Type::number || rhs.type != Type::number)) {
        type_error(at, "'" + at.text + "' cannot compare " + std::string(type_name(lhs.type)) + " with " +
                           std::string(type_name(rhs.type)));
      }
      lhs = {make_expr(Binary{*op, lhs.expr, rhs.expr}, at.line, at.column), Type::boolean};
    }
    return lhs;
  }

  Typed arithmetic(BinaryOp op, const Token& at, const Typed& lhs, const Typed& rhs) {
    if (lhs.type != Type::number || rhs.type != Type::number) {
      type_error(at, "'" + at.text + "' expects number operands, got " + std::string(type_name(lhs.type)) + " and " +
                         std::string(type_name(rhs.type)));
    }
    return {make_expr(Binary{op, lhs.expr, rhs.expr}, at.line, at.column), Type::number};
  }

  Typed parse_additive() {
    auto lhs = parse_multiplicative();
    while (is_punct("+") || is_punct("-")) {
      const Token at = take();
      auto rhs = parse_multiplicative();
      lhs = arithmetic(at.text == "+" ? BinaryOp::add : BinaryOp::sub, at, lhs, rhs);
    }
    return lhs;
  }

  Typed parse_multiplicative() {
    auto lhs = parse_unary();
    while (is_punct("*") || is_punct("/")) {
      const Token at = take();
      auto rhs = parse_unary();
      lhs = arithmetic(at.text == "*" ? BinaryOp::mul : BinaryOp::div, at, lhs, rhs);
    }
    return lhs;
  }

  Typed parse_unary() {
    DepthGuard guard(*this);
    if (is_punct("-")) {
      const Token at = take();
      auto operand = parse_unary();
      if (operand.type != Type::number) {
        type_error(at, "unary '-' expects a number, got " + std::string(type_name(operand.type)));
      }
      return {make_expr(Unary{UnaryOp::neg, operand.expr}, at.line, at.column), Type::number};
    }
    return parse_atom();
  }

  static std::optional<AggregateFn> aggregate_fn(const std::string& s) {
    if (s == "count") return AggregateFn::count;
    if (s == "sum") return AggregateFn::sum;
    if (s == "min") return AggregateFn::min;
    if (s == "max") return AggregateFn::max;
    if (s == "avg") return AggregateFn::avg;
    if (s == "components") return AggregateFn::components;
    if (s == "largest_component_fraction") return AggregateFn::largest_component_fraction;
    return std::nullopt;
  }

  Typed parse_atom() {
    const Token t = peek();
    switch (t.type) {
      case Tok::integer:
      case Tok::real:
        take();
        return {make_expr(Literal{t.number}, t.line, t.column), Type::number};
      case Tok::punct:
        if (t.text == "(") {
          take();
          auto inner = parse_expr();
          expect_punct(")");
          return inner;
        }
        break;
      case Tok::name:
        return parse_name_atom();
      case Tok::end:
        break;
    }
    syntax_error({"expression"});
  }

  Typed parse_name_atom() {
    const Token t = take();
    const auto& s = t.text;
    if (s == "true" || s == "false") return {make_expr(Literal{Value{s == "true"}}, t.line, t.column), Type::boolean};
    if (s == "tick") return {make_expr(TickRef{}, t.line, t.column), Type::number};
    if (auto fn = aggregate_fn(s)) return parse_aggregate(*fn, t);
    if (s == "forall" || s == "exists") {
      return parse_quantifier(s == "forall" ? QuantifierKind::forall : QuantifierKind::exists, t);
    }
    if (s == "approx") return parse_approx(t);
    if (kReserved.contains(s)) {
      pos_ -= 1;
      syntax_error({"expression"});
    }

    if (is_punct(".")) {
      take();
      const Token attr_tok = peek();
      const std::string attr = expect_identifier("attribute name");
      if (std::find(scopes_.begin(), scopes_.end(), s) == scopes_.end()) {
        throw SpecError(SpecError::Kind::unknown_attribute, t.line, t.column,
                        "'" + s + "' is not a bound agent variable");
      }
      return {make_expr(AttrRef{s, attr}, t.line, t.column), attribute_type(attr, attr_tok)};
    }

    const bool implicit_scope = std::find(scopes_.begin(), scopes_.end(), std::string{}) != scopes_.end();
    if (implicit_scope) {
      if (auto type = schema_.lookup(s)) return {make_expr(AttrRef{"", s}, t.line, t.column), *type};
    }
    return {make_expr(Literal{Value{Symbol{s}}}, t.line, t.column), Type::symbol};
  }

  Type attribute_type(const std::string& attr, const Token& at) const {
    if (auto type = schema_.lookup(attr)) return *type;
    throw SpecError(SpecError::Kind::unknown_attribute, at.line, at.column,
                    "no model kind declares attribute '" + attr + "'");
  }

  SetExpr parse_set() {
    const Token t = peek();
    if (is_name("within")) {
      take();
      expect_punct("(");
      const Token name_tok = peek();
      auto name = expect_identifier("VO agent name");
      expect_punct(")");
      withins_.push_back({name, name_tok.line, name_tok.column});
      return WithinVo{name};
    }
    if (!is_name("agents")) syntax_error({"'agents'", "'within'"});
    take();
    AllAgents all;
    while (is_punct("[")) {
      take();
      const Token attr_tok = peek();
      Filter f;
      f.attr = expect_identifier("attribute name");
      const Type attr_type = attribute_type(f.attr, attr_tok);
      const Token op_tok = peek();
      auto op = comparison_op();
      if (!op) syntax_error({"'=='", "'!='", "'<'", "'<='", "'>'", "'>='"});
      take();
      switch (*op) {
        case BinaryOp::eq: f.op = CompareOp::eq; break;
        case BinaryOp::ne: f.op = CompareOp::ne; break;
        case BinaryOp::lt: f.op = CompareOp::lt; break;
        case BinaryOp::le: f.op = CompareOp::le; break;
        case BinaryOp::gt: f.op = CompareOp::gt; break;
        default: f.op = CompareOp::ge; break;
      }
      const Token lit = peek();
      if (lit.type == Tok::integer || lit.type == Tok::real) {
        f.literal = lit.number;
      } else if (lit.type == Tok::name && (lit.text == "true" || lit.text == "false")) {
        f.literal = lit.text == "true";
      } else if (lit.type == Tok::name && !kReserved.contains(lit.text)) {
        f.literal = Symbol{lit.text};
      } else {
        syntax_error({"literal"});
      }
      take();
      const Type lit_type = type_of(f.literal);
      if (lit_type != attr_type) {
        type_error(lit, "filter on '" + f.attr + "' (" + std::string(type_name(attr_type)) + ") compared with " +
                            std::string(type_name(lit_type)) + " literal");
      }
      if (f.op != CompareOp::eq && f.op != CompareOp::ne && attr_type != Type::number) {
        type_error(op_tok, "ordering filter needs a numeric attribute, '" + f.attr + "' is " +
                               std::string(type_name(attr_type)));
      }
      expect_punct("]");
      all.filters.push_back(std::move(f));
    }
    (void)t;
    return all;
  }

  Typed parse_aggregate(AggregateFn fn, const Token& at) {
    expect_punct("(");
    Aggregate agg{fn, parse_set(), std::nullopt};
    const bool needs_attr = fn == AggregateFn::sum || fn == AggregateFn::min || fn == AggregateFn::max ||
                            fn == AggregateFn::avg;
    if (needs_attr) {
      if (!is_punct(",")) syntax_error({"','"});
      take();
      const Token attr_tok = peek();
      agg.attr = expect_identifier("attribute name");
      const Type t = attribute_type(*agg.attr, attr_tok);
      if (t != Type::number) {
        type_error(attr_tok, std::string(spelling(fn)) + " needs a numeric attribute, '" + *agg.attr + "' is " +
                                 std::string(type_name(t)));
      }
    }
    expect_punct(")");
    return {make_expr(std::move(agg), at.line, at.column), Type::number};
  }

  Typed parse_quantifier(QuantifierKind kind, const Token& at) {
    expect_punct("(");
    auto set = parse_set();
    expect_punct(",");
    std::string binder;
    if (peek().type == Tok::name && is_punct("->", 1)) {
      binder = expect_identifier("agent variable");
      take();  // ->
    }
    scopes_.push_back(binder);
    const Token body_tok = peek();
    auto body = parse_expr();
    scopes_.pop_back();
    if (body.type != Type::boolean) {
      type_error(body_tok, std::string(spelling(kind)) + " body must be boolean, got " +
                               std::string(type_name(body.type)));
    }
    expect_punct(")");
    return {make_expr(Quantifier{kind, std::move(set), binder, body.expr}, at.line, at.column), Type::boolean};
  }

  Typed parse_approx(const Token& at) {
    expect_punct("(");
    const Token a_tok = peek();
    auto a = parse_expr();
    expect_punct(",");
    const Token b_tok = peek();
    auto b = parse_expr();
    expect_punct(",");
    auto eps = expect_number_literal("tolerance literal");
    expect_punct(")");
    if (a.type != Type::number) type_error(a_tok, "approx expects numbers, got " + std::string(type_name(a.type)));
    if (b.type != Type::number) type_error(b_tok, "approx expects numbers, got " + std::string(type_name(b.type)));
    return {make_expr(Approx{a.expr, b.expr, eps}, at.line, at.column), Type::boolean};
  }

  std::string_view src_;
  const AttributeSchema& schema_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<std::string> scopes_;
  std::vector<WithinRef> withins_;
};

}  // namespace

VomasSpec compile_spec(std::string_view text, const AttributeSchema& schema) {
  try {
    return Parser(text, schema).parse();
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(SpecError::Kind::syntax, 1, 1, std::string("internal compiler failure: ") + e.what());
  }
}

VomasSpec compile_spec(std::string_view text) {
  static const AttributeSchema schema = ModelRegistry::builtin().combined_schema();
  return compile_spec(text, schema);
}

}  // namespace vomas::dsl
