#include "gspin/exprlang.hpp"

#include <cstring>

namespace gspin {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const ExprContext& ctx) : src_(src), ctx_(ctx) {}

  ExprAst parse() {
    skip_ws();
    ExprAst e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) fail("syntax-error", pos_, "trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& kind, size_t at, const std::string& d) {
    throw ExprError(kind, at + 1, d);
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail("syntax-error", pos_, std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }
  bool lookahead_word(const char* w) const {
    return src_.compare(pos_, strlen(w), w) == 0;
  }

  ExprAst parse_expr() {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Sum;
    node->column = pos_ + 1;
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    node->children.push_back(parse_term());
    node->signs.push_back(sign);
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      int s = eat('+') ? 1 : (eat('-'), -1);
      skip_ws();
      node->children.push_back(parse_term());
      node->signs.push_back(s);
      skip_ws();
    }
    if (node->children.size() == 1 && node->signs[0] == 1)
      return std::move(node->children[0]);
    return node;
  }

  ExprAst parse_term() {
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::Product;
    node->column = pos_ + 1;
    node->children.push_back(parse_factor());
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      node->children.push_back(parse_factor());
      skip_ws();
    }
    if (node->children.size() == 1) return std::move(node->children[0]);
    return node;
  }

  std::string parse_name() {
    size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] != ']') ++pos_;
    if (pos_ >= src_.size()) fail("syntax-error", start, "unterminated name");
    std::string name = src_.substr(start, pos_ - start);
    if (name.empty()) fail("syntax-error", start, "empty name");
    return name;
  }

  int resolve_element(const std::string& name, size_t at) {
    if (ctx_.group == nullptr) fail("syntax-error", at, "no group in context");
    int idx = ctx_.group->index_of(name);
    if (idx < 0) fail("unknown-element", at, name);
    return idx;
  }

  long parse_int() {
    size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '-'))
      fail("syntax-error", start, "expected integer");
    return std::stol(src_.substr(start, pos_ - start));
  }

  int parse_site() {
    size_t start = pos_;
    long v = parse_int();
    if (eat('/')) {
      size_t dpos = pos_;
      long den = parse_int();
      if (den != 2) fail("syntax-error", dpos, "sites use halves: k/2");
      return static_cast<int>(v);  // already doubled
    }
    (void)start;
    return static_cast<int>(2 * v);
  }

  void check_site(int site2, bool want_int, size_t at) {
    if (ctx_.field == nullptr) fail("syntax-error", at, "no window in context");
    if (!ctx_.field->window().contains2(site2))
      fail("site-out-of-window", at, site2_name(site2));
    if (want_int && site2 % 2 != 0) fail("syntax-error", at, "d[..] needs an integer site");
    if (!want_int && site2 % 2 == 0) fail("syntax-error", at, "r[..] needs a half site");
  }

  ExprAst parse_factor() {
    skip_ws();
    size_t at = pos_;
    auto node = std::make_unique<ExprNode>();
    node->column = at + 1;
    if (lookahead_word("sqrtd")) {
      pos_ += 5;
      node->kind = ExprNode::Kind::Scalar;
      long rad = ctx_.field != nullptr ? ctx_.field->radicand() : 1;
      node->scalar = Scalar::sqrt_of(rad < 1 ? 1 : rad);
      return node;
    }
    if (lookahead_word("star(")) {
      pos_ += 5;
      node->kind = ExprNode::Kind::Star;
      node->children.push_back(parse_expr());
      skip_ws();
      expect(')');
      return node;
    }
    if (peek() == 'E' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '(') {
      pos_ += 2;
      node->kind = ExprNode::Kind::Expect;
      node->children.push_back(parse_expr());
      skip_ws();
      expect(')');
      return node;
    }
    if (peek() == 'i') {
      // lone imaginary unit; 'i' never starts another token in this grammar
      ++pos_;
      node->kind = ExprNode::Kind::Scalar;
      node->scalar = Scalar::i();
      return node;
    }
    if (peek() == 'I') {
      ++pos_;
      node->kind = ExprNode::Kind::Unit;
      return node;
    }
    if (peek() == 'd' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '[') {
      pos_ += 2;
      size_t name_at = pos_;
      node->kind = ExprNode::Kind::Delta;
      node->name = parse_name();
      resolve_element(node->name, name_at);
      expect(']');
      expect('@');
      size_t site_at = pos_;
      node->site2 = parse_site();
      check_site(node->site2, true, site_at);
      return node;
    }
    if (peek() == 'r' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '[') {
      pos_ += 2;
      size_t name_at = pos_;
      node->kind = ExprNode::Kind::Rho;
      node->name = parse_name();
      resolve_element(node->name, name_at);
      expect(']');
      expect('@');
      size_t site_at = pos_;
      node->site2 = parse_site();
      check_site(node->site2, false, site_at);
      return node;
    }
    if (peek() == 'U' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '[') {
      pos_ += 2;
      size_t name_at = pos_;
      node->kind = ExprNode::Kind::Double;
      node->name = parse_name();
      resolve_element(node->name, name_at);
      expect(']');
      if (!lookahead_word("V[")) fail("syntax-error", pos_, "expected V[..]");
      pos_ += 2;
      size_t name2_at = pos_;
      node->name2 = parse_name();
      resolve_element(node->name2, name2_at);
      expect(']');
      return node;
    }
    if (peek() == '(') {
      ++pos_;
      ExprAst inner = parse_expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long num = parse_int();
      Rational r(num);
      if (eat('/')) {
        long den = parse_int();
        if (den == 0) fail("syntax-error", at, "zero denominator");
        r = frac(num, den);
      }
      node->kind = ExprNode::Kind::Scalar;
      node->scalar = Scalar(r);
      return node;
    }
    fail("syntax-error", at,
         "expected scalar, I, d[..]@site, r[..]@site, U[..]V[..], '(', E( or star(");
  }

  const std::string& src_;
  const ExprContext& ctx_;
  size_t pos_ = 0;
};

std::string scalar_factor_string(const Scalar& s) {
  // Parseable spelling: rationals as p/q, i, sqrtd and products/sums.
  auto rat = [](const Rational& r) { return r.get_str(); };
  std::vector<std::string> terms;
  if (s.re_rat() != 0) terms.push_back(rat(s.re_rat()));
  if (s.im_rat() != 0) terms.push_back(rat(s.im_rat()) + "*i");
  if (s.re_rad() != 0) terms.push_back(rat(s.re_rad()) + "*sqrtd");
  if (s.im_rad() != 0) terms.push_back(rat(s.im_rad()) + "*i*sqrtd");
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    std::string t = terms[k];
    if (k == 0) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  if (terms.size() > 1) return "(" + out + ")";
  // A single negative term still needs wrapping inside products.
  if (!out.empty() && out[0] == '-') return "(" + out + ")";
  return out;
}

}  // namespace

ExprAst parse_expression(const std::string& src, const ExprContext& ctx) {
  Parser p(src, ctx);
  return p.parse();
}

std::string print_expression(const ExprNode& ast) {
  switch (ast.kind) {
    case ExprNode::Kind::Sum: {
      std::string out;
      for (size_t k = 0; k < ast.children.size(); ++k) {
        if (k == 0) {
          if (ast.signs[k] < 0) out += "-";
        } else {
          out += ast.signs[k] < 0 ? " - " : " + ";
        }
        const ExprNode& c = *ast.children[k];
        bool paren = c.kind == ExprNode::Kind::Sum;
        out += paren ? "(" + print_expression(c) + ")" : print_expression(c);
      }
      return out;
    }
    case ExprNode::Kind::Product: {
      std::string out;
      for (size_t k = 0; k < ast.children.size(); ++k) {
        if (k) out += "*";
        const ExprNode& c = *ast.children[k];
        bool paren = c.kind == ExprNode::Kind::Sum;
        out += paren ? "(" + print_expression(c) + ")" : print_expression(c);
      }
      return out;
    }
    case ExprNode::Kind::Scalar:
      return scalar_factor_string(ast.scalar);
    case ExprNode::Kind::Unit:
      return "I";
    case ExprNode::Kind::Delta:
      return "d[" + ast.name + "]@" + site2_name(ast.site2);
    case ExprNode::Kind::Rho:
      return "r[" + ast.name + "]@" + site2_name(ast.site2);
    case ExprNode::Kind::Double:
      return "U[" + ast.name + "]V[" + ast.name2 + "]";
    case ExprNode::Kind::Expect:
      return "E(" + print_expression(*ast.children[0]) + ")";
    case ExprNode::Kind::Star:
      return "star(" + print_expression(*ast.children[0]) + ")";
  }
  return "?";
}

namespace {

struct Evaluator {
  const ExprContext& ctx;

  ExprValue mul(ExprValue a, ExprValue b, size_t col) {
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
      return std::get<Scalar>(a) * std::get<Scalar>(b);
    if (std::holds_alternative<Scalar>(a))
      return std::get<Element>(b) * std::get<Scalar>(a);
    if (std::holds_alternative<Scalar>(b))
      return std::get<Element>(a) * std::get<Scalar>(b);
    const Element& x = std::get<Element>(a);
    const Element& y = std::get<Element>(b);
    if (x.parent() != y.parent())
      throw ExprError("type-mismatch", col, "cannot mix field and double elements");
    return x * y;
  }

  ExprValue add(ExprValue a, ExprValue b, int sign, size_t col) {
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
      Scalar s = std::get<Scalar>(b);
      return sign < 0 ? std::get<Scalar>(a) - s : std::get<Scalar>(a) + s;
    }
    // Promote scalars to multiples of the matching unit.
    if (std::holds_alternative<Scalar>(a)) {
      const Element& e = std::get<Element>(b);
      a = Element::unit(e.parent()) * std::get<Scalar>(a);
    }
    if (std::holds_alternative<Scalar>(b)) {
      const Element& e = std::get<Element>(a);
      b = Element::unit(e.parent()) * std::get<Scalar>(b);
    }
    const Element& x = std::get<Element>(a);
    const Element& y = std::get<Element>(b);
    if (x.parent() != y.parent())
      throw ExprError("type-mismatch", col, "cannot mix field and double elements");
    return sign < 0 ? x - y : x + y;
  }

  ExprValue eval(const ExprNode& n) {
    switch (n.kind) {
      case ExprNode::Kind::Scalar:
        return n.scalar;
      case ExprNode::Kind::Unit:
        if (ctx.field == nullptr)
          throw ExprError("type-mismatch", n.column, "no field algebra in context");
        return Element::unit(ctx.field);
      case ExprNode::Kind::Delta: {
        int g = ctx.group->index_of(n.name);
        return ctx.field->delta_gen(g, n.site2);
      }
      case ExprNode::Kind::Rho: {
        int g = ctx.group->index_of(n.name);
        return ctx.field->rho_gen(g, n.site2);
      }
      case ExprNode::Kind::Double: {
        if (ctx.double_alg == nullptr)
          throw ExprError("type-mismatch", n.column, "no quantum double in context");
        int g = ctx.group->index_of(n.name);
        int h = ctx.group->index_of(n.name2);
        return Element::basis(ctx.double_alg,
                              static_cast<Index>(g) * ctx.group->n + h);
      }
      case ExprNode::Kind::Expect: {
        ExprValue v = eval(*n.children[0]);
        if (!std::holds_alternative<Element>(v))
          throw ExprError("type-mismatch", n.column, "E needs a field element");
        const Element& e = std::get<Element>(v);
        if (ctx.expectation == nullptr || e.parent() != ctx.field)
          throw ExprError("type-mismatch", n.column, "E applies to field elements");
        return ctx.expectation->apply(e);
      }
      case ExprNode::Kind::Star: {
        ExprValue v = eval(*n.children[0]);
        if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v).conj();
        return std::get<Element>(v).star();
      }
      case ExprNode::Kind::Product: {
        ExprValue acc = eval(*n.children[0]);
        for (size_t k = 1; k < n.children.size(); ++k)
          acc = mul(std::move(acc), eval(*n.children[k]), n.children[k]->column);
        return acc;
      }
      case ExprNode::Kind::Sum: {
        ExprValue acc = eval(*n.children[0]);
        if (n.signs[0] < 0) acc = mul(Scalar(-1), std::move(acc), n.column);
        for (size_t k = 1; k < n.children.size(); ++k)
          acc = add(std::move(acc), eval(*n.children[k]), n.signs[k],
                    n.children[k]->column);
        return acc;
      }
    }
    throw ExprError("syntax-error", n.column, "bad node");
  }
};

}  // namespace

ExprValue eval_expression(const ExprNode& ast, const ExprContext& ctx) {
  Evaluator ev{ctx};
  return ev.eval(ast);
}

std::string print_field_element(const Element& e) {
  if (e.is_zero()) return "0*I";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : e.coeffs()) {
    if (!first) out += " + ";
    first = false;
    std::string cs = scalar_factor_string(c);
    std::string mono = e.parent()->label_name(i);
    out += cs == "1" ? mono : cs + "*" + mono;
  }
  return out;
}

std::string print_double_element(const Element& e, const FiniteGroup& g) {
  if (e.is_zero()) return "0*U[" + g.names[g.unit] + "]V[" + g.names[g.unit] + "]";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : e.coeffs()) {
    if (!first) out += " + ";
    first = false;
    std::string cs = scalar_factor_string(c);
    std::string mono = "U[" + g.names[i / g.n] + "]V[" + g.names[i % g.n] + "]";
    out += cs == "1" ? mono : cs + "*" + mono;
  }
  return out;
}

std::string value_to_string(const ExprValue& v, const ExprContext& ctx) {
  if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v).to_string();
  const Element& e = std::get<Element>(v);
  if (e.parent() == ctx.double_alg && ctx.group != nullptr)
    return print_double_element(e, *ctx.group);
  return print_field_element(e);
}

ExprAst random_expression(const ExprContext& ctx, std::mt19937_64& rng, int depth) {
  auto node = std::make_unique<ExprNode>();
  const FiniteGroup& g = *ctx.group;
  const Window& w = ctx.field->window();
  auto rand_site = [&](bool want_int) {
    std::vector<int> c;
    for (int s : w.sites2)
      if ((s % 2 == 0) == want_int) c.push_back(s);
    return c[rng() % c.size()];
  };
  int pick = static_cast<int>(rng() % (depth > 0 ? 7 : 4));
  switch (pick) {
    case 0:
      node->kind = ExprNode::Kind::Delta;
      node->name = g.names[rng() % g.n];
      node->site2 = rand_site(true);
      break;
    case 1:
      node->kind = ExprNode::Kind::Rho;
      node->name = g.names[rng() % g.n];
      node->site2 = rand_site(false);
      break;
    case 2:
      node->kind = ExprNode::Kind::Unit;
      break;
    case 3: {
      node->kind = ExprNode::Kind::Scalar;
      long num = static_cast<long>(rng() % 9) - 4;
      long den = 1 + static_cast<long>(rng() % 4);
      Scalar s(frac(num, den));
      if (rng() % 3 == 0) s += Scalar::i();
      if (rng() % 4 == 0) s += Scalar::sqrt_of(ctx.field->radicand());
      if (s.is_zero()) s = Scalar::one();
      node->scalar = s;
      break;
    }
    case 4: {
      node->kind = rng() % 2 == 0 ? ExprNode::Kind::Sum : ExprNode::Kind::Product;
      size_t kids = 2 + rng() % 2;
      for (size_t k = 0; k < kids; ++k) {
        node->children.push_back(random_expression(ctx, rng, depth - 1));
        node->signs.push_back(rng() % 2 == 0 ? 1 : -1);
      }
      if (node->kind == ExprNode::Kind::Product) node->signs.clear();
      break;
    }
    case 5:
      node->kind = ExprNode::Kind::Expect;
      node->children.push_back(random_expression(ctx, rng, depth - 1));
      break;
    default:
      node->kind = ExprNode::Kind::Star;
      node->children.push_back(random_expression(ctx, rng, depth - 1));
      break;
  }
  return node;
}

}  // namespace gspin
