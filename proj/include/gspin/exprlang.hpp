#pragma once

#include <memory>
#include <variant>

#include "gspin/field.hpp"

namespace gspin {

// Positioned parse/eval error; columns are 1-based.
struct ExprError : std::runtime_error {
  ExprError(std::string kind, size_t column, const std::string& detail)
      : std::runtime_error(kind + " at column " + std::to_string(column) +
                           (detail.empty() ? "" : ": " + detail)),
        kind(std::move(kind)),
        column(column) {}
  std::string kind;
  size_t column;
};

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := scalar | 'I' | 'd[' name ']@' site | 'r[' name ']@' site
//         | 'U[' name ']V[' name ']' | '(' expr ')' | 'E(' expr ')'
//         | 'star(' expr ')'
// scalar := INT ['/' INT] | 'i' | 'sqrtd'
// site   := INT | INT '/2'
struct ExprNode {
  enum class Kind {
    Sum,      // children with signs
    Product,  // children
    Scalar,
    Unit,      // I
    Delta,     // d[name]@site
    Rho,       // r[name]@site
    Double,    // U[g]V[h]
    Expect,    // E(child)
    Star,      // star(child)
  };
  Kind kind;
  std::vector<std::unique_ptr<ExprNode>> children;
  std::vector<int> signs;  // for Sum: +1/-1 per child
  Scalar scalar;           // for Scalar
  std::string name, name2;
  int site2 = 0;
  size_t column = 0;
};

using ExprAst = std::unique_ptr<ExprNode>;

struct ExprContext {
  const FiniteGroup* group = nullptr;
  const FieldAlgebra* field = nullptr;       // for d/r/I/E
  const BasisAlgebra* double_alg = nullptr;  // for U[..]V[..]
  const ConditionalExpectation* expectation = nullptr;  // for E(...)
};

// Parses and resolves names/sites against the context.
ExprAst parse_expression(const std::string& src, const ExprContext& ctx);

std::string print_expression(const ExprNode& ast);

// Scalar | field element | double element.
using ExprValue = std::variant<Scalar, Element>;

ExprValue eval_expression(const ExprNode& ast, const ExprContext& ctx);

std::string value_to_string(const ExprValue& v, const ExprContext& ctx);

// Renders a field element in parseable syntax (sum of scalar-scaled
// monomials); eval(print(e)) = e.
std::string print_field_element(const Element& e);
// Same for a D(G) element using U[g]V[h] factors.
std::string print_double_element(const Element& e, const FiniteGroup& g);

// Seeded random AST for round-trip property tests.
ExprAst random_expression(const ExprContext& ctx, std::mt19937_64& rng, int depth);

}  // namespace gspin
