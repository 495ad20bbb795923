#pragma once

#include "lie3/dual.hpp"
#include "lie3/enveloping.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace lie3 {

/// Syntax or resolution error with a 1-based column.
class ExprError : public std::invalid_argument {
public:
    ExprError(std::size_t column, const std::string& msg)
        : std::invalid_argument("column " + std::to_string(column) + ": " + msg), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// A parsed expression: a linear combination of free words.
struct Expr {
    WordComb terms;
};

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := integer ['/' integer] | 'q' | name ['^' integer]
///           | Prefix '[' s1,s2,... ']' | '(' expr ')'
/// Juxtaposition and '*' are the noncommutative product. name^k is the
/// divided power name^k/k! and is allowed for g0 generators only.
/// Prefix[s1,...] is the word of g1 generators Prefix s1, Prefix s2, ...
/// The identifier q is reserved for the cube root of unity.
Expr parse_expr(std::string_view text, const AlgebraSpec& spec);

/// parse_expr followed by normalization.
Element parse_element(std::string_view text, Enveloping& U);

/// Dual expressions: sums of [scalar '*'] label with labels
///   eps | theta[s1,...] | alpha[x-monomial] | Psi[x-monomial | s1,...]
/// where s_i name g1 generators (suffixes in the Prefix form) and an
/// x-monomial is name['^'k] ('*' name['^'k])*. The result is exact in
/// every degree.
DualElement parse_dual(std::string_view text, const DualAlgebra& D);

}  // namespace lie3
