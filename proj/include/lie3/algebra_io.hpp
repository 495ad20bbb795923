#pragma once

#include "lie3/structure.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace lie3 {

/// Malformed algebra definition. line/column are 1-based, 0 when unknown.
class AlgebraFileError : public std::runtime_error {
public:
    AlgebraFileError(const std::string& msg, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Reads the JSON algebra format:
///   { "g0": [names], "g1": [names],
///     "c00":  [{"left": X, "right": X, "out": [{"gen": X, "coeff": "c"}]}],
///     "c01":  [{"left": X, "right": Y, "out": [{"gen": Y, "coeff": "c"}]}],
///     "c111": [{"left": Y, "mid": Y, "right": Y, "out": [{"gen": X, "coeff": "c"}]}] }
/// A c00 record for (i, j) also sets (j, i) to its negative unless that pair
/// has its own record. Coefficients use the Q(q) text grammar (numbers are
/// accepted too). Well-formedness only: axioms are checked by validate().
AlgebraSpec parse_algebra(std::string_view json_text);
AlgebraSpec load_algebra(const std::string& path);

/// Writes every nonzero structure constant explicitly.
std::string algebra_to_json(const AlgebraSpec& spec);

/// "builtin:NAME" or a file path.
AlgebraSpec resolve_algebra(const std::string& ref);

}  // namespace lie3
