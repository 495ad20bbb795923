#pragma once

#include "lie3/dual.hpp"
#include "lie3/expr.hpp"
#include "lie3/hopf.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lie3::testing {

// The single PBW monomial an expression normalizes to ("1" is the unit).
inline PBWMonomial single(Enveloping& U, const std::string& text) {
    Element e = parse_element(text, U);
    if (e.size() != 1 || e.terms().begin()->second != CycQ(1))
        throw std::logic_error("not a single monomial: " + text);
    return e.terms().begin()->first;
}

using TermSpec = std::tuple<CycQ, std::string, std::string>;

// Sum of c * (A (x) B) with legs written as expressions for single monomials.
inline TensorElement tensor(Enveloping& U, const std::vector<TermSpec>& terms) {
    TensorElement t;
    for (const auto& [c, a, b] : terms) t.add(single(U, a), single(U, b), c);
    return t;
}

inline CycQ qq(long k) { return q_pow(k); }

// Exact check that pairs an expression with a dual element.
inline DualElement dual(const DualAlgebra& D, const std::string& text) { return parse_dual(text, D); }

}  // namespace lie3::testing
