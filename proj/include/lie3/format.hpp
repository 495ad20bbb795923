#pragma once

#include "lie3/enveloping.hpp"

#include <string>

namespace lie3 {

/// Text rendering of monomials and elements against a spec's generator names.
///
/// X parts print as name or name^k, where name^k means the divided power
/// X^k/k!. Y words of length >= 2 print as Prefix[s1,s2,...] when every g1
/// name is a common alphabetic prefix followed by a nonempty suffix, and as
/// a '*'-product of names otherwise.
class Formatter {
public:
    explicit Formatter(const AlgebraSpec& spec);

    std::string monomial(const PBWMonomial& m) const;
    std::string element(const Element& e) const;
    /// One "coeff<TAB>label" line per term, in monomial order.
    std::string element_machine(const Element& e) const;

    std::string x_part(const PBWMonomial& m) const;
    /// Comma-separated g1 references: suffixes when the prefix form applies.
    std::string y_list(const Sequence& w) const;
    const std::string& y_prefix() const { return prefix_; }
    bool prefix_form() const { return prefix_form_; }

    /// Joins (coefficient, label) pairs as "c1*l1 + c2*l2 - ...". A label "1"
    /// is absorbed into the coefficient.
    static std::string sum(const std::vector<std::pair<CycQ, std::string>>& terms);

private:
    const AlgebraSpec* spec_;
    bool prefix_form_ = false;
    std::string prefix_;
    std::vector<std::string> suffix_;
};

}  // namespace lie3
