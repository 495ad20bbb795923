#include "lie3/format.hpp"

#include <cctype>
#include <sstream>

namespace lie3 {

namespace {

std::size_t alpha_prefix_len(const std::string& s) {
    std::size_t k = 0;
    while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
    return k;
}

bool negative(const CycQ& c) {
    return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.qc()) < 0);
}

// Coefficient prefix for a non-unit label, sign already stripped.
std::string coeff_prefix(const CycQ& c) {
    if (c.is_one()) return "";
    std::string s = c.str();
    if (c.is_rational() || sgn(c.re()) == 0) return s + "*";
    return "(" + s + ")*";
}

std::string coeff_alone(const CycQ& c) {
    if (c.is_rational() || sgn(c.re()) == 0) return c.str();
    return "(" + c.str() + ")";
}

}  // namespace

Formatter::Formatter(const AlgebraSpec& spec) : spec_(&spec) {
    const auto& names = spec.g1_names();
    if (names.empty()) return;
    std::size_t k = alpha_prefix_len(names[0]);
    std::string pre = names[0].substr(0, k);
    bool ok = !pre.empty();
    for (const auto& nm : names) {
        ok = ok && alpha_prefix_len(nm) == k && nm.compare(0, k, pre) == 0 && nm.size() > k &&
             nm.find_first_of("[],|* ") == std::string::npos;
        if (!ok) break;
        suffix_.push_back(nm.substr(k));
    }
    prefix_form_ = ok;
    if (ok) prefix_ = pre;
    else suffix_.clear();
}

std::string Formatter::x_part(const PBWMonomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < m.x_exp.size(); ++i) {
        if (m.x_exp[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += spec_->g0_names()[i];
        if (m.x_exp[i] > 1) out += "^" + std::to_string(m.x_exp[i]);
    }
    return out;
}

std::string Formatter::y_list(const Sequence& w) const {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ',';
        const auto idx = static_cast<std::size_t>(w[k]);
        out += prefix_form_ ? suffix_[idx] : spec_->g1_names()[idx];
    }
    return out;
}

std::string Formatter::monomial(const PBWMonomial& m) const {
    std::string x = x_part(m);
    std::string y;
    if (m.y_word.size() == 1) {
        y = spec_->g1_names()[static_cast<std::size_t>(m.y_word[0])];
    } else if (!m.y_word.empty()) {
        if (prefix_form_) {
            y = prefix_ + "[" + y_list(m.y_word) + "]";
        } else {
            for (std::size_t k = 0; k < m.y_word.size(); ++k) {
                if (k) y += '*';
                y += spec_->g1_names()[static_cast<std::size_t>(m.y_word[k])];
            }
        }
    }
    if (x.empty() && y.empty()) return "1";
    if (x.empty()) return y;
    if (y.empty()) return x;
    return x + "*" + y;
}

std::string Formatter::sum(const std::vector<std::pair<CycQ, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, label] : terms) {
        bool neg = negative(c);
        CycQ a = neg ? -c : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        out += label == "1" ? coeff_alone(a) : coeff_prefix(a) + label;
    }
    return out;
}

std::string Formatter::element(const Element& e) const {
    std::vector<std::pair<CycQ, std::string>> terms;
    for (const auto& [m, c] : e.terms()) terms.emplace_back(c, monomial(m));
    return sum(terms);
}

std::string Formatter::element_machine(const Element& e) const {
    std::ostringstream os;
    for (const auto& [m, c] : e.terms()) os << c.str() << '\t' << monomial(m) << '\n';
    return os.str();
}

}  // namespace lie3
