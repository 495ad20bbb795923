#pragma once

#include "lie3/enveloping.hpp"
#include "support.hpp"

namespace lie3::testing {

// g0 = {H, Z}, g1 = {A, B}: [H,A] = A, [H,B] = -2B, {A,A,B} = Z, Z central.
inline AlgebraSpec two_plus_two() {
    AlgebraSpec s({"H", "Z"}, {"A", "B"});
    s.set_action(0, 0, {{0, CycQ(1)}});
    s.set_action(0, 1, {{1, CycQ(-2)}});
    s.set_triple(0, 0, 1, {{1, CycQ(1)}});
    return s;
}

inline FreeWord random_word(const AlgebraSpec& s, int len) {
    FreeWord w;
    for (int k = 0; k < len; ++k) {
        int c = uniform(0, s.p() + s.n() - 1);
        w.push_back(c < s.p() ? Letter::x(c) : Letter::y(c - s.p()));
    }
    return w;
}

inline std::vector<FreeWord> all_words(const AlgebraSpec& s, int max_len) {
    std::vector<FreeWord> out{FreeWord{}};
    std::vector<FreeWord> layer{FreeWord{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<FreeWord> next;
        for (const auto& w : layer) {
            for (int i = 0; i < s.p(); ++i) {
                next.push_back(w);
                next.back().push_back(Letter::x(i));
            }
            for (int j = 0; j < s.n(); ++j) {
                next.push_back(w);
                next.back().push_back(Letter::y(j));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

inline PBWMonomial mono(int p, std::vector<std::pair<int, int>> x, Sequence y = {}) {
    PBWMonomial m;
    m.x_exp.assign(static_cast<std::size_t>(p), 0);
    for (auto [i, a] : x) m.x_exp[static_cast<std::size_t>(i)] = a;
    m.y_word = std::move(y);
    return m;
}

// Random element with up to `terms` PBW monomials of degree <= max_degree.
inline Element random_element(const std::vector<PBWMonomial>& basis, int terms) {
    Element e;
    for (int t = 0; t < terms; ++t)
        e.add(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))],
              random_cycq());
    return e;
}

}  // namespace lie3::testing
