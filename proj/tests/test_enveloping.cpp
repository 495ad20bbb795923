#include "lie3/enveloping.hpp"
#include "algebras.hpp"

#include <doctest.h>

using namespace lie3;
using namespace lie3::testing;

namespace {

Element reduce_randomly(Enveloping& U, const FreeWord& w) {
    auto redexes = U.redexes(w);
    if (redexes.empty()) {
        Rational f;
        PBWMonomial m = U.monomial_of_normal(w, &f);
        return Element::monomial(m, CycQ(f));
    }
    const Redex& r = redexes[static_cast<std::size_t>(uniform(0, static_cast<int>(redexes.size()) - 1))];
    Element out;
    for (const auto& [v, c] : U.apply(w, r)) out += c * reduce_randomly(U, v);
    return out;
}

FreeWord concat(FreeWord a, const FreeWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("V1 V1 V2 in iso3(1,3)") {
    AlgebraSpec s = builtin_iso3(4);
    Enveloping U(s);
    const int P2 = s.g0_index("P2").value();
    Element e = U.normalize({Letter::y(1), Letter::y(1), Letter::y(2)});
    Element expect;
    expect.add(mono(s.p(), {{P2, 1}}), CycQ(Rational(-1, 2)));
    expect.add(mono(s.p(), {}, {1, 2, 1}), CycQ(-1));
    expect.add(mono(s.p(), {}, {2, 1, 1}), CycQ(-1));
    CHECK(e == expect);
    // as a product of V1 with the Roby word (1,2)
    CHECK(U.mul(U.gen_y(1), Element::monomial(mono(s.p(), {}, {1, 2}))) == expect);
}

TEST_CASE("V1 V2 V2 in iso3(1,3)") {
    AlgebraSpec s = builtin_iso3(4);
    Enveloping U(s);
    Element expect;
    expect.add(mono(s.p(), {{s.g0_index("P1").value(), 1}}), CycQ(Rational(-1, 2)));
    expect.add(mono(s.p(), {}, {2, 1, 2}), CycQ(-1));
    expect.add(mono(s.p(), {}, {2, 2, 1}), CycQ(-1));
    CHECK(U.normalize({Letter::y(1), Letter::y(2), Letter::y(2)}) == expect);
}

TEST_CASE("single rules") {
    AlgebraSpec s = builtin_iso3(3);
    Enveloping U(s);
    const int L01 = 0, P0 = s.g0_index("P0").value();
    // X_b X_a = X_a X_b - [X_a, X_b]
    Element e = U.normalize({Letter::x(P0), Letter::x(L01)});
    Element expect = Element::monomial(mono(s.p(), {{L01, 1}, {P0, 1}}));
    for (const auto& [k, c] : s.bracket00(L01, P0)) expect.add(mono(s.p(), {{k, 1}}), -c);
    CHECK(e == expect);
    // Y X = X Y - [X, Y]
    Element f = U.normalize({Letter::y(0), Letter::x(L01)});
    Element expect_f = Element::monomial(mono(s.p(), {{L01, 1}}, {0}));
    for (const auto& [k, c] : s.action(L01, 0)) expect_f.add(mono(s.p(), {}, {k}), -c);
    CHECK(f == expect_f);
    CHECK(f.size() == 2);
}

TEST_CASE("PBW words normalize to themselves up to divided-power factorials") {
    AlgebraSpec s = builtin_iso3(3);
    Enveloping U(s);
    Element e = U.normalize({Letter::x(1), Letter::x(1), Letter::x(1), Letter::x(4), Letter::y(2)});
    CHECK(e == Element::monomial(mono(s.p(), {{1, 3}, {4, 1}}, {2}), CycQ(6)));
    CHECK(U.normalize(FreeWord{}) == U.one());
}

TEST_CASE("defining relations normalize to zero") {
    for (const AlgebraSpec& s : {builtin_iso3(3), builtin_killing_rank1(), two_plus_two()}) {
        Enveloping U(s);
        for (int i = 0; i < s.p(); ++i)
            for (int j = 0; j < s.p(); ++j) {
                WordComb r{{{Letter::x(i), Letter::x(j)}, CycQ(1)}, {{Letter::x(j), Letter::x(i)}, CycQ(-1)}};
                for (const auto& [k, c] : s.bracket00(i, j)) r.push_back({{Letter::x(k)}, -c});
                CHECK(U.normalize(r).is_zero());
            }
        for (int i = 0; i < s.p(); ++i)
            for (int j = 0; j < s.n(); ++j) {
                WordComb r{{{Letter::x(i), Letter::y(j)}, CycQ(1)}, {{Letter::y(j), Letter::x(i)}, CycQ(-1)}};
                for (const auto& [k, c] : s.action(i, j)) r.push_back({{Letter::y(k)}, -c});
                CHECK(U.normalize(r).is_zero());
            }
        for (int a = 0; a < s.n(); ++a)
            for (int b = 0; b < s.n(); ++b)
                for (int c = 0; c < s.n(); ++c) {
                    const int perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
                    WordComb r;
                    for (const auto& t : perm)
                        r.push_back({{Letter::y(t[0]), Letter::y(t[1]), Letter::y(t[2])}, CycQ(1)});
                    for (const auto& [k, v] : s.triple(a, b, c)) r.push_back({{Letter::x(k)}, -v});
                    CHECK(U.normalize(r).is_zero());
                }
    }
}

TEST_CASE("normal forms consist of PBW monomials and are idempotent") {
    AlgebraSpec s = builtin_iso3(3);
    Enveloping U(s);
    for (int t = 0; t < 200; ++t) {
        FreeWord w = random_word(s, uniform(0, 5));
        Element e = U.normalize(w);
        Element again;
        for (const auto& [m, c] : e.terms()) {
            CHECK(U.is_normal(U.word_of(m)));
            CHECK_FALSE(has_rise(m.y_word, 3));
            Element part = U.normalize(U.word_of(m));
            part *= c * CycQ(Rational(1) / Enveloping::factorial_product(m));
            again += part;
        }
        CHECK(again == e);
    }
}

TEST_CASE("strategy independence") {
    for (const AlgebraSpec& s : {builtin_iso3(3), builtin_killing_rank1(), two_plus_two()}) {
        Enveloping U(s);
        for (int t = 0; t < 150; ++t) {
            FreeWord w = random_word(s, uniform(1, 5));
            CHECK(reduce_randomly(U, w) == U.normalize(w));
        }
    }
}

TEST_CASE("associativity on random PBW monomial triples") {
    for (const AlgebraSpec& s : {builtin_iso3(3), builtin_killing_rank1()}) {
        Enveloping U(s);
        auto basis = U.pbw_basis(4);
        auto pick = [&] {
            return basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
        };
        for (int t = 0; t < 60; ++t) {
            Element a = Element::monomial(pick()), b = Element::monomial(pick()),
                    c = Element::monomial(pick());
            CHECK(U.mul(U.mul(a, b), c) == U.mul(a, U.mul(b, c)));
        }
    }
}

TEST_CASE("products of monomials agree with word concatenation") {
    AlgebraSpec s = builtin_iso3(3);
    Enveloping U(s);
    auto basis = U.pbw_basis(3);
    for (int t = 0; t < 100; ++t) {
        const auto& a = basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
        const auto& b = basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))];
        Element e = U.normalize(concat(U.word_of(a), U.word_of(b)));
        e *= CycQ(Rational(1) / (Enveloping::factorial_product(a) * Enveloping::factorial_product(b)));
        CHECK(U.mul(a, b) == e);
        for (const auto& [m, c] : e.terms())
            CHECK((m.grade() - a.grade() - b.grade()) % 3 == 0);
    }
}

TEST_CASE("X-monomial times Roby word is a single PBW monomial") {
    AlgebraSpec s = builtin_iso3(4);
    Enveloping U(s);
    PBWMonomial x = mono(s.p(), {{0, 2}, {7, 1}});
    PBWMonomial y = mono(s.p(), {}, {2, 1, 3, 1});
    PBWMonomial xy = mono(s.p(), {{0, 2}, {7, 1}}, {2, 1, 3, 1});
    CHECK(U.mul(x, y) == Element::monomial(xy));
    CHECK(U.mul(U.one(), Element::monomial(xy)) == Element::monomial(xy));
}

TEST_CASE("pbw basis sizes") {
    AlgebraSpec pure({}, {"Y1", "Y2"});
    Enveloping U(pure);
    auto dims = U.pbw_graded_dims(6);
    for (int k = 0; k <= 6; ++k) CHECK(dims[static_cast<std::size_t>(k)] == roby_dim(2, 3, k));
    CHECK(U.pbw_basis(0).size() == 1);

    Enveloping V(builtin_iso3(3));
    auto basis = V.pbw_basis(3);
    CHECK(std::is_sorted(basis.begin(), basis.end(), MonomialLess{}));
    CHECK(basis.front().is_unit());
}

TEST_CASE("engine agrees with the elimination oracle on all short words") {
    AlgebraSpec s = two_plus_two();
    Enveloping U(s);
    EliminationOracle oracle(s, 4);
    for (const FreeWord& w : all_words(s, 4)) CHECK(oracle.reduce(w) == U.normalize(w));
}

TEST_CASE("oracle basics") {
    AlgebraSpec s = builtin_iso3(4);
    Enveloping U(s);
    FreeWord w{Letter::y(1), Letter::y(1), Letter::y(2)};
    CHECK(oracle_reduce(w, s, 3) == U.normalize(w));
    CHECK(oracle_reduce({Letter::x(3)}, s, 1) == U.gen_x(3));
    CHECK_THROWS_AS(oracle_reduce(w, s, 2), std::invalid_argument);
}

TEST_CASE("homogeneous weights") {
    AlgebraSpec s = builtin_iso3(4);
    auto w = homogeneous_weights(s);
    REQUIRE(w.has_value());
    CHECK((*w)[0] == 0);
    CHECK((*w)[static_cast<std::size_t>(s.g0_index("P0").value())] == 3);
    CHECK(homogeneous_weights(two_plus_two()).has_value());
}
