#pragma once

#include "lie3/coeff.hpp"
#include "lie3/exterior.hpp"
#include "lie3/structure.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <array>
#include <unordered_map>
#include <vector>

namespace lie3 {

/// One letter of a free word: a g0 generator X_i or a g1 generator Y_j.
struct Letter {
    enum class Kind : std::uint8_t { X, Y };
    Kind kind = Kind::X;
    int index = 0;

    static Letter x(int i) { return {Kind::X, i}; }
    static Letter y(int j) { return {Kind::Y, j}; }
    bool is_y() const { return kind == Kind::Y; }
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using FreeWord = std::vector<Letter>;

/// PBW basis element X_1^{a_1}/a_1! ... X_p^{a_p}/a_p! * Y_{w_1} ... Y_{w_l}
/// with the Y-word free of rises of length 3. Indices are 0-based.
struct PBWMonomial {
    std::vector<int> x_exp;
    Sequence y_word;

    int degree() const;
    /// Z3 grade: number of g1 letters mod 3.
    int grade() const { return static_cast<int>(y_word.size() % 3); }
    bool is_unit() const;

    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Graded lexicographic order: total degree, then x_exp, then y_word.
struct MonomialLess {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const;
};

/// Finite linear combination of PBW monomials; zero coefficients never stored.
class Element {
public:
    using Terms = std::map<PBWMonomial, CycQ, MonomialLess>;

    Element() = default;
    static Element scalar(const CycQ& c, int p);
    static Element monomial(PBWMonomial m, const CycQ& c = CycQ(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of m (zero if absent).
    CycQ coeff(const PBWMonomial& m) const;
    int max_degree() const;

    void add(const PBWMonomial& m, const CycQ& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const CycQ& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const CycQ& c, Element a) { return a *= c; }
    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

enum class Rule : std::uint8_t {
    YX,   ///< Y X -> X Y - [X, Y]
    XX,   ///< X_b X_a -> X_a X_b - [X_a, X_b] for a < b
    YYY,  ///< symmetrizer replacement on a non-decreasing Y triple
};

struct Redex {
    Rule rule;
    std::size_t pos;
    friend bool operator==(const Redex&, const Redex&) = default;
};

using WordComb = std::vector<std::pair<FreeWord, CycQ>>;

/// Words, normal forms and products in the enveloping algebra U(g).
///
/// Normal forms use the deterministic strategy: (1) move the leftmost X that
/// has a Y on its left, (2) sort the X prefix, (3) rewrite the leftmost rise
/// of the Y suffix. Each step lowers (length, #(Y before X) pairs,
/// #X inversions, -lexrank of the Y subsequence) lexicographically, so the
/// recursion terminates. Results are memoized per word; an instance is not
/// safe for concurrent use.
class Enveloping {
public:
    explicit Enveloping(AlgebraSpec spec);

    const AlgebraSpec& spec() const { return spec_; }
    int p() const { return spec_.p(); }
    int n() const { return spec_.n(); }

    /// All positions where one of the three rules applies.
    std::vector<Redex> redexes(const FreeWord& w) const;
    /// The result of rewriting w at a redex (equal to w in U(g)).
    WordComb apply(const FreeWord& w, const Redex& r) const;
    /// The redex chosen by the deterministic strategy, if any.
    std::optional<Redex> leftmost_redex(const FreeWord& w) const;

    Element normalize(const FreeWord& w);
    Element normalize(const WordComb& c);
    Element mul(const Element& u, const Element& v);
    const Element& mul(const PBWMonomial& u, const PBWMonomial& v);

    Element one() const;
    Element gen_x(int i) const;
    Element gen_y(int j) const;
    PBWMonomial unit_monomial() const;

    /// The generator factorization of m: X_1 repeated a_1 times, ..., then the
    /// Y-word. m equals word_of(m) divided by prod a_i!.
    FreeWord word_of(const PBWMonomial& m) const;
    static Rational factorial_product(const PBWMonomial& m);

    /// Is w already a PBW word (X prefix sorted, Y suffix rise-free)?
    bool is_normal(const FreeWord& w) const;
    /// Reads a normal word as (ordinary power) monomial, returning prod a_i!.
    PBWMonomial monomial_of_normal(const FreeWord& w, Rational* factorials) const;

    /// All PBW monomials of total degree <= degree, in MonomialLess order.
    std::vector<PBWMonomial> pbw_basis(int degree) const;
    /// Number of PBW monomials of total degree exactly k, for k = 0..degree.
    std::vector<mpz_class> pbw_graded_dims(int degree) const;

private:
    using Code = std::vector<int>;
    using CodeComb = std::vector<std::pair<Code, CycQ>>;
    struct CodeHash {
        std::size_t operator()(const Code& c) const noexcept;
    };
    struct MonoPairHash {
        std::size_t operator()(const std::pair<PBWMonomial, PBWMonomial>& k) const noexcept;
    };

    Code encode(const FreeWord& w) const;
    FreeWord decode(const Code& c) const;
    bool code_is_y(int c) const { return c >= spec_.p(); }
    std::optional<Redex> leftmost(const Code& w) const;
    CodeComb apply_code(const Code& w, const Redex& r) const;
    const CodeComb& nf(const Code& w);
    Element to_element(const CodeComb& c) const;

    AlgebraSpec spec_;
    std::unordered_map<Code, CodeComb, CodeHash> memo_;
    std::unordered_map<std::pair<PBWMonomial, PBWMonomial>, Element, MonoPairHash> mul_memo_;
};

/// Independent normal-form oracle: spans all free words of degree <= cap,
/// imposes every two-sided consequence u*r*v (deg <= cap) of the defining
/// relations r as rows, and runs exact Gaussian elimination over Q(q) with
/// pivots chosen by a degree-lexicographic order in which non-PBW words lead.
/// Reducing a word against the echelon form leaves only PBW words; any other
/// survivor means the relations do not cut U(g) down to the PBW span and is
/// reported as std::runtime_error.
class EliminationOracle {
public:
    EliminationOracle(const AlgebraSpec& spec, int degree_cap);
    EliminationOracle(const EliminationOracle&) = delete;
    EliminationOracle& operator=(const EliminationOracle&) = delete;

    int degree_cap() const { return cap_; }
    std::size_t rank() const { return pivots_.size(); }
    std::size_t column_count() const { return columns_; }
    /// Throws std::invalid_argument if the word is longer than the cap.
    Element reduce(const FreeWord& w) const;

private:
    using Code = std::vector<int>;
    struct OrderGreater {
        const EliminationOracle* self;
        bool operator()(const Code& a, const Code& b) const;
    };
    using Row = std::vector<std::pair<Code, CycQ>>;  // descending order

    int rank_of(int code) const;
    bool greater(const Code& a, const Code& b) const;
    void insert(Row row);

    AlgebraSpec spec_;
    int cap_;
    std::size_t columns_ = 0;
    std::map<Code, Row, OrderGreater> pivots_;
};

/// Builds a one-shot oracle and reduces w. Throws if |w| > degree_cap.
Element oracle_reduce(const FreeWord& w, const AlgebraSpec& spec, int degree_cap);

/// Weights w(X_i), w(Y_j) (all w(Y_j) = 1) under which every structure
/// constant is homogeneous, if such a rational grading exists. U(g) and the
/// Hopf operations then preserve total weight.
std::optional<std::vector<Rational>> homogeneous_weights(const AlgebraSpec& spec);

}  // namespace lie3
