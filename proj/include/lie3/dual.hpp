#pragma once

#include "lie3/hopf.hpp"

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace lie3 {

/// A functional on U(g) in the dual PBW basis Psi^Z, known exactly on every
/// label of degree <= cutoff. Finitely supported functionals built from
/// basis labels are exact in every degree (cutoff kExact).
class DualElement {
public:
    using Terms = std::map<PBWMonomial, CycQ, MonomialLess>;
    static constexpr int kExact = INT_MAX;

    explicit DualElement(int cutoff = kExact) : cutoff_(cutoff) {}
    static DualElement basis(const PBWMonomial& z, const CycQ& c = CycQ(1));

    int cutoff() const { return cutoff_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycQ coeff(const PBWMonomial& z) const;

    void add(const PBWMonomial& z, const CycQ& c);
    DualElement& operator+=(const DualElement& o);
    DualElement& operator-=(const DualElement& o);
    DualElement& operator*=(const CycQ& c);
    friend DualElement operator+(DualElement a, const DualElement& b) { return a += b; }
    friend DualElement operator-(DualElement a, const DualElement& b) { return a -= b; }
    friend DualElement operator*(const CycQ& c, DualElement a) { return a *= c; }
    /// Compares coefficients only; cutoffs are not part of the value.
    friend bool operator==(const DualElement& a, const DualElement& b) { return a.terms_ == b.terms_; }

private:
    int cutoff_;
    Terms terms_;
};

/// Coefficients of a dual coproduct on label pairs (A, B).
using DualTensor = std::map<std::pair<PBWMonomial, PBWMonomial>, CycQ, MonomialPairLess>;

struct DualCheckReport {
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Truncated-exact Hopf dual of U(g). Owns the Hopf structure; labels of
/// degree <= max_cutoff are enumerated once and Delta of each label is
/// inverted into an index (A, B) -> [(Z, coefficient of A (x) B in Delta Z)].
/// Both legs of Delta Z have degree <= deg Z, so truncating Z at the cutoff
/// loses nothing. Not safe for concurrent use.
class DualAlgebra {
public:
    DualAlgebra(AlgebraSpec spec, int max_cutoff);

    HopfAlgebra& hopf() { return H_; }
    const AlgebraSpec& spec() const { return H_.spec(); }
    int max_cutoff() const { return max_cutoff_; }
    const std::vector<PBWMonomial>& labels() const { return labels_; }

    PBWMonomial label(std::vector<int> x_exp, Sequence y_word) const;
    DualElement unit() const;
    /// theta^{j1 j2 ...}: the pure g1 label (0-based indices).
    DualElement theta(const Sequence& js) const;
    /// alpha^{i1 i2 ...}: the pure g0 label with x_exp counting each index.
    DualElement alpha(const std::vector<int>& is) const;

    /// f(u); throws std::domain_error if u has degree above f's cutoff.
    static CycQ pair(const DualElement& f, const Element& u);

    /// M(f, g)(Z) = (f (x) g)(Delta Z) for every label of degree <= cutoff.
    /// Throws std::invalid_argument if cutoff exceeds max_cutoff or either
    /// input's cutoff.
    DualElement mul(const DualElement& f, const DualElement& g, int cutoff);
    /// Right-nested product M(f1, M(f2, ...)).
    DualElement mul(const std::vector<DualElement>& fs, int cutoff);
    /// (Delta f)(A (x) B) = f(AB) for label pairs of degree <= cutoff each.
    /// Throws std::invalid_argument unless f is known up to degree 2 * cutoff.
    DualTensor coproduct(const DualElement& f, int cutoff);
    static CycQ counit(const DualElement& f);
    /// (S f)(Z) = f(S Z) for labels of degree <= cutoff.
    DualElement antipode(const DualElement& f, int cutoff);

    /// Symmetrized triple theta products vanish and alpha generators commute.
    DualCheckReport three_exterior_check(int cutoff);

    std::string render_label(const PBWMonomial& z) const;
    std::string render(const DualElement& f) const;
    std::string render_machine(const DualElement& f) const;
    std::string render(const DualTensor& t) const;
    std::string render_machine(const DualTensor& t) const;

    /// Grade bookkeeping on dual labels: theta^j has grade 2.
    static int dual_grade(const PBWMonomial& z) { return static_cast<int>((2 * z.y_word.size()) % 3); }

private:
    using Entry = std::pair<const PBWMonomial*, CycQ>;
    void check_cutoff(int cutoff, int a, int b) const;
    Rational weight(const PBWMonomial& z) const;

    HopfAlgebra H_;
    int max_cutoff_;
    std::vector<PBWMonomial> labels_;
    std::map<std::pair<PBWMonomial, PBWMonomial>, std::vector<Entry>, MonomialPairLess> index_;
    std::optional<std::vector<Rational>> weights_;
};

}  // namespace lie3
