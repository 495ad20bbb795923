#pragma once

#include "lie3/enveloping.hpp"
#include "lie3/format.hpp"

#include <array>
#include <map>
#include <string>
#include <unordered_map>

namespace lie3 {

struct MonomialPairLess {
    bool operator()(const std::pair<PBWMonomial, PBWMonomial>& a,
                    const std::pair<PBWMonomial, PBWMonomial>& b) const;
};

/// Element of U(g) (x) U(g); zero coefficients never stored.
class TensorElement {
public:
    using Key = std::pair<PBWMonomial, PBWMonomial>;
    using Terms = std::map<Key, CycQ, MonomialPairLess>;

    static TensorElement pure(const Element& a, const Element& b);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    CycQ coeff(const PBWMonomial& a, const PBWMonomial& b) const;

    void add(const PBWMonomial& a, const PBWMonomial& b, const CycQ& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const CycQ& c);
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    Terms terms_;
};

struct MonomialTripleLess {
    bool operator()(const std::array<PBWMonomial, 3>& a, const std::array<PBWMonomial, 3>& b) const;
};

/// Three-leg tensors, used by the coassociativity check.
using Tensor3 = std::map<std::array<PBWMonomial, 3>, CycQ, MonomialTripleLess>;

/// Outcome of an axiom check over a set of PBW monomials.
struct AxiomReport {
    struct Failure {
        PBWMonomial monomial;
        std::string residual;
    };
    std::string name;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
};

/// Per-monomial result of the antipode probe.
struct AntipodeEntry {
    PBWMonomial monomial;
    Element left_residual;   ///< m(S (x) id)Delta(u) - eps(u) 1
    Element right_residual;  ///< m(id (x) S)Delta(u) - eps(u) 1
    bool passed() const { return left_residual.is_zero() && right_residual.is_zero(); }
};

struct AntipodeReport {
    std::vector<AntipodeEntry> entries;
    bool passed() const;
    std::vector<const AntipodeEntry*> failures() const;
};

/// The Z3-twisted Hopf structure on U(g):
///   (a (x) c)(b (x) d) = q^{|b||c|} ab (x) cd,
///   Delta(G) = G (x) 1 + 1 (x) G, eps(G) = 0, S(G) = -G on generators.
/// Delta and S of a PBW monomial come from its generator factorization;
/// results are cached. Not safe for concurrent use.
class HopfAlgebra {
public:
    explicit HopfAlgebra(AlgebraSpec spec);
    HopfAlgebra(const HopfAlgebra&) = delete;
    HopfAlgebra& operator=(const HopfAlgebra&) = delete;

    Enveloping& U() { return U_; }
    const AlgebraSpec& spec() const { return U_.spec(); }
    const Formatter& fmt() const { return fmt_; }

    TensorElement twisted_mul(const TensorElement& s, const TensorElement& t);
    TensorElement coproduct(const Element& u);
    const TensorElement& coproduct(const PBWMonomial& m);
    static CycQ counit(const Element& u);
    Element antipode(const Element& u);
    const Element& antipode(const PBWMonomial& m);

    bool check_primitive(const Element& u);

    AxiomReport check_coassoc(int degree);
    /// (eps (x) id)Delta = id and (id (x) eps)Delta = id.
    AxiomReport check_counit(int degree);
    /// |A| + |B| = |Z| mod 3 for every term A (x) B of Delta(Z).
    AxiomReport check_grading(int degree);
    AntipodeReport check_antipode(int degree);

    std::string render(const TensorElement& t) const;
    std::string render_machine(const TensorElement& t) const;

private:
    Enveloping U_;
    Formatter fmt_;
    std::map<PBWMonomial, TensorElement, MonomialLess> delta_cache_;
    std::map<PBWMonomial, Element, MonomialLess> s_cache_;
};

}  // namespace lie3
