#include "lie3/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace lie3 {

bool MonomialPairLess::operator()(const std::pair<PBWMonomial, PBWMonomial>& a,
                                  const std::pair<PBWMonomial, PBWMonomial>& b) const {
    MonomialLess lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
}

bool MonomialTripleLess::operator()(const std::array<PBWMonomial, 3>& a,
                                    const std::array<PBWMonomial, 3>& b) const {
    MonomialLess lt;
    for (int k = 0; k < 3; ++k) {
        if (lt(a[k], b[k])) return true;
        if (lt(b[k], a[k])) return false;
    }
    return false;
}

namespace {

template <class Map, class Key>
void accumulate(Map& acc, const Key& k, const CycQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

// ---- TensorElement ----

TensorElement TensorElement::pure(const Element& a, const Element& b) {
    TensorElement t;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add(ma, mb, ca * cb);
    return t;
}

CycQ TensorElement::coeff(const PBWMonomial& a, const PBWMonomial& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? CycQ() : it->second;
}

void TensorElement::add(const PBWMonomial& a, const PBWMonomial& b, const CycQ& c) {
    accumulate(terms_, Key{a, b}, c);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const CycQ& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

// ---- reports ----

bool AntipodeReport::passed() const {
    for (const auto& e : entries)
        if (!e.passed()) return false;
    return true;
}

std::vector<const AntipodeEntry*> AntipodeReport::failures() const {
    std::vector<const AntipodeEntry*> out;
    for (const auto& e : entries)
        if (!e.passed()) out.push_back(&e);
    return out;
}

// ---- HopfAlgebra ----

HopfAlgebra::HopfAlgebra(AlgebraSpec spec) : U_(std::move(spec)), fmt_(U_.spec()) {}

TensorElement HopfAlgebra::twisted_mul(const TensorElement& s, const TensorElement& t) {
    TensorElement out;
    for (const auto& [ac, x] : s.terms()) {
        const auto& [a, c] = ac;
        for (const auto& [bd, y] : t.terms()) {
            const auto& [b, d] = bd;
            CycQ coef = x * y * q_pow(static_cast<long>(b.grade()) * c.grade());
            const Element& ab = U_.mul(a, b);
            const Element& cd = U_.mul(c, d);
            for (const auto& [m1, c1] : ab.terms())
                for (const auto& [m2, c2] : cd.terms()) out.add(m1, m2, coef * c1 * c2);
        }
    }
    return out;
}

const TensorElement& HopfAlgebra::coproduct(const PBWMonomial& m) {
    if (auto it = delta_cache_.find(m); it != delta_cache_.end()) return it->second;
    const FreeWord w = U_.word_of(m);
    const std::size_t k = w.size();
    // expand prod_i (g_i (x) 1 + 1 (x) g_i); putting g_j on the left after
    // Y letters already on the right costs one power of q per such pair
    std::map<std::pair<FreeWord, FreeWord>, CycQ> split;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        FreeWord left, right;
        long phase = 0, y_right = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (mask >> j & 1U) {
                right.push_back(w[j]);
                y_right += w[j].is_y();
            } else {
                left.push_back(w[j]);
                if (w[j].is_y()) phase += y_right;
            }
        }
        accumulate(split, std::make_pair(std::move(left), std::move(right)), q_pow(phase));
    }
    TensorElement out;
    CycQ scale(Rational(1) / Enveloping::factorial_product(m));
    for (const auto& [lr, c] : split) {
        Element l = U_.normalize(lr.first);
        Element r = U_.normalize(lr.second);
        for (const auto& [ml, cl] : l.terms())
            for (const auto& [mr, cr] : r.terms()) out.add(ml, mr, scale * c * cl * cr);
    }
    return delta_cache_.emplace(m, std::move(out)).first->second;
}

TensorElement HopfAlgebra::coproduct(const Element& u) {
    TensorElement out;
    for (const auto& [m, c] : u.terms()) {
        TensorElement d = coproduct(m);
        d *= c;
        out += d;
    }
    return out;
}

CycQ HopfAlgebra::counit(const Element& u) {
    for (const auto& [m, c] : u.terms())
        if (m.is_unit()) return c;
    return CycQ();
}

const Element& HopfAlgebra::antipode(const PBWMonomial& m) {
    if (auto it = s_cache_.find(m); it != s_cache_.end()) return it->second;
    FreeWord w = U_.word_of(m);
    const long k = static_cast<long>(w.size());
    const long y = static_cast<long>(m.y_word.size());
    std::reverse(w.begin(), w.end());
    Element e = U_.normalize(w);
    CycQ c = q_pow(y * (y - 1) / 2) * CycQ(Rational(1) / Enveloping::factorial_product(m));
    e *= (k % 2 ? -c : c);
    return s_cache_.emplace(m, std::move(e)).first->second;
}

Element HopfAlgebra::antipode(const Element& u) {
    Element out;
    for (const auto& [m, c] : u.terms()) {
        Element s = antipode(m);
        s *= c;
        out += s;
    }
    return out;
}

bool HopfAlgebra::check_primitive(const Element& u) {
    Element one = U_.one();
    TensorElement expect = TensorElement::pure(u, one);
    expect += TensorElement::pure(one, u);
    return coproduct(u) == expect;
}

namespace {

std::string render3(const Tensor3& t, const Formatter& f) {
    std::vector<std::pair<CycQ, std::string>> terms;
    for (const auto& [k, c] : t)
        terms.emplace_back(c, "(" + f.monomial(k[0]) + " ⊗ " + f.monomial(k[1]) + " ⊗ " +
                                  f.monomial(k[2]) + ")");
    return Formatter::sum(terms);
}

}  // namespace

AxiomReport HopfAlgebra::check_coassoc(int degree) {
    AxiomReport r{"coassociativity", 0, {}};
    for (const PBWMonomial& m : U_.pbw_basis(degree)) {
        ++r.cases;
        const TensorElement d = coproduct(m);
        Tensor3 diff;
        for (const auto& [ab, c] : d.terms()) {
            for (const auto& [a12, c1] : coproduct(ab.first).terms())
                accumulate(diff, std::array<PBWMonomial, 3>{a12.first, a12.second, ab.second}, c * c1);
            for (const auto& [b12, c2] : coproduct(ab.second).terms())
                accumulate(diff, std::array<PBWMonomial, 3>{ab.first, b12.first, b12.second}, -(c * c2));
        }
        if (!diff.empty()) r.failures.push_back({m, render3(diff, fmt_)});
    }
    return r;
}

AxiomReport HopfAlgebra::check_counit(int degree) {
    AxiomReport r{"counit", 0, {}};
    for (const PBWMonomial& m : U_.pbw_basis(degree)) {
        ++r.cases;
        Element left, right;
        for (const auto& [ab, c] : coproduct(m).terms()) {
            if (ab.first.is_unit()) left.add(ab.second, c);
            if (ab.second.is_unit()) right.add(ab.first, c);
        }
        Element self = Element::monomial(m);
        if (left != self) r.failures.push_back({m, "(eps x id): " + fmt_.element(left - self)});
        if (right != self) r.failures.push_back({m, "(id x eps): " + fmt_.element(right - self)});
    }
    return r;
}

AxiomReport HopfAlgebra::check_grading(int degree) {
    AxiomReport r{"grading", 0, {}};
    for (const PBWMonomial& m : U_.pbw_basis(degree)) {
        ++r.cases;
        for (const auto& [ab, c] : coproduct(m).terms())
            if ((ab.first.grade() + ab.second.grade()) % 3 != m.grade()) {
                r.failures.push_back({m, fmt_.monomial(ab.first) + " ⊗ " + fmt_.monomial(ab.second)});
                break;
            }
    }
    return r;
}

AntipodeReport HopfAlgebra::check_antipode(int degree) {
    AntipodeReport r;
    for (const PBWMonomial& m : U_.pbw_basis(degree)) {
        AntipodeEntry e{m, {}, {}};
        for (const auto& [ab, c] : coproduct(m).terms()) {
            Element l = U_.mul(antipode(ab.first), Element::monomial(ab.second));
            Element rr = U_.mul(Element::monomial(ab.first), antipode(ab.second));
            l *= c;
            rr *= c;
            e.left_residual += l;
            e.right_residual += rr;
        }
        if (m.is_unit()) {
            e.left_residual -= U_.one();
            e.right_residual -= U_.one();
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

std::string HopfAlgebra::render(const TensorElement& t) const {
    std::vector<std::pair<CycQ, std::string>> terms;
    for (const auto& [ab, c] : t.terms())
        terms.emplace_back(c, "(" + fmt_.monomial(ab.first) + " ⊗ " + fmt_.monomial(ab.second) + ")");
    return Formatter::sum(terms);
}

std::string HopfAlgebra::render_machine(const TensorElement& t) const {
    std::ostringstream os;
    for (const auto& [ab, c] : t.terms())
        os << c.str() << '\t' << fmt_.monomial(ab.first) << " ⊗ " << fmt_.monomial(ab.second) << '\n';
    return os.str();
}

}  // namespace lie3
