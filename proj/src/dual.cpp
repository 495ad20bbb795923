#include "lie3/dual.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace lie3 {

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

// ---- DualElement ----

DualElement DualElement::basis(const PBWMonomial& z, const CycQ& c) {
    DualElement f;
    f.add(z, c);
    return f;
}

CycQ DualElement::coeff(const PBWMonomial& z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? CycQ() : it->second;
}

void DualElement::add(const PBWMonomial& z, const CycQ& c) {
    if (z.degree() > cutoff_) throw std::invalid_argument("dual label above the cutoff");
    accumulate(terms_, z, c);
}

DualElement& DualElement::operator+=(const DualElement& o) {
    cutoff_ = std::min(cutoff_, o.cutoff_);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->first.degree() > cutoff_ ? terms_.erase(it) : std::next(it);
    for (const auto& [z, c] : o.terms_)
        if (z.degree() <= cutoff_) accumulate(terms_, z, c);
    return *this;
}

DualElement& DualElement::operator-=(const DualElement& o) {
    DualElement neg = o;
    neg *= CycQ(-1);
    return *this += neg;
}

DualElement& DualElement::operator*=(const CycQ& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [z, v] : terms_) v *= c;
    return *this;
}

// ---- DualAlgebra ----

DualAlgebra::DualAlgebra(AlgebraSpec spec, int max_cutoff)
    : H_(std::move(spec)), max_cutoff_(max_cutoff), weights_(homogeneous_weights(H_.spec())) {
    if (max_cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    labels_ = H_.U().pbw_basis(max_cutoff);
    for (const PBWMonomial& z : labels_)
        for (const auto& [ab, c] : H_.coproduct(z).terms()) index_[ab].emplace_back(&z, c);
}

void DualAlgebra::check_cutoff(int cutoff, int a, int b) const {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    if (cutoff > max_cutoff_)
        throw std::invalid_argument("cutoff " + std::to_string(cutoff) +
                                    " exceeds the precomputed range " + std::to_string(max_cutoff_));
    if (cutoff > a || cutoff > b)
        throw std::invalid_argument("cutoff " + std::to_string(cutoff) +
                                    " exceeds the exactness range of an input");
}

Rational DualAlgebra::weight(const PBWMonomial& z) const {
    Rational w = static_cast<long>(z.y_word.size());
    for (std::size_t i = 0; i < z.x_exp.size(); ++i) w += (*weights_)[i] * z.x_exp[i];
    return w;
}

PBWMonomial DualAlgebra::label(std::vector<int> x_exp, Sequence y_word) const {
    if (x_exp.empty()) x_exp.assign(static_cast<std::size_t>(spec().p()), 0);
    if (static_cast<int>(x_exp.size()) != spec().p())
        throw std::invalid_argument("label: exponent vector has the wrong length");
    for (int a : x_exp)
        if (a < 0) throw std::invalid_argument("label: negative exponent");
    for (int j : y_word)
        if (j < 0 || j >= spec().n()) throw std::invalid_argument("label: g1 index out of range");
    if (has_rise(y_word, 3)) throw std::invalid_argument("label: g1 word has a rise of length 3");
    return {std::move(x_exp), std::move(y_word)};
}

DualElement DualAlgebra::unit() const { return DualElement::basis(label({}, {})); }

DualElement DualAlgebra::theta(const Sequence& js) const { return DualElement::basis(label({}, js)); }

DualElement DualAlgebra::alpha(const std::vector<int>& is) const {
    std::vector<int> x(static_cast<std::size_t>(spec().p()), 0);
    for (int i : is) {
        if (i < 0 || i >= spec().p()) throw std::invalid_argument("alpha: g0 index out of range");
        ++x[static_cast<std::size_t>(i)];
    }
    return DualElement::basis(label(std::move(x), {}));
}

CycQ DualAlgebra::pair(const DualElement& f, const Element& u) {
    if (u.max_degree() > f.cutoff())
        throw std::domain_error("pairing: element degree exceeds the functional's cutoff");
    CycQ s;
    for (const auto& [m, c] : u.terms()) s += c * f.coeff(m);
    return s;
}

DualElement DualAlgebra::mul(const DualElement& f, const DualElement& g, int cutoff) {
    check_cutoff(cutoff, f.cutoff(), g.cutoff());
    DualElement out(cutoff);
    for (const auto& [a, ca] : f.terms()) {
        if (a.degree() > cutoff) continue;
        for (const auto& [b, cb] : g.terms()) {
            if (a.degree() + b.degree() > cutoff) continue;
            auto it = index_.find({a, b});
            if (it == index_.end()) continue;
            for (const auto& [z, c] : it->second)
                if (z->degree() <= cutoff) out.add(*z, ca * cb * c);
        }
    }
    return out;
}

DualElement DualAlgebra::mul(const std::vector<DualElement>& fs, int cutoff) {
    if (fs.empty()) return unit();
    DualElement acc = fs.back();
    for (std::size_t k = fs.size() - 1; k-- > 0;) acc = mul(fs[k], acc, cutoff);
    return acc;
}

DualTensor DualAlgebra::coproduct(const DualElement& f, int cutoff) {
    // f must be known on products of two labels of degree <= cutoff
    check_cutoff(cutoff, f.cutoff() == DualElement::kExact ? f.cutoff() : f.cutoff() / 2, max_cutoff_);
    DualTensor out;
    if (f.is_zero()) return out;
    // products preserve the Z3 grade and, when it exists, the weight grading
    std::set<int> grades;
    std::set<Rational> weights;
    for (const auto& [z, c] : f.terms()) {
        grades.insert(z.grade());
        if (weights_) weights.insert(weight(z));
    }
    for (const PBWMonomial& a : labels_) {
        if (a.degree() > cutoff) break;
        for (const PBWMonomial& b : labels_) {
            if (b.degree() > cutoff) break;
            if (!grades.count((a.grade() + b.grade()) % 3)) continue;
            if (weights_ && !weights.count(weight(a) + weight(b))) continue;
            CycQ v = pair(f, H_.U().mul(a, b));
            if (!v.is_zero()) out.emplace(std::make_pair(a, b), v);
        }
    }
    return out;
}

CycQ DualAlgebra::counit(const DualElement& f) {
    for (const auto& [z, c] : f.terms())
        if (z.is_unit()) return c;
    return CycQ();
}

DualElement DualAlgebra::antipode(const DualElement& f, int cutoff) {
    check_cutoff(cutoff, f.cutoff(), max_cutoff_);
    DualElement out(cutoff);
    for (const PBWMonomial& z : labels_) {
        if (z.degree() > cutoff) break;
        out.add(z, pair(f, H_.antipode(z)));
    }
    return out;
}

DualCheckReport DualAlgebra::three_exterior_check(int cutoff) {
    DualCheckReport r;
    const int n = spec().n(), p = spec().p();
    auto th = [&](int j) { return theta({j}); };
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                ++r.cases;
                std::array<int, 3> idx{a, b, c};
                DualElement total(cutoff);
                // every ordering of the three positions, repeated letters included
                std::array<int, 3> perm{0, 1, 2};
                do {
                    total += mul({th(idx[perm[0]]), th(idx[perm[1]]), th(idx[perm[2]])}, cutoff);
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!total.is_zero()) {
                    const auto& g1 = spec().g1_names();
                    r.failures.push_back("sum over S3 of theta products for (" + g1[a] + "," + g1[b] +
                                         "," + g1[c] + ") = " + render(total));
                }
            }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            ++r.cases;
            DualElement d = mul(alpha({i}), alpha({j}), cutoff) - mul(alpha({j}), alpha({i}), cutoff);
            if (!d.is_zero()) {
                const auto& g0 = spec().g0_names();
                r.failures.push_back("alpha[" + g0[i] + "] and alpha[" + g0[j] +
                                     "] do not commute: " + render(d));
            }
        }
    return r;
}

std::string DualAlgebra::render_label(const PBWMonomial& z) const {
    const Formatter& f = H_.fmt();
    std::string x = f.x_part(z);
    if (x.empty() && z.y_word.empty()) return "eps";
    if (z.y_word.empty()) return "alpha[" + x + "]";
    if (x.empty()) return "theta[" + f.y_list(z.y_word) + "]";
    return "Psi[" + x + " | " + f.y_list(z.y_word) + "]";
}

std::string DualAlgebra::render(const DualElement& g) const {
    std::vector<std::pair<CycQ, std::string>> terms;
    for (const auto& [z, c] : g.terms()) terms.emplace_back(c, render_label(z));
    return Formatter::sum(terms);
}

std::string DualAlgebra::render_machine(const DualElement& g) const {
    std::ostringstream os;
    for (const auto& [z, c] : g.terms()) os << c.str() << '\t' << render_label(z) << '\n';
    return os.str();
}

std::string DualAlgebra::render(const DualTensor& t) const {
    std::vector<std::pair<CycQ, std::string>> terms;
    for (const auto& [ab, c] : t)
        terms.emplace_back(c, "(" + render_label(ab.first) + " ⊗ " + render_label(ab.second) + ")");
    return Formatter::sum(terms);
}

std::string DualAlgebra::render_machine(const DualTensor& t) const {
    std::ostringstream os;
    for (const auto& [ab, c] : t)
        os << c.str() << '\t' << render_label(ab.first) << " ⊗ " << render_label(ab.second) << '\n';
    return os.str();
}

}  // namespace lie3
