#include "lie3/enveloping.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lie3 {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_ints(const std::vector<int>& v, std::size_t h = 1469598103934665603ULL) {
    for (int x : v) h = mix(h, static_cast<std::size_t>(x));
    return mix(h, v.size());
}

Rational factorial(int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

template <class Map, class Key>
void accumulate(Map& acc, const Key& k, const CycQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Codes: X_i -> i, Y_j -> p + j.
bool code_is_normal(const std::vector<int>& w, int p) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        bool y0 = w[k] >= p, y1 = w[k + 1] >= p;
        if (y0 && !y1) return false;
        if (!y0 && !y1 && w[k] > w[k + 1]) return false;
        if (k + 2 < w.size() && y0 && y1 && w[k + 2] >= p && w[k] <= w[k + 1] &&
            w[k + 1] <= w[k + 2])
            return false;
    }
    return true;
}

// Normal word -> monomial; *fact receives prod a_i! (word = fact * monomial).
PBWMonomial monomial_from_code(const std::vector<int>& w, int p, Rational* fact) {
    PBWMonomial m;
    m.x_exp.assign(static_cast<std::size_t>(p), 0);
    for (int c : w) {
        if (c < p)
            ++m.x_exp[static_cast<std::size_t>(c)];
        else
            m.y_word.push_back(c - p);
    }
    if (fact) *fact = Enveloping::factorial_product(m);
    return m;
}

std::string code_str(const std::vector<int>& w, const AlgebraSpec& s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) os << '*';
        int c = w[k];
        os << (c < s.p() ? s.g0_names()[static_cast<std::size_t>(c)]
                         : s.g1_names()[static_cast<std::size_t>(c - s.p())]);
    }
    return os.str();
}

}  // namespace

// ---- PBWMonomial / Element ----

int PBWMonomial::degree() const {
    return std::accumulate(x_exp.begin(), x_exp.end(), 0) + static_cast<int>(y_word.size());
}

bool PBWMonomial::is_unit() const {
    return y_word.empty() && std::all_of(x_exp.begin(), x_exp.end(), [](int a) { return a == 0; });
}

bool MonomialLess::operator()(const PBWMonomial& a, const PBWMonomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
    return a.y_word < b.y_word;
}

Element Element::scalar(const CycQ& c, int p) {
    PBWMonomial m;
    m.x_exp.assign(static_cast<std::size_t>(p), 0);
    return monomial(std::move(m), c);
}

Element Element::monomial(PBWMonomial m, const CycQ& c) {
    Element e;
    e.add(m, c);
    return e;
}

CycQ Element::coeff(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycQ() : it->second;
}

int Element::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Element::add(const PBWMonomial& m, const CycQ& c) { accumulate(terms_, m, c); }

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Element& Element::operator*=(const CycQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

// ---- Enveloping ----

Enveloping::Enveloping(AlgebraSpec spec) : spec_(std::move(spec)) {}

std::size_t Enveloping::CodeHash::operator()(const Code& c) const noexcept { return hash_ints(c); }

std::size_t Enveloping::MonoPairHash::operator()(
    const std::pair<PBWMonomial, PBWMonomial>& k) const noexcept {
    std::size_t h = hash_ints(k.first.x_exp);
    h = hash_ints(k.first.y_word, h);
    h = hash_ints(k.second.x_exp, h);
    return hash_ints(k.second.y_word, h);
}

Enveloping::Code Enveloping::encode(const FreeWord& w) const {
    Code c;
    c.reserve(w.size());
    for (const Letter& l : w) {
        int bound = l.is_y() ? n() : p();
        if (l.index < 0 || l.index >= bound)
            throw std::invalid_argument("free word letter index out of range");
        c.push_back(l.is_y() ? p() + l.index : l.index);
    }
    return c;
}

FreeWord Enveloping::decode(const Code& c) const {
    FreeWord w;
    w.reserve(c.size());
    for (int x : c) w.push_back(code_is_y(x) ? Letter::y(x - p()) : Letter::x(x));
    return w;
}

std::vector<Redex> Enveloping::redexes(const FreeWord& w) const {
    Code c = encode(w);
    std::vector<Redex> out;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        bool y0 = code_is_y(c[k]), y1 = code_is_y(c[k + 1]);
        if (y0 && !y1) out.push_back({Rule::YX, k});
        if (!y0 && !y1 && c[k] > c[k + 1]) out.push_back({Rule::XX, k});
        if (k + 2 < c.size() && y0 && y1 && code_is_y(c[k + 2]) && c[k] <= c[k + 1] &&
            c[k + 1] <= c[k + 2])
            out.push_back({Rule::YYY, k});
    }
    return out;
}

std::optional<Redex> Enveloping::leftmost(const Code& c) const {
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (code_is_y(c[k]) && !code_is_y(c[k + 1])) return Redex{Rule::YX, k};
    for (std::size_t k = 0; k + 1 < c.size() && !code_is_y(c[k + 1]); ++k)
        if (c[k] > c[k + 1]) return Redex{Rule::XX, k};
    for (std::size_t k = 0; k + 2 < c.size(); ++k)
        if (code_is_y(c[k]) && c[k] <= c[k + 1] && c[k + 1] <= c[k + 2]) return Redex{Rule::YYY, k};
    return std::nullopt;
}

std::optional<Redex> Enveloping::leftmost_redex(const FreeWord& w) const { return leftmost(encode(w)); }

Enveloping::CodeComb Enveloping::apply_code(const Code& w, const Redex& r) const {
    const std::size_t k = r.pos;
    auto splice = [&](std::size_t len, std::initializer_list<int> mid) {
        Code out(w.begin(), w.begin() + static_cast<long>(k));
        out.insert(out.end(), mid);
        out.insert(out.end(), w.begin() + static_cast<long>(k + len), w.end());
        return out;
    };
    CodeComb out;
    switch (r.rule) {
        case Rule::YX: {
            if (k + 1 >= w.size() || !code_is_y(w[k]) || code_is_y(w[k + 1]))
                throw std::invalid_argument("apply: no YX redex at position");
            int b = w[k] - p(), a = w[k + 1];
            out.emplace_back(splice(2, {a, w[k]}), CycQ(1));
            for (const auto& [c, v] : spec_.action(a, b)) out.emplace_back(splice(2, {p() + c}), -v);
            break;
        }
        case Rule::XX: {
            if (k + 1 >= w.size() || code_is_y(w[k]) || code_is_y(w[k + 1]) || w[k] <= w[k + 1])
                throw std::invalid_argument("apply: no XX redex at position");
            int b = w[k], a = w[k + 1];
            out.emplace_back(splice(2, {a, b}), CycQ(1));
            for (const auto& [c, v] : spec_.bracket00(a, b)) out.emplace_back(splice(2, {c}), -v);
            break;
        }
        case Rule::YYY: {
            if (k + 2 >= w.size() || !code_is_y(w[k]) || !code_is_y(w[k + 1]) ||
                !code_is_y(w[k + 2]) || w[k] > w[k + 1] || w[k + 1] > w[k + 2])
                throw std::invalid_argument("apply: no YYY redex at position");
            std::array<int, 3> win{w[k], w[k + 1], w[k + 2]};
            int distinct = 1;
            while (std::next_permutation(win.begin(), win.end())) {
                ++distinct;
                out.emplace_back(splice(3, {win[0], win[1], win[2]}), CycQ(-1));
            }
            // the S3 sum hits each distinct arrangement 6/distinct times
            CycQ inv_m(Rational(distinct, 6));
            for (const auto& [c, v] : spec_.triple(w[k] - p(), w[k + 1] - p(), w[k + 2] - p()))
                out.emplace_back(splice(3, {c}), v * inv_m);
            break;
        }
    }
    return out;
}

WordComb Enveloping::apply(const FreeWord& w, const Redex& r) const {
    WordComb out;
    for (auto& [c, v] : apply_code(encode(w), r)) out.emplace_back(decode(c), v);
    return out;
}

bool Enveloping::is_normal(const FreeWord& w) const { return code_is_normal(encode(w), p()); }

PBWMonomial Enveloping::monomial_of_normal(const FreeWord& w, Rational* factorials) const {
    Code c = encode(w);
    if (!code_is_normal(c, p())) throw std::invalid_argument("monomial_of_normal: word is not PBW");
    return monomial_from_code(c, p(), factorials);
}

const Enveloping::CodeComb& Enveloping::nf(const Code& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    CodeComb result;
    if (auto r = leftmost(w)) {
        std::map<Code, CycQ> acc;
        for (const auto& [v, c] : apply_code(w, *r))
            for (const auto& [u, cu] : nf(v)) accumulate(acc, u, c * cu);
        result.assign(acc.begin(), acc.end());
    } else {
        result.emplace_back(w, CycQ(1));
    }
    return memo_.emplace(w, std::move(result)).first->second;
}

Element Enveloping::to_element(const CodeComb& c) const {
    Element e;
    Rational f;
    for (const auto& [w, v] : c) {
        PBWMonomial m = monomial_from_code(w, p(), &f);
        e.add(m, v * CycQ(f));
    }
    return e;
}

Element Enveloping::normalize(const FreeWord& w) { return to_element(nf(encode(w))); }

Element Enveloping::normalize(const WordComb& comb) {
    Element e;
    for (const auto& [w, c] : comb) {
        Element part = normalize(w);
        part *= c;
        e += part;
    }
    return e;
}

FreeWord Enveloping::word_of(const PBWMonomial& m) const {
    FreeWord w;
    for (std::size_t i = 0; i < m.x_exp.size(); ++i)
        for (int k = 0; k < m.x_exp[i]; ++k) w.push_back(Letter::x(static_cast<int>(i)));
    for (int j : m.y_word) w.push_back(Letter::y(j));
    return w;
}

Rational Enveloping::factorial_product(const PBWMonomial& m) {
    Rational f = 1;
    for (int a : m.x_exp) f *= factorial(a);
    return f;
}

const Element& Enveloping::mul(const PBWMonomial& u, const PBWMonomial& v) {
    auto key = std::make_pair(u, v);
    if (auto it = mul_memo_.find(key); it != mul_memo_.end()) return it->second;
    FreeWord w = word_of(u);
    FreeWord wv = word_of(v);
    w.insert(w.end(), wv.begin(), wv.end());
    Element e = normalize(w);
    Rational denom = factorial_product(u) * factorial_product(v);
    if (denom != 1) e *= CycQ(Rational(1) / denom);
    return mul_memo_.emplace(std::move(key), std::move(e)).first->second;
}

Element Enveloping::mul(const Element& u, const Element& v) {
    Element out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            CycQ c = ca * cb;
            for (const auto& [m, cm] : mul(a, b).terms()) out.add(m, c * cm);
        }
    return out;
}

PBWMonomial Enveloping::unit_monomial() const {
    PBWMonomial m;
    m.x_exp.assign(static_cast<std::size_t>(p()), 0);
    return m;
}

Element Enveloping::one() const { return Element::monomial(unit_monomial()); }

Element Enveloping::gen_x(int i) const {
    if (i < 0 || i >= p()) throw std::invalid_argument("gen_x: index out of range");
    PBWMonomial m = unit_monomial();
    m.x_exp[static_cast<std::size_t>(i)] = 1;
    return Element::monomial(m);
}

Element Enveloping::gen_y(int j) const {
    if (j < 0 || j >= n()) throw std::invalid_argument("gen_y: index out of range");
    PBWMonomial m = unit_monomial();
    m.y_word = {j};
    return Element::monomial(m);
}

std::vector<PBWMonomial> Enveloping::pbw_basis(int degree) const {
    if (degree < 0) throw std::invalid_argument("pbw_basis: degree must be >= 0");
    std::vector<PBWMonomial> out;
    std::vector<std::vector<Sequence>> roby(static_cast<std::size_t>(degree) + 1);
    for (int j = 0; j <= degree; ++j) {
        if (j == 0)
            roby[0] = {Sequence{}};
        else if (n() > 0)
            for (Sequence s : roby_basis(n(), 3, j)) {
                for (int& x : s) --x;
                roby[static_cast<std::size_t>(j)].push_back(std::move(s));
            }
    }
    std::vector<int> exp(static_cast<std::size_t>(p()), 0);
    // all exponent vectors with sum <= degree
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == exp.size()) {
            int used = degree - left;
            for (int j = 0; j <= degree - used; ++j)
                for (const Sequence& s : roby[static_cast<std::size_t>(j)]) out.push_back({exp, s});
            return;
        }
        for (int a = 0; a <= left; ++a) {
            exp[i] = a;
            self(self, i + 1, left - a);
        }
        exp[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

std::vector<mpz_class> Enveloping::pbw_graded_dims(int degree) const {
    std::vector<mpz_class> dims(static_cast<std::size_t>(degree) + 1, 0);
    for (const PBWMonomial& m : pbw_basis(degree)) ++dims[static_cast<std::size_t>(m.degree())];
    return dims;
}

// ---- EliminationOracle ----

int EliminationOracle::rank_of(int code) const {
    // X_1 < ... < X_p < Y_n < ... < Y_1: every rewrite rule's left side leads
    int p = spec_.p(), n = spec_.n();
    return code < p ? code : p + (n - 1 - (code - p));
}

bool EliminationOracle::greater(const Code& a, const Code& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        int ra = rank_of(a[k]), rb = rank_of(b[k]);
        if (ra != rb) return ra > rb;
    }
    return false;
}

bool EliminationOracle::OrderGreater::operator()(const Code& a, const Code& b) const {
    return self->greater(a, b);
}

void EliminationOracle::insert(Row row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            CycQ inv = row.front().second.inv();
            for (auto& [w, c] : row) c *= inv;
            pivots_.emplace(row.front().first, std::move(row));
            return;
        }
        const Row& piv = it->second;
        CycQ f = row.front().second;
        Row merged;
        merged.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && greater(row[i].first, piv[j].first))) {
                merged.push_back(std::move(row[i++]));
            } else if (i == row.size() || greater(piv[j].first, row[i].first)) {
                merged.emplace_back(piv[j].first, -(f * piv[j].second));
                ++j;
            } else {
                CycQ c = row[i].second - f * piv[j].second;
                if (!c.is_zero()) merged.emplace_back(std::move(row[i].first), std::move(c));
                ++i;
                ++j;
            }
        }
        row = std::move(merged);
    }
}

EliminationOracle::EliminationOracle(const AlgebraSpec& spec, int degree_cap)
    : spec_(spec), cap_(degree_cap), pivots_(OrderGreater{this}) {
    if (degree_cap < 0) throw std::invalid_argument("oracle: degree cap must be >= 0");
    const int p = spec_.p(), n = spec_.n(), letters = p + n;

    // all words by length, up to the cap
    std::vector<std::vector<Code>> words(static_cast<std::size_t>(cap_) + 1);
    words[0] = {Code{}};
    for (int len = 1; len <= cap_; ++len)
        for (const Code& w : words[static_cast<std::size_t>(len) - 1])
            for (int c = 0; c < letters; ++c) {
                Code v = w;
                v.push_back(c);
                words[static_cast<std::size_t>(len)].push_back(std::move(v));
            }
    for (const auto& ws : words) columns_ += ws.size();

    // defining relations as linear combinations of words
    std::vector<std::pair<int, Row>> relations;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            Row r{{{i, j}, CycQ(1)}, {{j, i}, CycQ(-1)}};
            for (const auto& [k, c] : spec_.bracket00(i, j)) r.push_back({{k}, -c});
            relations.emplace_back(2, std::move(r));
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) {
            Row r{{{i, p + j}, CycQ(1)}, {{p + j, i}, CycQ(-1)}};
            for (const auto& [k, c] : spec_.action(i, j)) r.push_back({{p + k}, -c});
            relations.emplace_back(2, std::move(r));
        }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                const std::array<std::array<int, 3>, 6> perms{
                    {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}};
                std::map<Code, CycQ> acc;
                for (const auto& s : perms) accumulate(acc, Code{p + s[0], p + s[1], p + s[2]}, CycQ(1));
                Row r(acc.begin(), acc.end());
                for (const auto& [k, v] : spec_.triple(a, b, c)) r.push_back({{k}, -v});
                relations.emplace_back(3, std::move(r));
            }

    std::vector<Row> rows;
    for (const auto& [deg, rel] : relations)
        for (int lu = 0; lu + deg <= cap_; ++lu)
            for (int lv = 0; lu + lv + deg <= cap_; ++lv)
                for (const Code& u : words[static_cast<std::size_t>(lu)])
                    for (const Code& v : words[static_cast<std::size_t>(lv)]) {
                        std::map<Code, CycQ, OrderGreater> acc(OrderGreater{this});
                        for (const auto& [w, c] : rel) {
                            Code full = u;
                            full.insert(full.end(), w.begin(), w.end());
                            full.insert(full.end(), v.begin(), v.end());
                            accumulate(acc, full, c);
                        }
                        rows.emplace_back(acc.begin(), acc.end());
                    }
    // small leading words first keeps the echelon rows short
    std::sort(rows.begin(), rows.end(), [this](const Row& x, const Row& y) {
        if (x.empty() || y.empty()) return !x.empty() < !y.empty();
        return greater(y.front().first, x.front().first);
    });
    for (Row& r : rows) insert(std::move(r));
}

Element EliminationOracle::reduce(const FreeWord& w) const {
    if (static_cast<int>(w.size()) > cap_)
        throw std::invalid_argument("oracle_reduce: word degree exceeds the cap");
    const int p = spec_.p();
    Code code;
    for (const Letter& l : w) {
        int bound = l.is_y() ? spec_.n() : p;
        if (l.index < 0 || l.index >= bound) throw std::invalid_argument("oracle: letter out of range");
        code.push_back(l.is_y() ? p + l.index : l.index);
    }
    std::map<Code, CycQ, OrderGreater> acc(OrderGreater{this});
    acc.emplace(code, CycQ(1));
    Element out;
    Rational f;
    while (!acc.empty()) {
        auto node = acc.extract(acc.begin());
        const Code& lead = node.key();
        CycQ c = node.mapped();
        if (auto it = pivots_.find(lead); it != pivots_.end()) {
            for (auto t = it->second.begin() + 1; t != it->second.end(); ++t)
                accumulate(acc, t->first, -(c * t->second));
            continue;
        }
        if (!code_is_normal(lead, p))
            throw std::runtime_error("oracle: non-PBW word " + code_str(lead, spec_) +
                                     " survived elimination");
        PBWMonomial m = monomial_from_code(lead, p, &f);
        out.add(m, c * CycQ(f));
    }
    return out;
}

Element oracle_reduce(const FreeWord& w, const AlgebraSpec& spec, int degree_cap) {
    if (static_cast<int>(w.size()) > degree_cap)
        throw std::invalid_argument("oracle_reduce: word degree exceeds the cap");
    return EliminationOracle(spec, degree_cap).reduce(w);
}

// ---- weights ----

std::optional<std::vector<Rational>> homogeneous_weights(const AlgebraSpec& spec) {
    const int p = spec.p();
    // rows: coefficients on w(X_0..X_{p-1}) | constant
    std::vector<std::vector<Rational>> eqs;
    auto eq = [&](std::vector<std::pair<int, int>> terms, int rhs) {
        std::vector<Rational> r(static_cast<std::size_t>(p) + 1, 0);
        for (auto [i, s] : terms) r[static_cast<std::size_t>(i)] += s;
        r[static_cast<std::size_t>(p)] = rhs;
        eqs.push_back(std::move(r));
    };
    for (const auto& [ij, v] : spec.c00())
        for (const auto& [k, c] : v) eq({{ij.first, 1}, {ij.second, 1}, {k, -1}}, 0);
    for (const auto& [ij, v] : spec.c01())
        if (!v.empty()) eq({{ij.first, 1}}, 0);
    for (const auto& [abc, v] : spec.c111())
        for (const auto& [k, c] : v) eq({{k, 1}}, 3);

    // Gauss-Jordan; free variables get weight 0
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int col = 0; col < p && row < eqs.size(); ++col) {
        std::size_t sel = row;
        while (sel < eqs.size() && eqs[sel][static_cast<std::size_t>(col)] == 0) ++sel;
        if (sel == eqs.size()) continue;
        std::swap(eqs[sel], eqs[row]);
        Rational inv = 1 / eqs[row][static_cast<std::size_t>(col)];
        for (auto& x : eqs[row]) x *= inv;
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            if (r == row || eqs[r][static_cast<std::size_t>(col)] == 0) continue;
            Rational f = eqs[r][static_cast<std::size_t>(col)];
            for (std::size_t k = 0; k < eqs[r].size(); ++k) eqs[r][k] -= f * eqs[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < eqs.size(); ++r)
        if (eqs[r][static_cast<std::size_t>(p)] != 0) return std::nullopt;
    std::vector<Rational> w(static_cast<std::size_t>(p), 0);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        w[static_cast<std::size_t>(pivot_col[r])] = eqs[r][static_cast<std::size_t>(p)];
    return w;
}

}  // namespace lie3
