#include "lie3/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lie3 {

namespace {

const SparseVec kEmpty{};

void drop_zeros(SparseVec& v) {
    std::erase_if(v, [](const auto& kv) { return kv.second.is_zero(); });
}

SparseVec negated(const SparseVec& v) {
    SparseVec r;
    for (const auto& [k, c] : v) r.emplace(k, -c);
    return r;
}

}  // namespace

void axpy(SparseVec& acc, const CycQ& c, const SparseVec& v) {
    if (c.is_zero()) return;
    for (const auto& [k, x] : v) {
        auto [it, inserted] = acc.try_emplace(k, c * x);
        if (!inserted) {
            it->second += c * x;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

std::string render_vec(const SparseVec& v, const std::vector<std::string>& names) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c << ")*";
        os << names.at(static_cast<std::size_t>(k));
    }
    return os.str();
}

AlgebraSpec::AlgebraSpec(std::vector<std::string> g0, std::vector<std::string> g1)
    : g0_(std::move(g0)), g1_(std::move(g1)) {}

void AlgebraSpec::check_g0(int i) const {
    if (i < 0 || i >= p()) throw std::out_of_range("g0 index out of range: " + std::to_string(i));
}

void AlgebraSpec::check_g1(int j) const {
    if (j < 0 || j >= n()) throw std::out_of_range("g1 index out of range: " + std::to_string(j));
}

void AlgebraSpec::set_bracket00(int i, int j, SparseVec v) {
    check_g0(i);
    check_g0(j);
    for (const auto& kv : v) check_g0(kv.first);
    drop_zeros(v);
    if (i != j && !c00_.contains({j, i})) {
        if (v.empty())
            c00_.erase({j, i});
        else
            c00_[{j, i}] = negated(v);
    }
    if (v.empty())
        c00_.erase({i, j});
    else
        c00_[{i, j}] = std::move(v);
}

void AlgebraSpec::set_bracket00_raw(int i, int j, SparseVec v) {
    check_g0(i);
    check_g0(j);
    for (const auto& kv : v) check_g0(kv.first);
    drop_zeros(v);
    if (v.empty())
        c00_.erase({i, j});
    else
        c00_[{i, j}] = std::move(v);
}

void AlgebraSpec::set_action(int i, int j, SparseVec v) {
    check_g0(i);
    check_g1(j);
    for (const auto& kv : v) check_g1(kv.first);
    drop_zeros(v);
    if (v.empty())
        c01_.erase({i, j});
    else
        c01_[{i, j}] = std::move(v);
}

void AlgebraSpec::set_triple(int a, int b, int c, SparseVec v) {
    check_g1(a);
    check_g1(b);
    check_g1(c);
    for (const auto& kv : v) check_g0(kv.first);
    drop_zeros(v);
    Triple key{a, b, c};
    std::sort(key.begin(), key.end());
    if (v.empty())
        c111_.erase(key);
    else
        c111_[key] = std::move(v);
}

const SparseVec& AlgebraSpec::bracket00(int i, int j) const {
    auto it = c00_.find({i, j});
    return it == c00_.end() ? kEmpty : it->second;
}

const SparseVec& AlgebraSpec::action(int i, int j) const {
    auto it = c01_.find({i, j});
    return it == c01_.end() ? kEmpty : it->second;
}

const SparseVec& AlgebraSpec::triple(int a, int b, int c) const {
    Triple key{a, b, c};
    std::sort(key.begin(), key.end());
    auto it = c111_.find(key);
    return it == c111_.end() ? kEmpty : it->second;
}

std::optional<int> AlgebraSpec::g0_index(const std::string& name) const {
    auto it = std::find(g0_.begin(), g0_.end(), name);
    if (it == g0_.end()) return std::nullopt;
    return static_cast<int>(it - g0_.begin());
}

std::optional<int> AlgebraSpec::g1_index(const std::string& name) const {
    auto it = std::find(g1_.begin(), g1_.end(), name);
    if (it == g1_.end()) return std::nullopt;
    return static_cast<int>(it - g1_.begin());
}

SparseVec AlgebraSpec::bracket00(const SparseVec& x1, const SparseVec& x2) const {
    SparseVec r;
    for (const auto& [i, a] : x1)
        for (const auto& [j, b] : x2) axpy(r, a * b, bracket00(i, j));
    return r;
}

SparseVec AlgebraSpec::action(const SparseVec& x, const SparseVec& y) const {
    SparseVec r;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(r, a * b, action(i, j));
    return r;
}

SparseVec AlgebraSpec::triple(const SparseVec& y1, const SparseVec& y2, const SparseVec& y3) const {
    SparseVec r;
    for (const auto& [a, ca] : y1)
        for (const auto& [b, cb] : y2)
            for (const auto& [c, cc] : y3) axpy(r, ca * cb * cc, triple(a, b, c));
    return r;
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

SparseVec unit(int k) { return SparseVec{{k, CycQ(1)}}; }

void record(CheckResult& r, const SparseVec& residual, const std::vector<std::string>& names,
            const std::string& where) {
    ++r.cases;
    if (residual.empty() || !r.passed) {
        if (!residual.empty()) r.passed = false;
        return;
    }
    r.passed = false;
    r.counterexample = where + ": residual " + render_vec(residual, names);
}

}  // namespace

ValidationReport validate(const AlgebraSpec& s) {
    ValidationReport rep;
    const int p = s.p();
    const int n = s.n();
    const auto& x = s.g0_names();
    const auto& y = s.g1_names();

    CheckResult anti;
    anti.name = kCheckAntisymmetry;
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) {
            SparseVec r = s.bracket00(i, j);
            axpy(r, CycQ(1), s.bracket00(j, i));
            record(anti, r, x, "[" + x[i] + "," + x[j] + "] + [" + x[j] + "," + x[i] + "]");
        }
    rep.checks.push_back(std::move(anti));

    CheckResult jac;
    jac.name = kCheckJacobi;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (int k = 0; k < p; ++k) {
                SparseVec r = s.bracket00(unit(i), s.bracket00(j, k));
                axpy(r, CycQ(1), s.bracket00(unit(j), s.bracket00(k, i)));
                axpy(r, CycQ(1), s.bracket00(unit(k), s.bracket00(i, j)));
                record(jac, r, x, "X=" + x[i] + "," + x[j] + "," + x[k]);
            }
    rep.checks.push_back(std::move(jac));

    CheckResult mod;
    mod.name = kCheckModule;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (int b = 0; b < n; ++b) {
                SparseVec r = s.action(unit(i), s.action(j, b));
                axpy(r, CycQ(-1), s.action(unit(j), s.action(i, b)));
                axpy(r, CycQ(-1), s.action(s.bracket00(i, j), unit(b)));
                record(mod, r, y, "X1=" + x[i] + ", X2=" + x[j] + ", Y=" + y[b]);
            }
    rep.checks.push_back(std::move(mod));

    CheckResult eqv;
    eqv.name = kCheckEquivariance;
    for (int i = 0; i < p; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    SparseVec r = s.bracket00(unit(i), s.triple(a, b, c));
                    axpy(r, CycQ(-1), s.triple(s.action(i, a), unit(b), unit(c)));
                    axpy(r, CycQ(-1), s.triple(unit(a), s.action(i, b), unit(c)));
                    axpy(r, CycQ(-1), s.triple(unit(a), unit(b), s.action(i, c)));
                    record(eqv, r, x, "X=" + x[i] + ", Y=" + y[a] + "," + y[b] + "," + y[c]);
                }
    rep.checks.push_back(std::move(eqv));

    CheckResult fund;
    fund.name = kCheckFundamental;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c)
                for (int d = c; d < n; ++d) {
                    const std::array<int, 4> ys{a, b, c, d};
                    SparseVec r;
                    for (int j = 0; j < 4; ++j) {
                        std::array<int, 3> rest{};
                        for (int k = 0, m = 0; k < 4; ++k)
                            if (k != j) rest[m++] = ys[k];
                        axpy(r, CycQ(1), s.action(s.triple(rest[0], rest[1], rest[2]), unit(ys[j])));
                    }
                    record(fund, r, y, "Y=" + y[a] + "," + y[b] + "," + y[c] + "," + y[d]);
                }
    rep.checks.push_back(std::move(fund));
    return rep;
}

// ---------------------------------------------------------------- matrices

Matrix Matrix::unit(int size, int row, int col) {
    Matrix m(size);
    m(row, col) = CycQ(1);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const CycQ& c) { return c.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    const int n = x.size();
    Matrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x(i, k).is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!y(k, j).is_zero()) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

Matrix operator*(const CycQ& c, Matrix x) {
    for (auto& v : x.a_) v *= c;
    return x;
}

namespace {

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix sym3(const Matrix& a, const Matrix& b, const Matrix& c) {
    return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
}

Matrix image(const SparseVec& v, const std::vector<const Matrix*>& mats, int size) {
    Matrix r(size);
    for (const auto& [k, c] : v) r += c * *mats[static_cast<std::size_t>(k)];
    return r;
}

}  // namespace

ValidationReport check_representation(const AlgebraSpec& s, const MatrixRep& rep) {
    const int size = rep.size();
    auto lookup = [&](const std::string& name) -> const Matrix* {
        auto it = rep.matrices.find(name);
        if (it == rep.matrices.end())
            throw std::invalid_argument("representation has no matrix for generator " + name);
        if (it->second.size() != size)
            throw std::invalid_argument("matrix for " + name + " has size " +
                                        std::to_string(it->second.size()) + ", expected " +
                                        std::to_string(size));
        return &it->second;
    };
    std::vector<const Matrix*> xm, ym;
    for (const auto& nm : s.g0_names()) xm.push_back(lookup(nm));
    for (const auto& nm : s.g1_names()) ym.push_back(lookup(nm));
    const auto& x = s.g0_names();
    const auto& y = s.g1_names();

    ValidationReport out;
    auto note = [](CheckResult& r, const Matrix& residual, const std::string& where) {
        ++r.cases;
        if (!residual.is_zero() && r.passed) {
            r.passed = false;
            r.counterexample = where;
        }
    };

    CheckResult r00;
    r00.name = "rep_bracket00";
    for (int i = 0; i < s.p(); ++i)
        for (int j = 0; j < s.p(); ++j)
            note(r00, image(s.bracket00(i, j), xm, size) - comm(*xm[i], *xm[j]),
                 "rho([" + x[i] + "," + x[j] + "])");
    out.checks.push_back(std::move(r00));

    CheckResult r01;
    r01.name = "rep_action";
    for (int i = 0; i < s.p(); ++i)
        for (int j = 0; j < s.n(); ++j)
            note(r01, image(s.action(i, j), ym, size) - comm(*xm[i], *ym[j]),
                 "rho([" + x[i] + "," + y[j] + "])");
    out.checks.push_back(std::move(r01));

    CheckResult r111;
    r111.name = "rep_triple";
    for (int a = 0; a < s.n(); ++a)
        for (int b = a; b < s.n(); ++b)
            for (int c = b; c < s.n(); ++c)
                note(r111, image(s.triple(a, b, c), xm, size) - sym3(*ym[a], *ym[b], *ym[c]),
                     "rho({" + y[a] + "," + y[b] + "," + y[c] + "})");
    out.checks.push_back(std::move(r111));
    return out;
}

// ---------------------------------------------------------------- builtins

AlgebraSpec builtin_iso3(int D) {
    if (D < 1) throw std::invalid_argument("iso3 needs D >= 1");
    std::vector<std::string> g0, g1;
    // L_{mu nu} for mu < nu, flattened in lexicographic order.
    std::vector<std::vector<int>> lidx(D, std::vector<int>(D, -1));
    for (int m = 0; m < D; ++m)
        for (int v = m + 1; v < D; ++v) {
            lidx[m][v] = static_cast<int>(g0.size());
            g0.push_back("L" + std::to_string(m) + std::to_string(v));
        }
    const int p0 = static_cast<int>(g0.size());
    for (int m = 0; m < D; ++m) g0.push_back("P" + std::to_string(m));
    for (int m = 0; m < D; ++m) g1.push_back("V" + std::to_string(m));

    auto eta = [](int a, int b) { return a != b ? 0 : (a == 0 ? 1 : -1); };
    // L_{ab} as (index, sign); L_{aa} = 0.
    auto add_l = [&](SparseVec& v, int coeff, int a, int b) {
        if (coeff == 0 || a == b) return;
        if (a < b)
            axpy(v, CycQ(coeff), unit(lidx[a][b]));
        else
            axpy(v, CycQ(-coeff), unit(lidx[b][a]));
    };

    AlgebraSpec s(g0, g1);
    std::vector<std::pair<int, int>> ls;
    for (int m = 0; m < D; ++m)
        for (int v = m + 1; v < D; ++v) ls.emplace_back(m, v);

    for (auto [mu, nu] : ls)
        for (auto [rho, sig] : ls) {
            SparseVec r;
            add_l(r, eta(nu, sig), rho, mu);
            add_l(r, -eta(mu, sig), rho, nu);
            add_l(r, eta(nu, rho), mu, sig);
            add_l(r, -eta(mu, rho), nu, sig);
            s.set_bracket00_raw(lidx[mu][nu], lidx[rho][sig], std::move(r));
        }
    for (auto [mu, nu] : ls)
        for (int rho = 0; rho < D; ++rho) {
            SparseVec vp, vv;
            if (eta(nu, rho) != 0) {
                axpy(vp, CycQ(eta(nu, rho)), unit(p0 + mu));
                axpy(vv, CycQ(eta(nu, rho)), unit(mu));
            }
            if (eta(mu, rho) != 0) {
                axpy(vp, CycQ(-eta(mu, rho)), unit(p0 + nu));
                axpy(vv, CycQ(-eta(mu, rho)), unit(nu));
            }
            s.set_bracket00(lidx[mu][nu], p0 + rho, vp);
            s.set_action(lidx[mu][nu], rho, vv);
        }
    for (int a = 0; a < D; ++a)
        for (int b = a; b < D; ++b)
            for (int c = b; c < D; ++c) {
                SparseVec r;
                if (eta(a, b)) axpy(r, CycQ(eta(a, b)), unit(p0 + c));
                if (eta(a, c)) axpy(r, CycQ(eta(a, c)), unit(p0 + b));
                if (eta(c, b)) axpy(r, CycQ(eta(c, b)), unit(p0 + a));
                s.set_triple(a, b, c, std::move(r));
            }
    return s;
}

AlgebraSpec builtin_killing(const std::vector<std::string>& g0_names,
                            const std::vector<std::string>& g1_names,
                            const std::vector<std::vector<SparseVec>>& f,
                            const std::vector<std::vector<CycQ>>& g) {
    const auto d = g0_names.size();
    if (g1_names.size() != d || f.size() != d || g.size() != d)
        throw std::invalid_argument("killing construction: dimension mismatch");
    for (std::size_t a = 0; a < d; ++a) {
        if (f[a].size() != d || g[a].size() != d)
            throw std::invalid_argument("killing construction: dimension mismatch");
        for (std::size_t b = 0; b < d; ++b)
            if (!(g[a][b] == g[b][a]))
                throw std::invalid_argument("killing construction: bilinear form is not symmetric");
    }
    AlgebraSpec s(g0_names, g1_names);
    const int n = static_cast<int>(d);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            s.set_bracket00_raw(a, b, f[a][b]);
            s.set_action(a, b, f[a][b]);
        }
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                SparseVec r;
                axpy(r, g[a][b], unit(c));
                axpy(r, g[a][c], unit(b));
                axpy(r, g[b][c], unit(a));
                s.set_triple(a, b, c, std::move(r));
            }
    return s;
}

AlgebraSpec builtin_killing_rank1() {
    // sl(2): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
    constexpr int H = 0, E = 1, F = 2;
    std::vector<std::vector<SparseVec>> f(3, std::vector<SparseVec>(3));
    f[H][E] = {{E, CycQ(2)}};
    f[E][H] = {{E, CycQ(-2)}};
    f[H][F] = {{F, CycQ(-2)}};
    f[F][H] = {{F, CycQ(2)}};
    f[E][F] = {{H, CycQ(1)}};
    f[F][E] = {{H, CycQ(-1)}};
    // Killing form tr(ad x ad y): (H,H) = 8, (E,F) = (F,E) = 4.
    std::vector<std::vector<CycQ>> g(3, std::vector<CycQ>(3, CycQ(0)));
    g[H][H] = 8;
    g[E][F] = 4;
    g[F][E] = 4;
    return builtin_killing({"H", "E", "F"}, {"AH", "AE", "AF"}, f, g);
}

std::pair<AlgebraSpec, MatrixRep> builtin_matrix_rep(int m1, int m2, int m3) {
    if (m1 < 1 || m2 < 1 || m3 < 1) throw std::invalid_argument("matrix model needs m_i >= 1");
    const std::array<int, 3> dims{m1, m2, m3};
    const std::array<int, 3> off{0, m1, m1 + m2};
    const int size = m1 + m2 + m3;
    auto name = [&](int r, int c) {
        if (size <= 9) return "E" + std::to_string(r + 1) + std::to_string(c + 1);
        return "E" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
    };

    std::vector<std::pair<int, int>> x_pos, y_pos;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < dims[k]; ++i)
            for (int j = 0; j < dims[k]; ++j) x_pos.emplace_back(off[k] + i, off[k] + j);
    // cyclic off-diagonal blocks (0,1), (1,2), (2,0)
    for (int k = 0; k < 3; ++k) {
        int l = (k + 1) % 3;
        for (int i = 0; i < dims[k]; ++i)
            for (int j = 0; j < dims[l]; ++j) y_pos.emplace_back(off[k] + i, off[l] + j);
    }
    std::vector<std::string> g0, g1;
    MatrixRep rep;
    rep.dims = dims;
    std::vector<Matrix> xm, ym;
    for (auto [r, c] : x_pos) {
        g0.push_back(name(r, c));
        xm.push_back(Matrix::unit(size, r, c));
        rep.matrices.emplace(g0.back(), xm.back());
    }
    for (auto [r, c] : y_pos) {
        g1.push_back(name(r, c));
        ym.push_back(Matrix::unit(size, r, c));
        rep.matrices.emplace(g1.back(), ym.back());
    }

    auto decompose = [&](const Matrix& m, const std::vector<std::pair<int, int>>& pos) {
        SparseVec v;
        Matrix rest = m;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            auto [r, c] = pos[k];
            if (!m(r, c).is_zero()) v.emplace(static_cast<int>(k), m(r, c));
            rest(r, c) = CycQ(0);
        }
        if (!rest.is_zero()) throw std::logic_error("matrix model: product left its graded block");
        return v;
    };

    AlgebraSpec s(g0, g1);
    const int p = static_cast<int>(xm.size());
    const int n = static_cast<int>(ym.size());
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) s.set_bracket00_raw(i, j, decompose(comm(xm[i], xm[j]), x_pos));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < n; ++j) s.set_action(i, j, decompose(comm(xm[i], ym[j]), y_pos));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c)
                s.set_triple(a, b, c, decompose(sym3(ym[a], ym[b], ym[c]), x_pos));
    return {std::move(s), std::move(rep)};
}

std::vector<std::string> builtin_names() {
    return {"iso3_1_1", "iso3_1_2", "iso3_1_3", "killing_rank1", "matrix_1_1_1"};
}

Builtin builtin(const std::string& name) {
    if (name.rfind("iso3_1_", 0) == 0) {
        const std::string tail = name.substr(7);
        if (tail == "0" || tail == "1" || tail == "2" || tail == "3")
            return {builtin_iso3(std::stoi(tail) + 1), std::nullopt};
    }
    if (name == "killing_rank1") return {builtin_killing_rank1(), std::nullopt};
    if (name.rfind("matrix_", 0) == 0) {
        int m[3];
        char sep1 = 0, sep2 = 0;
        std::istringstream is(name.substr(7));
        if (is >> m[0] >> sep1 >> m[1] >> sep2 >> m[2] && sep1 == '_' && sep2 == '_' && is.eof() &&
            m[0] >= 1 && m[1] >= 1 && m[2] >= 1 && m[0] + m[1] + m[2] <= 9) {
            auto [s, r] = builtin_matrix_rep(m[0], m[1], m[2]);
            return {std::move(s), std::move(r)};
        }
    }
    throw std::invalid_argument("unknown builtin algebra '" + name + "'");
}

}  // namespace lie3
