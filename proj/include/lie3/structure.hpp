#pragma once

#include "lie3/coeff.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lie3 {

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVec = std::map<int, CycQ>;

void axpy(SparseVec& acc, const CycQ& c, const SparseVec& v);
std::string render_vec(const SparseVec& v, const std::vector<std::string>& names);

/// An elementary Lie algebra of order three g = g0 + g1, given by names of
/// the two graded bases and sparse structure constants:
///   [X_i, X_j] in g0, [X_i, Y_j] in g1, {Y_a, Y_b, Y_c} in g0.
/// The triple bracket is stored under its sorted index triple, so lookups
/// for any argument order see the same value.
class AlgebraSpec {
public:
    using Pair = std::pair<int, int>;
    using Triple = std::array<int, 3>;

    AlgebraSpec() = default;
    AlgebraSpec(std::vector<std::string> g0, std::vector<std::string> g1);

    int p() const { return static_cast<int>(g0_.size()); }
    int n() const { return static_cast<int>(g1_.size()); }
    const std::vector<std::string>& g0_names() const { return g0_; }
    const std::vector<std::string>& g1_names() const { return g1_; }

    /// Stores [X_i, X_j] = v and, unless already given, [X_j, X_i] = -v.
    void set_bracket00(int i, int j, SparseVec v);
    /// Stores only [X_i, X_j] = v (used by loaders that read both orders).
    void set_bracket00_raw(int i, int j, SparseVec v);
    void set_action(int i, int j, SparseVec v);
    void set_triple(int a, int b, int c, SparseVec v);

    const SparseVec& bracket00(int i, int j) const;
    const SparseVec& action(int i, int j) const;
    const SparseVec& triple(int a, int b, int c) const;

    const std::map<Pair, SparseVec>& c00() const { return c00_; }
    const std::map<Pair, SparseVec>& c01() const { return c01_; }
    const std::map<Triple, SparseVec>& c111() const { return c111_; }

    std::optional<int> g0_index(const std::string& name) const;
    std::optional<int> g1_index(const std::string& name) const;

    // Linear extensions of the brackets.
    SparseVec bracket00(const SparseVec& x1, const SparseVec& x2) const;
    SparseVec action(const SparseVec& x, const SparseVec& y) const;
    SparseVec triple(const SparseVec& y1, const SparseVec& y2, const SparseVec& y3) const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
    void check_g0(int i) const;
    void check_g1(int j) const;

    std::vector<std::string> g0_;
    std::vector<std::string> g1_;
    std::map<Pair, SparseVec> c00_;
    std::map<Pair, SparseVec> c01_;
    std::map<Triple, SparseVec> c111_;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First failing case: generator names and the nonzero residual.
    std::string counterexample;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs, in order: c00 antisymmetry, Jacobi on g0, the g0-module axiom on g1,
/// g0-equivariance of the triple bracket, and the fundamental identity
/// sum_j [{Y_1..^j..Y_4}, Y_j] = 0 over all multisets of four g1 generators.
ValidationReport validate(const AlgebraSpec& spec);

// Check names used in ValidationReport.
inline constexpr const char* kCheckAntisymmetry = "antisymmetry";
inline constexpr const char* kCheckJacobi = "jacobi";
inline constexpr const char* kCheckModule = "module";
inline constexpr const char* kCheckEquivariance = "equivariance";
inline constexpr const char* kCheckFundamental = "fundamental_identity";

/// Dense square matrix over CycQ.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int size) : n_(size), a_(static_cast<std::size_t>(size) * size) {}
    static Matrix unit(int size, int row, int col);

    int size() const { return n_; }
    CycQ& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const CycQ& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Matrix operator*(const CycQ& c, Matrix x);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int n_ = 0;
    std::vector<CycQ> a_;
};

/// A matrix representation in the block form of gl(m1)+gl(m2)+gl(m3):
/// g0 generators block-diagonal, g1 generators in the cyclic blocks
/// (1,2), (2,3), (3,1).
struct MatrixRep {
    std::array<int, 3> dims{};
    std::map<std::string, Matrix> matrices;
    int size() const { return dims[0] + dims[1] + dims[2]; }
};

/// Checks rho([X1,X2]) = [rho X1, rho X2], rho([X,Y]) = [rho X, rho Y] and
/// rho({Y1,Y2,Y3}) = sum over S3 of rho(Y_s1) rho(Y_s2) rho(Y_s3).
/// Throws std::invalid_argument on missing generators or inconsistent sizes.
ValidationReport check_representation(const AlgebraSpec& spec, const MatrixRep& rep);

/// iso_3(1, D-1): L_{mu nu} (mu<nu), P_mu, V_mu with metric diag(1,-1,...,-1).
/// Generator order L01, L02, ..., L(D-2)(D-1), P0..P(D-1); g1 = V0..V(D-1).
AlgebraSpec builtin_iso3(int D);

/// g1 = adjoint copy of the Lie algebra with structure constants
/// f[a][b] = [J_a, J_b] and {A_a,A_b,A_c} = g_ab J_c + g_ac J_b + g_bc J_a.
/// Throws std::invalid_argument if g is not symmetric or shapes disagree.
AlgebraSpec builtin_killing(const std::vector<std::string>& g0_names,
                            const std::vector<std::string>& g1_names,
                            const std::vector<std::vector<SparseVec>>& f,
                            const std::vector<std::vector<CycQ>>& g);

/// sl(2) in the basis (H, E, F) with its Killing form; g1 = (AH, AE, AF).
AlgebraSpec builtin_killing_rank1();

/// The elementary algebra of (m1+m2+m3)-square block matrices; structure
/// constants computed from commutators and symmetrized triple products.
std::pair<AlgebraSpec, MatrixRep> builtin_matrix_rep(int m1, int m2, int m3);

struct Builtin {
    AlgebraSpec spec;
    std::optional<MatrixRep> rep;
};

/// Registry: iso3_1_1 .. iso3_1_3, killing_rank1, matrix_M1_M2_M3.
/// Throws std::invalid_argument for unknown names.
Builtin builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace lie3
