#pragma once

// Small finite fields F_{p^e}, polynomials over them, and dense linear
// algebra (echelon forms, kernels, subspace enumeration).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hallkit/error.hpp"

namespace hallkit {

/// A field element in polynomial basis, packed as the integer
/// sum_i c_i p^i where c_i is the residue of t^i. Element 0 is zero, 1 is one,
/// and the code order coincides with comparing residue tuples high-degree-first.
using Fel = std::uint8_t;

class FieldCtx {
public:
    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    /// Ascending residues of the defining monic polynomial (size e+1); empty when e == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const { return add_[a * q_ + b]; }
    Fel sub(Fel a, Fel b) const { return add_[a * q_ + neg_[b]]; }
    Fel mul(Fel a, Fel b) const { return mul_[a * q_ + b]; }
    Fel neg(Fel a) const { return neg_[a]; }
    Fel inv(Fel a) const;
    Fel pow(Fel a, std::uint64_t n) const;

    /// Image of an integer under Z -> F_p -> F_q.
    Fel from_int(long long v) const;
    std::vector<int> residues(Fel a) const;
    Fel from_residues(std::span<const int> r) const;

    /// Class of t in F_p[t]/(modulus); for prime fields this is just 0.
    Fel generator() const { return e_ > 1 ? static_cast<Fel>(p_) : Fel{0}; }

    std::string name() const;
    std::string format(Fel a) const;

    bool operator==(const FieldCtx& o) const { return p_ == o.p_ && e_ == o.e_; }

private:
    friend std::shared_ptr<const FieldCtx> make_field(int, int, const Budget&);
    FieldCtx() = default;

    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<Fel> add_, mul_, neg_, inv_;
};

using Field = std::shared_ptr<const FieldCtx>;

bool is_prime(long long n);

/// Builds F_{p^e}. For e > 1 the modulus is the least monic irreducible of
/// degree e over Z/p, comparing coefficient tuples high-degree-first.
Field make_field(int p, int e, const Budget& budget = default_budget());

/// Prime powers q = p^e in increasing order with lo <= q <= hi.
std::vector<int> prime_powers(int lo, int hi);
/// Field with exactly q elements.
Field field_of_order(int q, const Budget& budget = default_budget());

// ---------------------------------------------------------------------------
// Polynomials over F_q.

/// Ascending coefficients, trailing zeros stripped; the zero polynomial is empty.
struct FPoly {
    std::vector<Fel> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
    void normalize();

    static FPoly monomial(int deg, Fel c = 1);
    static FPoly constant(Fel c);

    bool operator==(const FPoly&) const = default;
};

/// Order used for all sorted lists of polynomials: degree first, then
/// coefficient codes compared from the highest degree down.
bool fpoly_less(const FPoly& a, const FPoly& b);

FPoly fpoly_add(const FieldCtx& f, const FPoly& a, const FPoly& b);
FPoly fpoly_sub(const FieldCtx& f, const FPoly& a, const FPoly& b);
FPoly fpoly_mul(const FieldCtx& f, const FPoly& a, const FPoly& b);
FPoly fpoly_pow(const FieldCtx& f, const FPoly& a, int n);
/// Returns (quotient, remainder); throws InputError on division by zero.
std::pair<FPoly, FPoly> fpoly_divmod(const FieldCtx& f, const FPoly& a, const FPoly& b);
FPoly fpoly_gcd(const FieldCtx& f, FPoly a, FPoly b);
FPoly fpoly_make_monic(const FieldCtx& f, const FPoly& a);
bool fpoly_is_irreducible(const FieldCtx& f, const FPoly& a);
std::string fpoly_to_string(const FieldCtx& f, const FPoly& a, char var = 't');

/// Sorted list of all monic irreducible polynomials of degree d over F_q.
std::vector<FPoly> monic_irreducibles(const FieldCtx& f, int d, const Budget& budget = default_budget());

/// Distinct monic irreducible factors of a nonzero polynomial, sorted.
std::vector<FPoly> distinct_irreducible_factors(const FieldCtx& f, const FPoly& a,
                                                const Budget& budget = default_budget());

// ---------------------------------------------------------------------------
// Dense matrices.

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
    Matrix(int rows, int cols, std::vector<Fel> data);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Fel operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Fel& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    std::span<const Fel> row(int r) const { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
    std::span<Fel> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
    const std::vector<Fel>& data() const { return data_; }
    std::vector<Fel>& data() { return data_; }

    bool is_zero() const;
    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;
    std::strong_ordering operator<=>(const Matrix& o) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Fel> data_;
};

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_add(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const FieldCtx& f, Fel c, const Matrix& a);
/// a += c * b in place.
void mat_axpy(const FieldCtx& f, Matrix& a, Fel c, const Matrix& b);
Matrix mat_pow(const FieldCtx& f, const Matrix& a, int n);
/// p(A) for a square matrix A.
Matrix mat_eval_poly(const FieldCtx& f, const FPoly& p, const Matrix& a);
/// Stacks a on top of b (equal column counts).
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix block_diag(const Matrix& a, const Matrix& b);

struct RrefResult {
    int rank = 0;
    std::vector<int> pivots;
    Matrix reduced;
};

/// Reduced row echelon form: pivots are 1 and are the only nonzero entries in their columns.
RrefResult rref(const FieldCtx& f, Matrix m);
int rank(const FieldCtx& f, const Matrix& m);
bool is_invertible(const FieldCtx& f, const Matrix& m);
std::optional<Matrix> inverse(const FieldCtx& f, const Matrix& m);
/// Rows form the RREF basis of the right null space {x : m x = 0}.
Matrix kernel_basis(const FieldCtx& f, const Matrix& m);
/// Rows form the RREF basis of the column space of m.
Matrix column_space(const FieldCtx& f, const Matrix& m);
/// Some x with a x = b, if any.
std::optional<std::vector<Fel>> solve(const FieldCtx& f, const Matrix& a, std::span<const Fel> b);
/// Minimal polynomial of a square matrix (monic).
FPoly minimal_polynomial(const FieldCtx& f, const Matrix& a);

// ---------------------------------------------------------------------------
// Subspace enumeration.

/// Gaussian binomial [n choose m]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int n, int m, std::uint64_t q);

/// Lazily yields each m-dimensional subspace of F_q^n exactly once, as its
/// unique m x n RREF basis. Order: pivot pattern (lexicographic) major,
/// free entries lexicographic minor.
class SubspaceStream {
public:
    SubspaceStream(Field field, int n, int m, const Budget& budget = default_budget());

    bool next(Matrix& out);
    std::uint64_t total() const { return total_; }

private:
    void load_pattern();
    bool next_pattern();

    Field field_;
    int n_, m_;
    std::uint64_t total_;
    bool started_ = false, done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_;  // (row, col) positions
    std::vector<Fel> digits_;
};

/// All subspaces of the given dimension, materialized.
std::vector<Matrix> subspaces(const Field& field, int n, int m, const Budget& budget = default_budget());

}  // namespace hallkit
