#include "hallkit/gfq.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace hallkit {

namespace {

// Polynomials over Z/p with int residues, used only to build the field tables.
using ZpPoly = std::vector<int>;

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, int p) {
    zp_trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        zp_trim(a);
    }
    return a;
}

bool zp_irreducible(const ZpPoly& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    // trial division by every monic polynomial of degree 1..n/2
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            ZpPoly g(d + 1);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (zp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field make_field(int p, int e, const Budget& budget) {
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw InputError("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (static_cast<std::uint64_t>(q) > budget.max_field_size || q > 256)
            throw BudgetError("field size " + std::to_string(p) + "^" + std::to_string(e) + " exceeds budget of " +
                              std::to_string(budget.max_field_size));
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->q_ = static_cast<int>(q);

    if (e > 1) {
        // ascending code order == lexicographic order high-degree-first
        for (long long code = 0; code < q; ++code) {
            ZpPoly m(e + 1);
            long long c = code;
            for (int i = 0; i < e; ++i) {
                m[i] = static_cast<int>(c % p);
                c /= p;
            }
            m[e] = 1;
            if (m[0] != 0 && zp_irreducible(m, p)) {
                ctx->modulus_ = m;
                break;
            }
        }
    }

    const int Q = ctx->q_;
    ctx->add_.assign(static_cast<size_t>(Q) * Q, 0);
    ctx->mul_.assign(static_cast<size_t>(Q) * Q, 0);
    ctx->neg_.assign(Q, 0);
    ctx->inv_.assign(Q, 0);
    std::vector<ZpPoly> res(Q);
    for (int a = 0; a < Q; ++a) {
        ZpPoly r(e);
        int c = a;
        for (int i = 0; i < e; ++i) {
            r[i] = c % p;
            c /= p;
        }
        res[a] = r;
    }
    auto encode = [&](const ZpPoly& r) {
        int code = 0;
        for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) code = code * p + r[i];
        return static_cast<Fel>(code);
    };
    for (int a = 0; a < Q; ++a) {
        for (int b = 0; b < Q; ++b) {
            ZpPoly s(e);
            for (int i = 0; i < e; ++i) s[i] = (res[a][i] + res[b][i]) % p;
            ctx->add_[a * Q + b] = encode(s);

            ZpPoly prod(2 * e - 1, 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + res[a][i] * res[b][j]) % p;
            if (e > 1) prod = zp_mod(prod, ctx->modulus_, p);
            prod.resize(e, 0);
            ctx->mul_[a * Q + b] = encode(prod);
        }
        ZpPoly n(e);
        for (int i = 0; i < e; ++i) n[i] = (p - res[a][i]) % p;
        ctx->neg_[a] = encode(n);
    }
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (ctx->mul_[a * Q + b] == 1) ctx->inv_[a] = static_cast<Fel>(b);
    return ctx;
}

std::vector<int> prime_powers(int lo, int hi) {
    std::vector<int> out;
    for (int n = std::max(lo, 2); n <= hi; ++n) {
        int m = n, pf = 0;
        for (int d = 2; d <= m; ++d) {
            if (m % d == 0) {
                pf = d;
                while (m % d == 0) m /= d;
                break;
            }
        }
        if (m == 1 && pf != 0) out.push_back(n);
    }
    return out;
}

Field field_of_order(int q, const Budget& budget) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        int e = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) break;
        return make_field(p, e, budget);
    }
    throw InputError(std::to_string(q) + " is not a prime power");
}

Fel FieldCtx::inv(Fel a) const {
    if (a == 0) throw InputError("inversion of zero in " + name());
    return inv_[a];
}

Fel FieldCtx::pow(Fel a, std::uint64_t n) const {
    Fel r = 1, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

Fel FieldCtx::from_int(long long v) const {
    long long r = ((v % p_) + p_) % p_;
    return static_cast<Fel>(r);
}

std::vector<int> FieldCtx::residues(Fel a) const {
    std::vector<int> r(e_);
    int c = a;
    for (int i = 0; i < e_; ++i) {
        r[i] = c % p_;
        c /= p_;
    }
    return r;
}

Fel FieldCtx::from_residues(std::span<const int> r) const {
    if (static_cast<int>(r.size()) > e_) throw InputError("too many residues for " + name());
    int code = 0;
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
        if (r[i] < 0 || r[i] >= p_) throw InputError("residue out of range for " + name());
        code = code * p_ + r[i];
    }
    return static_cast<Fel>(code);
}

std::string FieldCtx::name() const {
    return e_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(q_);
}

std::string FieldCtx::format(Fel a) const {
    if (e_ == 1) return std::to_string(a);
    auto r = residues(a);
    std::string s;
    for (int i = e_ - 1; i >= 0; --i) {
        if (r[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || r[i] != 1) s += std::to_string(r[i]);
        if (i >= 1) s += "w";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : (s.find('+') != std::string::npos ? "(" + s + ")" : s);
}

// ---------------------------------------------------------------------------

void FPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

FPoly FPoly::monomial(int deg, Fel c) {
    FPoly r;
    if (c == 0) return r;
    r.coeffs.assign(deg + 1, 0);
    r.coeffs[deg] = c;
    return r;
}

FPoly FPoly::constant(Fel c) { return monomial(0, c); }

bool fpoly_less(const FPoly& a, const FPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    return false;
}

FPoly fpoly_add(const FieldCtx& f, const FPoly& a, const FPoly& b) {
    FPoly r;
    r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        Fel x = i < a.coeffs.size() ? a.coeffs[i] : Fel{0};
        Fel y = i < b.coeffs.size() ? b.coeffs[i] : Fel{0};
        r.coeffs[i] = f.add(x, y);
    }
    r.normalize();
    return r;
}

FPoly fpoly_sub(const FieldCtx& f, const FPoly& a, const FPoly& b) {
    FPoly nb = b;
    for (auto& c : nb.coeffs) c = f.neg(c);
    return fpoly_add(f, a, nb);
}

FPoly fpoly_mul(const FieldCtx& f, const FPoly& a, const FPoly& b) {
    FPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = f.add(r.coeffs[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    r.normalize();
    return r;
}

FPoly fpoly_pow(const FieldCtx& f, const FPoly& a, int n) {
    FPoly r = FPoly::constant(1);
    for (int i = 0; i < n; ++i) r = fpoly_mul(f, r, a);
    return r;
}

std::pair<FPoly, FPoly> fpoly_divmod(const FieldCtx& f, const FPoly& a, const FPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    FPoly rem = a, quo;
    rem.normalize();
    const int db = b.degree();
    if (rem.degree() < db) return {quo, rem};
    quo.coeffs.assign(rem.degree() - db + 1, 0);
    const Fel lead_inv = f.inv(b.coeffs.back());
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        const Fel c = f.mul(rem.coeffs.back(), lead_inv);
        quo.coeffs[shift] = c;
        for (int i = 0; i <= db; ++i)
            rem.coeffs[shift + i] = f.sub(rem.coeffs[shift + i], f.mul(c, b.coeffs[i]));
        rem.normalize();
    }
    quo.normalize();
    return {quo, rem};
}

FPoly fpoly_make_monic(const FieldCtx& f, const FPoly& a) {
    if (a.is_zero()) return a;
    FPoly r = a;
    const Fel li = f.inv(a.coeffs.back());
    for (auto& c : r.coeffs) c = f.mul(c, li);
    return r;
}

FPoly fpoly_gcd(const FieldCtx& f, FPoly a, FPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        auto r = fpoly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fpoly_make_monic(f, a);
}

namespace {

FPoly fpoly_mulmod(const FieldCtx& f, const FPoly& a, const FPoly& b, const FPoly& m) {
    return fpoly_divmod(f, fpoly_mul(f, a, b), m).second;
}

// x^(q^k) mod m
FPoly frobenius_power(const FieldCtx& f, const FPoly& x, const FPoly& m) {
    // raise to the q-th power by repeated squaring on the exponent q
    FPoly r = FPoly::constant(1), base = x;
    int n = f.q();
    while (n) {
        if (n & 1) r = fpoly_mulmod(f, r, base, m);
        base = fpoly_mulmod(f, base, base, m);
        n >>= 1;
    }
    return r;
}

}  // namespace

bool fpoly_is_irreducible(const FieldCtx& f, const FPoly& a) {
    const int n = a.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    // Ben-Or: irreducible iff gcd(a, x^{q^i} - x) = 1 for i = 1..n/2
    const FPoly x = FPoly::monomial(1);
    FPoly xp = fpoly_divmod(f, x, a).second;
    for (int i = 1; 2 * i <= n; ++i) {
        xp = frobenius_power(f, xp, a);
        FPoly g = fpoly_gcd(f, a, fpoly_sub(f, xp, x));
        if (g.degree() > 0) return false;
    }
    return true;
}

std::string fpoly_to_string(const FieldCtx& f, const FPoly& a, char var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        const Fel c = a.coeffs[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (c != 1 || i == 0) s += f.format(c);
        if (i >= 1) s += var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::vector<FPoly> monic_irreducibles(const FieldCtx& f, int d, const Budget& budget) {
    if (d < 1) throw InputError("degree must be >= 1");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::vector<FPoly>> cache;
    const auto key = std::make_tuple(f.p(), f.e(), d);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= static_cast<std::uint64_t>(f.q());
        if (count > budget.max_candidates) throw BudgetError("monic_irreducibles: q^d exceeds candidate budget");
    }
    std::vector<FPoly> out;
    FPoly g;
    g.coeffs.assign(d + 1, 0);
    g.coeffs[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            g.coeffs[i] = static_cast<Fel>(c % f.q());
            c /= f.q();
        }
        if (fpoly_is_irreducible(f, g)) out.push_back(g);
    }
    std::sort(out.begin(), out.end(), fpoly_less);
    std::lock_guard lock(mu);
    cache[key] = out;
    return out;
}

std::vector<FPoly> distinct_irreducible_factors(const FieldCtx& f, const FPoly& a, const Budget& budget) {
    if (a.is_zero()) throw InputError("cannot factor the zero polynomial");
    std::vector<FPoly> out;
    FPoly rem = fpoly_make_monic(f, a);
    for (int d = 1; 2 * d <= rem.degree(); ++d) {
        for (const auto& p : monic_irreducibles(f, d, budget)) {
            auto [quo, r] = fpoly_divmod(f, rem, p);
            if (!r.is_zero()) continue;
            out.push_back(p);
            rem = quo;
            for (;;) {
                auto [q2, r2] = fpoly_divmod(f, rem, p);
                if (!r2.is_zero()) break;
                rem = q2;
            }
        }
    }
    if (rem.degree() >= 1) out.push_back(rem);
    std::sort(out.begin(), out.end(), fpoly_less);
    return out;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(int rows, int cols, std::vector<Fel> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows) * cols) throw InputError("matrix data size mismatch");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Fel x) { return x == 0; });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::strong_ordering Matrix::operator<=>(const Matrix& o) const {
    if (auto c = rows_ <=> o.rows_; c != 0) return c;
    if (auto c = cols_ <=> o.cols_; c != 0) return c;
    return data_ <=> o.data_;
}

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InputError("mat_mul: shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Fel x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
        }
    return r;
}

Matrix mat_add(const FieldCtx& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("mat_add: shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] = f.add(a.data()[i], b.data()[i]);
    return r;
}

Matrix mat_sub(const FieldCtx& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("mat_sub: shape mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] = f.sub(a.data()[i], b.data()[i]);
    return r;
}

Matrix mat_scale(const FieldCtx& f, Fel c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data()) x = f.mul(c, x);
    return r;
}

void mat_axpy(const FieldCtx& f, Matrix& a, Fel c, const Matrix& b) {
    if (c == 0) return;
    auto& d = a.data();
    const auto& e = b.data();
    for (size_t i = 0; i < d.size(); ++i) d[i] = f.add(d[i], f.mul(c, e[i]));
}

Matrix mat_pow(const FieldCtx& f, const Matrix& a, int n) {
    Matrix r = Matrix::identity(a.rows());
    for (int i = 0; i < n; ++i) r = mat_mul(f, r, a);
    return r;
}

Matrix mat_eval_poly(const FieldCtx& f, const FPoly& p, const Matrix& a) {
    const int n = a.rows();
    Matrix r(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        r = mat_mul(f, r, a);
        for (int k = 0; k < n; ++k) r(k, k) = f.add(r(k, k), p.coeffs[i]);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw InputError("vstack: column mismatch");
    std::vector<Fel> d = a.data();
    d.insert(d.end(), b.data().begin(), b.data().end());
    return Matrix(a.rows() + b.rows(), a.cols(), std::move(d));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

RrefResult rref(const FieldCtx& f, Matrix m) {
    RrefResult res;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        const Fel inv = f.inv(m(row, col));
        for (int c = col; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            const Fel x = m(r, col);
            if (x == 0) continue;
            const Fel nx = f.neg(x);
            for (int c = col; c < m.cols(); ++c) m(r, c) = f.add(m(r, c), f.mul(nx, m(row, c)));
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    res.reduced = std::move(m);
    return res;
}

int rank(const FieldCtx& f, const Matrix& m) {
    // forward elimination only
    Matrix a = m;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < a.rows(); ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
        const Fel inv = f.inv(a(row, col));
        for (int r = row + 1; r < a.rows(); ++r) {
            const Fel x = a(r, col);
            if (x == 0) continue;
            const Fel s = f.neg(f.mul(x, inv));
            for (int c = col; c < a.cols(); ++c) a(r, c) = f.add(a(r, c), f.mul(s, a(row, c)));
        }
        ++row;
    }
    return row;
}

bool is_invertible(const FieldCtx& f, const Matrix& m) {
    return m.rows() == m.cols() && rank(f, m) == m.rows();
}

std::optional<Matrix> inverse(const FieldCtx& f, const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto r = rref(f, aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Matrix kernel_basis(const FieldCtx& f, const Matrix& m) {
    const int n = m.cols();
    auto r = rref(f, m);
    std::vector<bool> is_piv(n, false);
    for (int c : r.pivots) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix k(static_cast<int>(free_cols.size()), n);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        const int fc = free_cols[i];
        k(static_cast<int>(i), fc) = 1;
        for (int pr = 0; pr < r.rank; ++pr) k(static_cast<int>(i), r.pivots[pr]) = f.neg(r.reduced(pr, fc));
    }
    if (k.rows() == 0) return k;
    return rref(f, k).reduced;
}

Matrix column_space(const FieldCtx& f, const Matrix& m) {
    auto r = rref(f, m.transpose());
    Matrix out(r.rank, m.rows());
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < m.rows(); ++j) out(i, j) = r.reduced(i, j);
    return out;
}

std::optional<std::vector<Fel>> solve(const FieldCtx& f, const Matrix& a, std::span<const Fel> b) {
    if (static_cast<int>(b.size()) != a.rows()) throw InputError("solve: rhs length mismatch");
    const int n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto r = rref(f, aug);
    if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;
    std::vector<Fel> x(n, 0);
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, n);
    return x;
}

FPoly minimal_polynomial(const FieldCtx& f, const Matrix& a) {
    const int n = a.rows();
    if (n != a.cols()) throw InputError("minimal_polynomial: square matrix required");
    if (n == 0) return FPoly::constant(1);
    // find the first k with A^k in span(I, ..., A^{k-1})
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (int k = 1; k <= n; ++k) {
        powers.push_back(mat_mul(f, powers.back(), a));
        Matrix sys(n * n, k);
        for (int j = 0; j < k; ++j)
            for (int e = 0; e < n * n; ++e) sys(e, j) = powers[j].data()[e];
        auto x = solve(f, sys, powers[k].data());
        if (x) {
            FPoly p;
            p.coeffs.assign(k + 1, 0);
            for (int j = 0; j < k; ++j) p.coeffs[j] = f.neg((*x)[j]);
            p.coeffs[k] = 1;
            return p;
        }
    }
    throw VerificationError("minimal_polynomial: Cayley-Hamilton violated");
}

// ---------------------------------------------------------------------------

std::uint64_t gaussian_binomial(int n, int m, std::uint64_t q) {
    if (m < 0 || m > n) return 0;
    // product_{i<m} (q^{n-i}-1)/(q^{i+1}-1), evaluated exactly in 128 bits then saturated
    using u128 = unsigned __int128;
    const u128 cap = std::numeric_limits<std::uint64_t>::max();
    auto qpow = [&](int k) -> u128 {
        u128 r = 1;
        for (int i = 0; i < k; ++i) {
            r *= q;
            if (r > cap) return cap + 1;
        }
        return r;
    };
    u128 num = 1;
    for (int i = 0; i < m; ++i) {
        const u128 a = qpow(n - i);
        const u128 b = qpow(i + 1);
        if (a > cap || num > cap) return std::numeric_limits<std::uint64_t>::max();
        num = num * (a - 1) / (b - 1);  // partial products stay integral
        if (num > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(num);
}

SubspaceStream::SubspaceStream(Field field, int n, int m, const Budget& budget)
    : field_(std::move(field)), n_(n), m_(m), total_(gaussian_binomial(n, m, field_->q())) {
    if (m < 0 || m > n) throw InputError("subspace dimension out of range");
    if (total_ > budget.max_subspaces)
        throw BudgetError("subspace count [" + std::to_string(n) + " choose " + std::to_string(m) + "]_" +
                          std::to_string(field_->q()) + " exceeds budget");
}

void SubspaceStream::load_pattern() {
    free_.clear();
    for (int r = 0; r < m_; ++r)
        for (int c = pivots_[r] + 1; c < n_; ++c)
            if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free_.emplace_back(r, c);
    digits_.assign(free_.size(), 0);
}

bool SubspaceStream::next_pattern() {
    int i = m_ - 1;
    while (i >= 0 && pivots_[i] == n_ - m_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < m_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    load_pattern();
    return true;
}

bool SubspaceStream::next(Matrix& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        pivots_.resize(m_);
        for (int i = 0; i < m_; ++i) pivots_[i] = i;
        load_pattern();
    } else {
        // odometer: last free position moves fastest
        int i = static_cast<int>(digits_.size()) - 1;
        while (i >= 0 && digits_[i] == field_->q() - 1) {
            digits_[i] = 0;
            --i;
        }
        if (i >= 0) {
            ++digits_[i];
        } else if (!next_pattern()) {
            done_ = true;
            return false;
        }
    }
    out = Matrix(m_, n_);
    for (int r = 0; r < m_; ++r) out(r, pivots_[r]) = 1;
    for (size_t k = 0; k < free_.size(); ++k) out(free_[k].first, free_[k].second) = digits_[k];
    return true;
}

std::vector<Matrix> subspaces(const Field& field, int n, int m, const Budget& budget) {
    SubspaceStream s(field, n, m, budget);
    std::vector<Matrix> out;
    out.reserve(s.total());
    Matrix b;
    while (s.next(b)) out.push_back(b);
    return out;
}

}  // namespace hallkit
