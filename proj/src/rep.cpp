#include "hallkit/rep.hpp"

#include <random>

#include "hallkit/count.hpp"

namespace hallkit {

Rep::Rep(QuiverPtr quiver, Field field, DimVec dims, std::vector<Matrix> mats)
    : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), mats_(std::move(mats)) {
    if (!quiver_ || !field_) throw InputError("representation needs a quiver and a field");
    quiver_->check_dims(dims_);
    if (static_cast<int>(mats_.size()) != quiver_->n_arrows())
        throw InputError("representation has " + std::to_string(mats_.size()) + " matrices for " +
                         std::to_string(quiver_->n_arrows()) + " arrows");
    for (int a = 0; a < quiver_->n_arrows(); ++a) {
        const auto& ar = quiver_->arrows()[a];
        if (mats_[a].rows() != dims_[ar.head] || mats_[a].cols() != dims_[ar.tail])
            throw InputError("matrix for arrow " + std::to_string(a) + " has shape " +
                             std::to_string(mats_[a].rows()) + "x" + std::to_string(mats_[a].cols()) +
                             ", expected " + std::to_string(dims_[ar.head]) + "x" + std::to_string(dims_[ar.tail]));
        for (Fel x : mats_[a].data())
            if (x >= field_->q()) throw InputError("matrix entry outside the field");
    }
}

Rep Rep::zero(QuiverPtr quiver, Field field, DimVec dims) {
    std::vector<Matrix> mats;
    for (const auto& a : quiver->arrows()) mats.emplace_back(dims[a.head], dims[a.tail]);
    return Rep(std::move(quiver), std::move(field), std::move(dims), std::move(mats));
}

bool Rep::compatible(const Rep& o) const {
    return (quiver_ == o.quiver_ || *quiver_ == *o.quiver_) && (field_ == o.field_ || *field_ == *o.field_);
}

namespace {

void require_compatible(const Rep& m, const Rep& n, const char* what) {
    if (!m.compatible(n)) throw InputError(std::string(what) + ": representations over different quivers or fields");
}

}  // namespace

HomBasis hom_basis(const Rep& m, const Rep& n) {
    require_compatible(m, n, "hom_basis");
    const auto& f = m.field();
    const auto& q = m.quiver();
    const int nv = q.n_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int i = 0; i < nv; ++i) offset[i + 1] = offset[i] + n.dims()[i] * m.dims()[i];
    const int unknowns = offset[nv];
    // variable for phi_i(r, c) sits at offset[i] + r * m_i + c
    auto var = [&](int i, int r, int c) { return offset[i] + r * m.dims()[i] + c; };

    int eqs = 0;
    for (const auto& a : q.arrows()) eqs += n.dims()[a.head] * m.dims()[a.tail];
    Matrix sys(eqs, unknowns);
    int row = 0;
    for (int ai = 0; ai < q.n_arrows(); ++ai) {
        const auto& a = q.arrows()[ai];
        const Matrix& ma = m.mat(ai);
        const Matrix& na = n.mat(ai);
        const int h = a.head, t = a.tail;
        for (int r = 0; r < n.dims()[h]; ++r)
            for (int c = 0; c < m.dims()[t]; ++c, ++row) {
                // (phi_h M_a)(r,c) - (N_a phi_t)(r,c)
                for (int k = 0; k < m.dims()[h]; ++k) {
                    const Fel x = ma(k, c);
                    if (x) sys(row, var(h, r, k)) = f.add(sys(row, var(h, r, k)), x);
                }
                for (int k = 0; k < n.dims()[t]; ++k) {
                    const Fel x = na(r, k);
                    if (x) sys(row, var(t, k, c)) = f.sub(sys(row, var(t, k, c)), x);
                }
            }
    }
    HomBasis hb;
    Matrix ker = unknowns == 0 ? Matrix(0, 0) : kernel_basis(f, sys);
    for (int b = 0; b < ker.rows(); ++b) {
        Morphism phi;
        for (int i = 0; i < nv; ++i) {
            Matrix pi(n.dims()[i], m.dims()[i]);
            for (int r = 0; r < n.dims()[i]; ++r)
                for (int c = 0; c < m.dims()[i]; ++c) pi(r, c) = ker(b, var(i, r, c));
            phi.push_back(std::move(pi));
        }
        hb.basis.push_back(std::move(phi));
    }
    return hb;
}

int hom_dim(const Rep& m, const Rep& n) { return hom_basis(m, n).dim(); }

int ext_dim(const Rep& m, const Rep& n) {
    const long e = hom_dim(m, n) - euler_form(m.quiver(), m.dims(), n.dims());
    if (e < 0) throw VerificationError("negative Ext dimension: hom/euler mismatch");
    return static_cast<int>(e);
}

bool is_intertwiner(const Rep& m, const Rep& n, const Morphism& phi) {
    const auto& f = m.field();
    for (int ai = 0; ai < m.quiver().n_arrows(); ++ai) {
        const auto& a = m.quiver().arrows()[ai];
        if (mat_mul(f, phi[a.head], m.mat(ai)) != mat_mul(f, n.mat(ai), phi[a.tail])) return false;
    }
    return true;
}

bool is_iso_morphism(const FieldCtx& f, const Morphism& phi) {
    for (const auto& p : phi)
        if (p.rows() != p.cols() || (p.rows() > 0 && !is_invertible(f, p))) return false;
    return true;
}

bool is_nilpotent_morphism(const FieldCtx& f, const Morphism& phi) {
    for (const auto& p : phi)
        if (p.rows() > 0 && !mat_pow(f, p, p.rows()).is_zero()) return false;
    return true;
}

Morphism compose(const FieldCtx& f, const Morphism& psi, const Morphism& phi) {
    Morphism r;
    for (size_t i = 0; i < phi.size(); ++i) r.push_back(mat_mul(f, psi[i], phi[i]));
    return r;
}

bool for_each_in_span(const FieldCtx& f, const std::vector<Morphism>& basis,
                      const std::function<bool(const Morphism&)>& visit) {
    if (basis.empty()) return false;
    // F_p-basis: w^j * b_i
    std::vector<Morphism> pb;
    Fel w = 1;
    for (int j = 0; j < f.e(); ++j) {
        for (const auto& b : basis) {
            Morphism s;
            for (const auto& m : b) s.push_back(mat_scale(f, w, m));
            pb.push_back(std::move(s));
        }
        w = f.mul(w, f.generator());
    }
    Morphism cur;
    for (const auto& m : basis[0]) cur.emplace_back(m.rows(), m.cols());
    std::vector<int> digits(pb.size(), 0);
    const int p = f.p();
    for (;;) {
        if (visit(cur)) return true;
        size_t k = 0;
        for (; k < digits.size(); ++k) {
            for (size_t v = 0; v < cur.size(); ++v) mat_axpy(f, cur[v], 1, pb[k][v]);
            if (++digits[k] < p) break;
            digits[k] = 0;  // p copies summed back to zero
        }
        if (k == digits.size()) return false;
    }
}

std::optional<std::uint64_t> checked_power(std::uint64_t q, int n, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r > cap / q) return std::nullopt;
        r *= q;
    }
    if (r > cap) return std::nullopt;
    return r;
}

BigInt aut_size_enumerated(const Rep& m, const Budget& budget) {
    const auto hb = hom_basis(m, m);
    if (!checked_power(m.field().q(), hb.dim(), budget.max_candidates))
        throw BudgetError("aut_size: q^" + std::to_string(hb.dim()) + " endomorphisms exceed the candidate budget");
    if (m.total_dim() == 0) return 1;
    std::uint64_t count = 0;
    const auto& f = m.field();
    for_each_in_span(f, hb.basis, [&](const Morphism& phi) {
        if (is_iso_morphism(f, phi)) ++count;
        return false;
    });
    return BigInt(static_cast<unsigned long>(count));
}

namespace {

BigInt big_pow(long base, long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

// |GL_m(F_Q)| with Q = q^f
BigInt gl_order(long q, int f, int m) {
    const BigInt Q = big_pow(q, f);
    BigInt r = 1;
    BigInt Qm;
    mpz_pow_ui(Qm.get_mpz_t(), Q.get_mpz_t(), m);
    BigInt Qi = 1;
    for (int i = 0; i < m; ++i) {
        r *= (Qm - Qi);
        Qi *= Q;
    }
    return r;
}

// [End(T) : rad End(T)] over F_q for indecomposable T, from the count of non-units.
int residue_degree(const Rep& t, const Budget& budget) {
    const auto hb = hom_basis(t, t);
    const auto total = checked_power(t.field().q(), hb.dim(), budget.max_candidates);
    if (!total) throw BudgetError("aut_size: endomorphism ring of an indecomposable summand exceeds the budget");
    std::uint64_t nonunits = 0;
    for_each_in_span(t.field(), hb.basis, [&](const Morphism& phi) {
        if (!is_iso_morphism(t.field(), phi)) ++nonunits;
        return false;
    });
    // local ring: the non-units are the radical, a subspace
    int k = 0;
    std::uint64_t v = 1;
    while (v < nonunits) {
        v *= t.field().q();
        ++k;
    }
    if (v != nonunits) throw VerificationError("aut_size: summand endomorphism ring is not local");
    return hb.dim() - k;
}

}  // namespace

BigInt aut_size(const Rep& m, const Budget& budget) {
    const auto hb = hom_basis(m, m);
    if (checked_power(m.field().q(), hb.dim(), budget.max_candidates)) return aut_size_enumerated(m, budget);

    std::vector<std::pair<Rep, int>> types;
    for (const auto& part : decompose(m, budget)) {
        bool found = false;
        for (auto& [rep, mult] : types)
            if (is_isomorphic(rep, part, budget)) {
                ++mult;
                found = true;
                break;
            }
        if (!found) types.emplace_back(part, 1);
    }
    long rad_dim = hb.dim();
    BigInt result = 1;
    for (const auto& [rep, mult] : types) {
        const int f = residue_degree(rep, budget);
        rad_dim -= static_cast<long>(mult) * mult * f;
        result *= gl_order(m.field().q(), f, mult);
    }
    if (rad_dim < 0) throw VerificationError("aut_size: semisimple quotient larger than End(M)");
    return result * big_pow(m.field().q(), rad_dim);
}

std::optional<Morphism> find_isomorphism(const Rep& m, const Rep& n, const Budget& budget) {
    require_compatible(m, n, "is_isomorphic");
    if (m.dims() != n.dims()) return std::nullopt;
    const auto& f = m.field();
    for (int a = 0; a < m.quiver().n_arrows(); ++a)
        if (rank(f, m.mat(a)) != rank(f, n.mat(a))) return std::nullopt;
    if (m.total_dim() == 0) {
        Morphism id;
        for (int d : m.dims()) id.emplace_back(d, d);
        return id;
    }
    const auto hb = hom_basis(m, n);
    const int hmm = hom_dim(m, m);
    if (hb.dim() != hmm || hom_dim(n, n) != hmm || hom_dim(n, m) != hmm) return std::nullopt;

    // isomorphisms are a large fraction of Hom when they exist; try a few first
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> coef(0, f.q() - 1);
    for (int trial = 0; trial < 64; ++trial) {
        Morphism phi;
        for (const auto& b0 : hb.basis[0]) phi.emplace_back(b0.rows(), b0.cols());
        for (const auto& b : hb.basis) {
            const Fel c = static_cast<Fel>(coef(rng));
            for (size_t v = 0; v < phi.size(); ++v) mat_axpy(f, phi[v], c, b[v]);
        }
        if (is_iso_morphism(f, phi)) return phi;
    }
    if (!checked_power(f.q(), hb.dim(), budget.max_candidates))
        throw BudgetError("is_isomorphic: q^" + std::to_string(hb.dim()) + " candidates exceed the budget");
    std::optional<Morphism> found;
    for_each_in_span(f, hb.basis, [&](const Morphism& phi) {
        if (is_iso_morphism(f, phi)) {
            found = phi;
            return true;
        }
        return false;
    });
    return found;
}

bool is_isomorphic(const Rep& m, const Rep& n, const Budget& budget) {
    return find_isomorphism(m, n, budget).has_value();
}

Rep direct_sum(const Rep& m, const Rep& n) {
    require_compatible(m, n, "direct_sum");
    std::vector<Matrix> mats;
    for (int a = 0; a < m.quiver().n_arrows(); ++a) mats.push_back(block_diag(m.mat(a), n.mat(a)));
    return Rep(m.quiver_ptr(), m.field_ptr(), dim_add(m.dims(), n.dims()), std::move(mats));
}

Rep direct_sum(const std::vector<Rep>& parts, const QuiverPtr& q, const Field& f) {
    Rep acc = Rep::zero(q, f, DimVec(q->n_vertices(), 0));
    for (const auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

namespace {

struct Echelon {
    Matrix basis;  // RREF rows
    std::vector<int> pivots;
    std::vector<int> free;  // complement columns, ascending
};

Echelon echelon_of(const FieldCtx& f, const Matrix& u, int n) {
    Echelon e;
    if (u.rows() == 0) {
        e.basis = Matrix(0, n);
    } else {
        if (u.cols() != n) throw InputError("subspace basis has wrong ambient dimension");
        auto r = rref(f, u);
        e.basis = Matrix(r.rank, n);
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < n; ++j) e.basis(i, j) = r.reduced(i, j);
        e.pivots = r.pivots;
    }
    for (int c = 0, k = 0; c < n; ++c) {
        if (k < static_cast<int>(e.pivots.size()) && e.pivots[k] == c)
            ++k;
        else
            e.free.push_back(c);
    }
    return e;
}

// v -= sum_j v[piv_j] b_j ; returns whether v became zero
bool reduce_against(const FieldCtx& f, const Echelon& e, std::vector<Fel>& v) {
    for (size_t j = 0; j < e.pivots.size(); ++j) {
        const Fel c = v[e.pivots[j]];
        if (!c) continue;
        const Fel nc = f.neg(c);
        const auto row = e.basis.row(static_cast<int>(j));
        for (size_t k = 0; k < v.size(); ++k) v[k] = f.add(v[k], f.mul(nc, row[k]));
    }
    for (Fel x : v)
        if (x) return false;
    return true;
}

std::vector<Echelon> echelons(const Rep& x, const SubspaceTuple& u) {
    if (static_cast<int>(u.size()) != x.quiver().n_vertices()) throw InputError("subspace tuple has wrong length");
    std::vector<Echelon> out;
    for (int i = 0; i < x.quiver().n_vertices(); ++i) out.push_back(echelon_of(x.field(), u[i], x.dims()[i]));
    return out;
}

}  // namespace

bool is_invariant(const Rep& x, const SubspaceTuple& u) {
    const auto ech = echelons(x, u);
    const auto& f = x.field();
    for (int ai = 0; ai < x.quiver().n_arrows(); ++ai) {
        const auto& a = x.quiver().arrows()[ai];
        const Matrix& ma = x.mat(ai);
        const auto& et = ech[a.tail];
        const auto& eh = ech[a.head];
        for (int k = 0; k < et.basis.rows(); ++k) {
            std::vector<Fel> v(x.dims()[a.head], 0);
            for (int r = 0; r < ma.rows(); ++r)
                for (int c = 0; c < ma.cols(); ++c) v[r] = f.add(v[r], f.mul(ma(r, c), et.basis(k, c)));
            if (!reduce_against(f, eh, v)) return false;
        }
    }
    return true;
}

std::pair<Rep, Rep> sub_quotient(const Rep& x, const SubspaceTuple& u) {
    const auto ech = echelons(x, u);
    const auto& f = x.field();
    const int nv = x.quiver().n_vertices();
    DimVec sd(nv), qd(nv);
    for (int i = 0; i < nv; ++i) {
        sd[i] = static_cast<int>(ech[i].pivots.size());
        qd[i] = x.dims()[i] - sd[i];
    }
    std::vector<Matrix> smats, qmats;
    for (int ai = 0; ai < x.quiver().n_arrows(); ++ai) {
        const auto& a = x.quiver().arrows()[ai];
        const Matrix& ma = x.mat(ai);
        const auto& et = ech[a.tail];
        const auto& eh = ech[a.head];
        Matrix sm(sd[a.head], sd[a.tail]);
        for (int k = 0; k < sd[a.tail]; ++k) {
            std::vector<Fel> v(x.dims()[a.head], 0);
            for (int r = 0; r < ma.rows(); ++r)
                for (int c = 0; c < ma.cols(); ++c) v[r] = f.add(v[r], f.mul(ma(r, c), et.basis(k, c)));
            for (int j = 0; j < sd[a.head]; ++j) sm(j, k) = v[eh.pivots[j]];
            if (!reduce_against(f, eh, v)) throw InputError("sub_quotient: subspace is not arrow-invariant");
        }
        Matrix qm(qd[a.head], qd[a.tail]);
        for (int k = 0; k < qd[a.tail]; ++k) {
            std::vector<Fel> v(x.dims()[a.head]);
            for (int r = 0; r < ma.rows(); ++r) v[r] = ma(r, et.free[k]);
            reduce_against(f, eh, v);
            for (int j = 0; j < qd[a.head]; ++j) qm(j, k) = v[eh.free[j]];
        }
        smats.push_back(std::move(sm));
        qmats.push_back(std::move(qm));
    }
    return {Rep(x.quiver_ptr(), x.field_ptr(), sd, std::move(smats)),
            Rep(x.quiver_ptr(), x.field_ptr(), qd, std::move(qmats))};
}

Rep restrict_to(const Rep& x, const SubspaceTuple& u) { return sub_quotient(x, u).first; }

Rep transport(const Rep& m, const Morphism& g, const Morphism& g_inv) {
    const auto& f = m.field();
    std::vector<Matrix> mats;
    for (int ai = 0; ai < m.quiver().n_arrows(); ++ai) {
        const auto& a = m.quiver().arrows()[ai];
        mats.push_back(mat_mul(f, mat_mul(f, g[a.head], m.mat(ai)), g_inv[a.tail]));
    }
    return Rep(m.quiver_ptr(), m.field_ptr(), m.dims(), std::move(mats));
}

Matrix companion_matrix(const FieldCtx& f, const FPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw InputError("companion matrix needs a monic polynomial of degree >= 1");
    const int n = p.degree();
    Matrix c(n, n);
    for (int i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
    for (int i = 0; i < n; ++i) c(i, n - 1) = f.neg(p.coeffs[i]);
    return c;
}

Matrix jordan_matrix(const FieldCtx& f, const std::vector<int>& lambda, const FPoly& p) {
    Matrix acc(0, 0);
    for (int r : lambda) {
        if (r < 1) throw InputError("partition parts must be positive");
        acc = block_diag(acc, companion_matrix(f, fpoly_pow(f, p, r)));
    }
    return acc;
}

Rep jordan_rep(const Field& f, const Matrix& a) {
    static const QuiverPtr jq = share(Quiver::jordan());
    if (a.rows() != a.cols()) throw InputError("Jordan quiver needs a square matrix");
    return Rep(jq, f, {a.rows()}, {a});
}

Rep jordan_module(const Field& f, const std::vector<int>& lambda, const FPoly& p) {
    if (!p.is_monic() || !fpoly_is_irreducible(*f, p))
        throw InputError("jordan_module: " + fpoly_to_string(*f, p) + " is not monic irreducible");
    return jordan_rep(f, jordan_matrix(*f, lambda, p));
}

Rep kronecker_preset(KroneckerKind kind, int r, const Field& f) {
    static const QuiverPtr kq = share(Quiver::kronecker());
    if (r < 0) throw InputError("kronecker_preset: r must be >= 0");
    if (kind == KroneckerKind::Preprojective) {
        Matrix a(r + 1, r), b(r + 1, r);
        for (int i = 0; i < r; ++i) {
            a(i, i) = 1;
            b(i + 1, i) = 1;
        }
        return Rep(kq, f, {r, r + 1}, {a, b});
    }
    Matrix a(r, r + 1), b(r, r + 1);
    for (int i = 0; i < r; ++i) {
        a(i, i) = 1;
        b(i, i + 1) = 1;
    }
    return Rep(kq, f, {r + 1, r}, {a, b});
}

Rep simple_rep(const QuiverPtr& q, const Field& f, int vertex) {
    if (vertex < 0 || vertex >= q->n_vertices()) throw InputError("vertex out of range");
    DimVec d(q->n_vertices(), 0);
    d[vertex] = 1;
    return Rep::zero(q, f, d);
}

}  // namespace hallkit
