#include "hallkit/count.hpp"

#include <map>
#include <mutex>
#include <random>

namespace hallkit {

// ---------------------------------------------------------------------------
// Jordan types

Partition primary_partition(const FieldCtx& f, const Matrix& a, const FPoly& p) {
    const int n = a.rows();
    if (n == 0) return {};
    const Matrix pa = mat_eval_poly(f, p, a);
    // c[k] = number of blocks of exponent >= k
    std::vector<int> c{0};
    Matrix pw = Matrix::identity(n);
    int prev_ker = 0;
    for (int k = 1; k <= n; ++k) {
        pw = mat_mul(f, pw, pa);
        const int ker = n - rank(f, pw);
        if (ker == prev_ker) break;
        if ((ker - prev_ker) % p.degree() != 0) throw VerificationError("primary_partition: kernel jump not a multiple of deg p");
        c.push_back((ker - prev_ker) / p.degree());
        prev_ker = ker;
    }
    Partition out;
    for (size_t k = c.size() - 1; k >= 1; --k) {
        const int next = k + 1 < c.size() ? c[k + 1] : 0;
        out.insert(out.end(), c[k] - next, static_cast<int>(k));
    }
    return out;
}

JordanType jordan_type(const FieldCtx& f, const Matrix& a, const Budget& budget) {
    if (a.rows() != a.cols()) throw InputError("jordan_type needs a square matrix");
    JordanType t;
    if (a.rows() == 0) return t;
    for (const auto& p : distinct_irreducible_factors(f, minimal_polynomial(f, a), budget))
        t.parts.emplace_back(p, primary_partition(f, a, p));
    return t;
}

// ---------------------------------------------------------------------------
// Invariant subspaces

std::uint64_t subspace_tuple_count(const Rep& x, const DimVec& e) {
    x.quiver().check_dims(e);
    std::uint64_t total = 1;
    for (int i = 0; i < x.quiver().n_vertices(); ++i) {
        if (e[i] > x.dims()[i]) return 0;
        const std::uint64_t g = gaussian_binomial(x.dims()[i], e[i], x.field().q());
        if (g != 0 && total > UINT64_MAX / g) return UINT64_MAX;
        total *= g;
    }
    return total;
}

void for_each_invariant_subspace(const Rep& x, const DimVec& e,
                                 const std::function<bool(const SubspaceTuple&)>& visit, const Budget& budget) {
    const std::uint64_t total = subspace_tuple_count(x, e);
    if (total == 0) return;
    if (total > budget.max_subspaces)
        throw BudgetError("invariant_subspaces: " + std::to_string(total) + " subspace tuples exceed the budget");
    const int nv = x.quiver().n_vertices();
    std::vector<std::vector<Matrix>> per;
    for (int i = 0; i < nv; ++i) per.push_back(subspaces(x.field_ptr(), x.dims()[i], e[i], budget));
    std::vector<size_t> idx(nv, 0);
    SubspaceTuple u(nv);
    for (;;) {
        for (int i = 0; i < nv; ++i) u[i] = per[i][idx[i]];
        if (is_invariant(x, u) && visit(u)) return;
        int i = nv - 1;
        while (i >= 0 && ++idx[i] == per[i].size()) idx[i--] = 0;
        if (i < 0) return;
    }
}

std::vector<SubspaceTuple> invariant_subspaces(const Rep& x, const DimVec& e, const Budget& budget) {
    std::vector<SubspaceTuple> out;
    for_each_invariant_subspace(x, e, [&](const SubspaceTuple& u) {
        out.push_back(u);
        return false;
    }, budget);
    return out;
}

// ---------------------------------------------------------------------------
// Hall numbers

BigInt hall_number_naive(const Rep& m, const Rep& n, const Rep& x, const Budget& budget) {
    if (!m.compatible(x) || !n.compatible(x)) throw InputError("hall_number: representations over different quivers or fields");
    if (dim_add(m.dims(), n.dims()) != x.dims()) return 0;
    std::uint64_t count = 0;
    for_each_invariant_subspace(x, n.dims(), [&](const SubspaceTuple& u) {
        auto [sub, quot] = sub_quotient(x, u);
        if (is_isomorphic(sub, n, budget) && is_isomorphic(quot, m, budget)) ++count;
        return false;
    }, budget);
    return BigInt(static_cast<unsigned long>(count));
}

namespace {

std::string primary_key(const FieldCtx& f, const FPoly& p, const Partition& lam, const Partition& sub,
                        const Partition& quot) {
    return f.name() + "|" + fpoly_to_string(f, p) + "|" + partition_to_string(lam) + partition_to_string(sub) +
           partition_to_string(quot);
}

// Submodules of M(lam, p) of type M(sub, p) with quotient of type M(quot, p).
BigInt primary_count(const Field& f, const FPoly& p, const Partition& lam, const Partition& sub,
                     const Partition& quot, const Budget& budget) {
    if (partition_size(lam) != partition_size(sub) + partition_size(quot)) return 0;
    if (lam.empty()) return 1;
    static std::mutex mu;
    static std::map<std::string, BigInt> memo;
    const std::string key = primary_key(*f, p, lam, sub, quot);
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const Rep x = jordan_rep(f, jordan_matrix(*f, lam, p));
    std::uint64_t count = 0;
    for_each_invariant_subspace(x, {p.degree() * partition_size(sub)}, [&](const SubspaceTuple& u) {
        auto [s, q] = sub_quotient(x, u);
        if (primary_partition(*f, s.mat(0), p) == sub && primary_partition(*f, q.mat(0), p) == quot) ++count;
        return false;
    }, budget);
    BigInt result(static_cast<unsigned long>(count));
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, result);
    return result;
}

const Partition* find_part(const JordanType& t, const FPoly& p) {
    for (const auto& [q, lam] : t.parts)
        if (q == p) return &lam;
    return nullptr;
}

BigInt hall_number_jordan(const Rep& m, const Rep& n, const Rep& x, const Budget& budget) {
    const auto& f = x.field();
    const JordanType tx = jordan_type(f, x.mat(0), budget);
    const JordanType tm = jordan_type(f, m.mat(0), budget);
    const JordanType tn = jordan_type(f, n.mat(0), budget);
    for (const auto& [p, lam] : tm.parts)
        if (!find_part(tx, p)) return 0;
    for (const auto& [p, lam] : tn.parts)
        if (!find_part(tx, p)) return 0;
    static const Partition none;
    BigInt result = 1;
    for (const auto& [p, lam] : tx.parts) {
        const Partition* sub = find_part(tn, p);
        const Partition* quot = find_part(tm, p);
        result *= primary_count(x.field_ptr(), p, lam, sub ? *sub : none, quot ? *quot : none, budget);
        if (result == 0) break;
    }
    return result;
}

}  // namespace

BigInt hall_number(const Rep& m, const Rep& n, const Rep& x, const Budget& budget) {
    if (!m.compatible(x) || !n.compatible(x)) throw InputError("hall_number: representations over different quivers or fields");
    if (dim_add(m.dims(), n.dims()) != x.dims()) return 0;
    if (x.quiver().is_jordan()) return hall_number_jordan(m, n, x, budget);
    return hall_number_naive(m, n, x, budget);
}

BigInt p_number(const Rep& m, const Rep& n, const Rep& x, const Budget& budget) {
    const BigInt h = hall_number(m, n, x, budget);
    if (h == 0) return 0;
    return h * aut_size(m, budget) * aut_size(n, budget);
}

BigInt grassmannian_count(const Rep& x, const DimVec& e, const Budget& budget) {
    x.quiver().check_dims(e);
    std::uint64_t count = 0;
    for_each_invariant_subspace(x, e, [&](const SubspaceTuple&) {
        ++count;
        return false;
    }, budget);
    return BigInt(static_cast<unsigned long>(count));
}

// ---------------------------------------------------------------------------
// Isomorphism classes

BigInt gl_order(long q, int d) {
    BigInt r = 1, qd, qi = 1;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
    for (int i = 0; i < d; ++i) {
        r *= qd - qi;
        qi *= q;
    }
    return r;
}

std::uint64_t rep_index(const Rep& m) {
    const std::uint64_t q = m.field().q();
    std::uint64_t idx = 0;
    for (const auto& a : m.mats())
        for (Fel x : a.data()) idx = idx * q + x;
    return idx;
}

Rep rep_from_index(const QuiverPtr& q, const Field& f, const DimVec& d, std::uint64_t index) {
    Rep z = Rep::zero(q, f, d);
    std::vector<Matrix> mats = z.mats();
    for (auto it = mats.rbegin(); it != mats.rend(); ++it)
        for (auto e = it->data().rbegin(); e != it->data().rend(); ++e) {
            *e = static_cast<Fel>(index % f->q());
            index /= f->q();
        }
    return Rep(q, f, d, std::move(mats));
}

namespace {

struct GlElement {
    Matrix g, g_inv;
};

const std::vector<GlElement>& gl_elements(const Field& f, int d, const Budget& budget) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::vector<GlElement>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const auto key = std::make_pair(f->name(), d);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto total = checked_power(f->q(), d * d, budget.max_candidates);
    if (!total) throw BudgetError("GL_" + std::to_string(d) + "(" + f->name() + ") is too large to enumerate");
    std::vector<GlElement> out;
    Matrix m(d, d);
    for (std::uint64_t i = 0; i < *total; ++i) {
        std::uint64_t v = i;
        for (auto e = m.data().rbegin(); e != m.data().rend(); ++e) {
            *e = static_cast<Fel>(v % f->q());
            v /= f->q();
        }
        if (auto inv = inverse(*f, m)) out.push_back({m, *inv});
    }
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

IsoClassTable iso_classes(const QuiverPtr& q, const DimVec& d, const Field& f, const Budget& budget) {
    q->check_dims(d);
    const int entries = q->entry_count(d);
    const auto total = checked_power(f->q(), entries, budget.max_reps);
    if (!total) throw BudgetError("iso_classes: q^" + std::to_string(entries) + " representations exceed the budget");

    IsoClassTable t{q, f, d, 1, {}, {}};
    const int nv = q->n_vertices();
    std::vector<const std::vector<GlElement>*> groups;
    for (int i = 0; i < nv; ++i) {
        groups.push_back(&gl_elements(f, d[i], budget));
        t.group_order *= gl_order(f->q(), d[i]);
    }
    t.class_of.assign(*total, -1);
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
        if (t.class_of[idx] >= 0) continue;
        const std::int32_t id = static_cast<std::int32_t>(t.entries.size());
        const Rep m = rep_from_index(q, f, d, idx);
        std::uint64_t orbit = 0;
        std::vector<size_t> g(nv, 0);
        Morphism gm(nv), gi(nv);
        for (;;) {
            for (int i = 0; i < nv; ++i) {
                gm[i] = (*groups[i])[g[i]].g;
                gi[i] = (*groups[i])[g[i]].g_inv;
            }
            const std::uint64_t j = rep_index(transport(m, gm, gi));
            if (t.class_of[j] < 0) {
                t.class_of[j] = id;
                ++orbit;
            } else if (t.class_of[j] != id) {
                throw VerificationError("iso_classes: orbits overlap");
            }
            int i = nv - 1;
            while (i >= 0 && ++g[i] == groups[i]->size()) g[i--] = 0;
            if (i < 0) break;
        }
        t.entries.push_back({m, BigInt(static_cast<unsigned long>(orbit)), aut_size(m, budget)});
    }
    return t;
}

std::vector<Rep> iso_classes_by_binning(const QuiverPtr& q, const DimVec& d, const Field& f, const Budget& budget) {
    const auto total = checked_power(f->q(), q->entry_count(d), budget.max_reps);
    if (!total) throw BudgetError("iso_classes: representation stream exceeds the budget");
    std::vector<Rep> reps;
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
        Rep m = rep_from_index(q, f, d, idx);
        bool found = false;
        for (const auto& r : reps)
            if (is_isomorphic(r, m, budget)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(std::move(m));
    }
    return reps;
}

// ---------------------------------------------------------------------------
// Krull-Schmidt

namespace {

bool splits(const FieldCtx& f, const Morphism& phi) {
    return !is_iso_morphism(f, phi) && !is_nilpotent_morphism(f, phi);
}

}  // namespace

std::optional<Morphism> splitting_endomorphism(const Rep& m, const Budget& budget) {
    if (m.total_dim() == 0) return std::nullopt;
    const auto hb = hom_basis(m, m);
    if (hb.dim() <= 1) return std::nullopt;  // End = k
    const auto& f = m.field();
    for (const auto& b : hb.basis)
        if (splits(f, b)) return b;
    for (int i = 0; i < hb.dim(); ++i)
        for (int j = i + 1; j < hb.dim(); ++j) {
            Morphism s = hb.basis[i];
            for (size_t v = 0; v < s.size(); ++v) mat_axpy(f, s[v], 1, hb.basis[j][v]);
            if (splits(f, s)) return s;
        }
    std::mt19937_64 rng(0xdec0ULL);
    std::uniform_int_distribution<int> coef(0, f.q() - 1);
    for (int trial = 0; trial < 64; ++trial) {
        Morphism s;
        for (const auto& b0 : hb.basis[0]) s.emplace_back(b0.rows(), b0.cols());
        for (const auto& b : hb.basis) {
            const Fel c = static_cast<Fel>(coef(rng));
            for (size_t v = 0; v < s.size(); ++v) mat_axpy(f, s[v], c, b[v]);
        }
        if (splits(f, s)) return s;
    }
    if (!checked_power(f.q(), hb.dim(), budget.max_candidates))
        throw BudgetError("decompose: q^" + std::to_string(hb.dim()) + " endomorphisms exceed the candidate budget");
    std::optional<Morphism> found;
    for_each_in_span(f, hb.basis, [&](const Morphism& phi) {
        if (splits(f, phi)) {
            found = phi;
            return true;
        }
        return false;
    });
    return found;
}

bool is_indecomposable(const Rep& m, const Budget& budget) {
    return m.total_dim() > 0 && !splitting_endomorphism(m, budget);
}

std::vector<Rep> decompose(const Rep& m, const Budget& budget) {
    if (m.total_dim() == 0) return {};
    auto phi = splitting_endomorphism(m, budget);
    if (!phi) return {m};
    const auto& f = m.field();
    SubspaceTuple im, ker;
    for (auto& p : *phi) {
        const Matrix pw = mat_pow(f, p, m.total_dim());
        im.push_back(column_space(f, pw));
        ker.push_back(kernel_basis(f, pw));
    }
    auto out = decompose(restrict_to(m, im), budget);
    for (auto& r : decompose(restrict_to(m, ker), budget)) out.push_back(std::move(r));
    return out;
}

Matrix arrow_operator(const Rep& m) {
    const auto& q = m.quiver();
    std::vector<int> off(q.n_vertices() + 1, 0);
    for (int i = 0; i < q.n_vertices(); ++i) off[i + 1] = off[i] + m.dims()[i];
    Matrix a(off.back(), off.back());
    for (int ai = 0; ai < q.n_arrows(); ++ai) {
        const auto& ar = q.arrows()[ai];
        const Matrix& x = m.mat(ai);
        for (int r = 0; r < x.rows(); ++r)
            for (int c = 0; c < x.cols(); ++c)
                a(off[ar.head] + r, off[ar.tail] + c) = m.field().add(a(off[ar.head] + r, off[ar.tail] + c), x(r, c));
    }
    return a;
}

bool is_nilpotent_rep(const Rep& m) {
    const int n = m.total_dim();
    if (n == 0) return true;
    const auto& q = m.quiver();
    // acyclic quivers: every path longer than n_vertices is absent
    std::vector<int> indeg(q.n_vertices(), 0), order;
    for (const auto& a : q.arrows()) ++indeg[a.head];
    for (int v = 0; v < q.n_vertices(); ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t k = 0; k < order.size(); ++k)
        for (const auto& a : q.arrows())
            if (a.tail == order[k] && --indeg[a.head] == 0) order.push_back(a.head);
    if (static_cast<int>(order.size()) == q.n_vertices()) return true;
    for (size_t i = 0; i < q.arrows().size(); ++i)
        for (size_t j = i + 1; j < q.arrows().size(); ++j)
            if (q.arrows()[i] == q.arrows()[j])
                throw InputError("nilpotency test needs a quiver without parallel arrows on its cycles");
    return mat_pow(m.field(), arrow_operator(m), n).is_zero();
}

}  // namespace hallkit
