#include "hallkit/hallpoly.hpp"

#include <map>
#include <mutex>

namespace hallkit {

RatPoly a_lambda_poly(const Partition& lambda) {
    const auto l = exponents(lambda);
    long top = 0;
    for (size_t i = 1; i < l.size(); ++i)
        for (size_t j = 1; j < l.size(); ++j) top += static_cast<long>(std::min(i, j)) * l[i] * l[j];
    // prod_k (1 - T^-k) = prod_k (T^k - 1) / T^k
    RatPoly r = RatPoly::constant(1);
    long shift = 0;
    for (size_t i = 1; i < l.size(); ++i)
        for (int k = 1; k <= l[i]; ++k) {
            r *= RatPoly::monomial(k) - RatPoly::constant(1);
            shift += k;
        }
    return r * RatPoly::monomial(static_cast<int>(top - shift));
}

int loewy_length(const Rep& m) {
    const Matrix a = arrow_operator(m);
    Matrix p = Matrix::identity(a.rows());
    for (int l = 0; l <= a.rows(); ++l) {
        if (p.is_zero()) return l;
        p = mat_mul(m.field(), p, a);
    }
    throw InputError("loewy_length: module is not nilpotent");
}

Partition loewy_partition(const Rep& m, const Budget& budget) {
    if (!m.quiver().is_oriented_cycle()) throw InputError("loewy_partition needs the Jordan quiver or an oriented cycle");
    if (!is_nilpotent_rep(m)) throw InputError("loewy_partition needs a nilpotent module");
    Partition out;
    for (const auto& part : decompose(m, budget)) out.push_back(loewy_length(part));
    return make_partition(std::move(out));
}

PolyFit fit_polynomial(const std::function<Rational(const Field&)>& value, int degree_bound, const Budget& budget,
                       int extra_samples, int max_q) {
    const size_t need = static_cast<size_t>(std::max(degree_bound, -1) + 1 + std::max(extra_samples, 1));
    PolyFit fit;
    fit.degree_bound = degree_bound;
    for (int q : prime_powers(2, max_q)) {
        if (fit.samples.size() >= need) break;
        try {
            Budget b = budget;
            b.max_field_size = std::max<std::uint64_t>(b.max_field_size, q);
            fit.samples.push_back({q, value(field_of_order(q, b))});
        } catch (const BudgetError&) {
            continue;
        }
    }
    if (fit.samples.size() < need)
        throw BudgetError("only " + std::to_string(fit.samples.size()) + " sample fields within budget, need " +
                          std::to_string(need));
    fit.poly = interpolate(fit.samples, degree_bound);
    return fit;
}

namespace {

const QuiverPtr& jordan_quiver() {
    static const QuiverPtr q = share(Quiver::jordan());
    return q;
}

int floor_half(long x) { return static_cast<int>(x >= 0 ? x / 2 : -((-x + 1) / 2)); }

}  // namespace

PolyFit classical_hall_fit(const Partition& lambda, const Partition& mu, const Partition& nu, const Budget& budget) {
    const Partition l = make_partition(lambda), m = make_partition(mu), n = make_partition(nu);
    const int bound = partition_size(n) != partition_size(l) + partition_size(m)
                          ? -1
                          : floor_half(a_lambda_poly(n).degree() - a_lambda_poly(l).degree() - a_lambda_poly(m).degree());
    const FPoly t{{0, 1}};
    auto module = [&](const Field& f, const Partition& p) {
        return p.empty() ? Rep::zero(jordan_quiver(), f, {0}) : jordan_module(f, p, t);
    };
    return fit_polynomial([&](const Field& f) {
        return Rational(hall_number(module(f, l), module(f, m), module(f, n), budget));
    }, bound, budget);
}

RatPoly classical_hall_poly(const Partition& lambda, const Partition& mu, const Partition& nu, const Budget& budget) {
    static std::mutex mu_lock;
    static std::map<std::tuple<Partition, Partition, Partition>, RatPoly> memo;
    const auto key = std::make_tuple(make_partition(lambda), make_partition(mu), make_partition(nu));
    {
        std::lock_guard<std::mutex> lock(mu_lock);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    RatPoly r = classical_hall_fit(lambda, mu, nu, budget).poly;
    std::lock_guard<std::mutex> lock(mu_lock);
    memo.emplace(key, r);
    return r;
}

// ---------------------------------------------------------------------------
// Discrete classes

QuiverPtr discrete_quiver(const DiscreteClass& c) {
    static std::mutex mu;
    static std::map<std::string, QuiverPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(c.preset); it != cache.end()) return it->second;
    Quiver q = Quiver::preset(c.preset);
    const bool linear = q.preset_name().rfind("a", 0) == 0;
    if (!linear && !q.is_oriented_cycle())
        throw InputError("discrete classes are defined for a<n>, cyclic<n> and jordan; use decomposition symbols for '" +
                         c.preset + "'");
    return cache.emplace(c.preset, share(std::move(q))).first->second;
}

namespace {

Rep uniserial(const QuiverPtr& q, const Field& f, int top, int length) {
    const int n = q->n_vertices();
    if (top < 0 || top >= n || length < 1) throw InputError("bad uniserial label {top, length}");
    DimVec dims(n, 0);
    std::vector<int> vertex(length), local(length);
    for (int k = 0; k < length; ++k) {
        vertex[k] = (top + k) % n;
        local[k] = dims[vertex[k]]++;
    }
    Rep z = Rep::zero(q, f, dims);
    std::vector<Matrix> mats = z.mats();
    for (int k = 0; k + 1 < length; ++k) mats[vertex[k]](local[k + 1], local[k]) = 1;  // arrow i leaves vertex i
    return Rep(q, f, dims, std::move(mats));
}

}  // namespace

Rep discrete_indecomposable(const DiscreteClass& c, const std::vector<int>& label, const Field& f,
                            const Budget& budget) {
    const QuiverPtr q = discrete_quiver(c);
    if (q->is_oriented_cycle()) {
        if (label.size() != 2) throw InputError("cyclic labels are {top vertex, Loewy length}");
        Rep r = uniserial(q, f, label[0], label[1]);
        if (!is_indecomposable(r, budget) || loewy_length(r) != label[1])
            throw VerificationError("uniserial construction is not the expected indecomposable");
        return r;
    }
    static std::mutex mu;
    static std::map<std::tuple<std::string, std::vector<int>, std::string>, Rep> cache;
    const auto key = std::make_tuple(c.preset, label, f->name());
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    q->check_dims(label);
    if (dim_total(label) == 0) throw InputError("a label must be a nonzero dimension vector");
    const auto table = iso_classes(q, label, f, budget);
    std::vector<Rep> found;
    for (const auto& e : table.entries)
        if (is_indecomposable(e.rep, budget)) found.push_back(e.rep);
    if (found.size() != 1)
        throw InputError("dimension vector label has " + std::to_string(found.size()) +
                         " indecomposable classes over " + f->name() + ", expected exactly one");
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, found[0]).first->second;
}

Rep instantiate(const DiscreteClass& c, const Field& f, const Budget& budget) {
    const QuiverPtr q = discrete_quiver(c);
    std::vector<Rep> parts;
    for (const auto& l : c.labels) parts.push_back(discrete_indecomposable(c, l, f, budget));
    return direct_sum(parts, q, f);
}

PolyFit universal_hall_fit(const DiscreteClass& mu, const DiscreteClass& nu, const DiscreteClass& xi,
                           const Budget& budget) {
    if (!(*discrete_quiver(mu) == *discrete_quiver(xi)) || !(*discrete_quiver(nu) == *discrete_quiver(xi)))
        throw InputError("universal_hall_poly: classes live on different quivers");
    // F is at most the number of subspace tuples of dimension dim(nu), a
    // product of Gaussian binomials of degree sum e_i (x_i - e_i).
    const Field f2 = make_field(2, 1);
    const DimVec x = instantiate(xi, f2, budget).dims(), e = instantiate(nu, f2, budget).dims();
    if (!dim_leq(e, x) || !(dim_add(e, instantiate(mu, f2, budget).dims()) == x)) {
        PolyFit zero;
        zero.degree_bound = -1;
        return zero;
    }
    int bound = 0;
    for (size_t i = 0; i < x.size(); ++i) bound += e[i] * (x[i] - e[i]);
    return fit_polynomial([&](const Field& f) {
        return Rational(hall_number(instantiate(mu, f, budget), instantiate(nu, f, budget), instantiate(xi, f, budget), budget));
    }, bound, budget);
}

RatPoly universal_hall_poly(const DiscreteClass& mu, const DiscreteClass& nu, const DiscreteClass& xi,
                            const Budget& budget) {
    return universal_hall_fit(mu, nu, xi, budget).poly;
}

RatPoly exceptional_poly(int m) {
    if (m < 0) throw InputError("exceptional_poly: m must be >= 0");
    return RatPoly(std::vector<Rational>(m + 1, Rational(1)));
}

}  // namespace hallkit
