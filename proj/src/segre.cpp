#include "hallkit/segre.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace hallkit {

SegreSymbol make_segre(std::vector<SegreEntry> entries) {
    for (auto& e : entries) {
        if (e.degree < 1) throw InputError("Segre symbol degrees must be >= 1");
        e.lambda = make_partition(std::move(e.lambda));
        if (e.lambda.empty()) throw InputError("Segre symbol partitions must be nonempty");
    }
    std::sort(entries.begin(), entries.end());
    return entries;
}

int segre_weight(const SegreSymbol& s) {
    int w = 0;
    for (const auto& e : s) w += partition_size(e.lambda) * e.degree;
    return w;
}

std::vector<SegreSymbol> segre_symbols_of_weight(int w) {
    if (w < 0) throw InputError("weight must be >= 0");
    std::vector<SegreEntry> atoms;
    for (int d = 1; d <= w; ++d)
        for (int n = 1; n * d <= w; ++n)
            for (auto& l : partitions_of(n)) atoms.push_back({l, d});
    std::sort(atoms.begin(), atoms.end());
    std::vector<SegreSymbol> out;
    SegreSymbol cur;
    std::function<void(size_t, int)> go = [&](size_t from, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t i = from; i < atoms.size(); ++i) {
            const int wt = partition_size(atoms[i].lambda) * atoms[i].degree;
            if (wt > left) continue;
            cur.push_back(atoms[i]);
            go(i, left - wt);
            cur.pop_back();
        }
    };
    go(0, w);
    return out;
}

std::string segre_to_string(const SegreSymbol& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += "(" + partition_to_string(s[i].lambda) + "," + std::to_string(s[i].degree) + ")";
    }
    return out + "}";
}

namespace {

int moebius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

RatPoly phi_poly(int d) {
    if (d < 1) throw InputError("phi_poly: degree must be >= 1");
    RatPoly r;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0 && moebius(e)) r += RatPoly::monomial(d / e, Rational(moebius(e), d));
    return r;
}

BigInt z_sigma(const std::vector<Partition>& parts) {
    std::map<Partition, int> mult;
    for (const auto& p : parts) ++mult[p];
    BigInt z = 1;
    for (const auto& [p, m] : mult) z *= factorial(m);
    return z;
}

RatPoly point_count_poly(int d, PointSet where) {
    if (where == PointSet::ProjectiveLine && d == 1) return RatPoly::T() + RatPoly::constant(1);
    return phi_poly(d);
}

RatPoly n_sigma_poly(const SegreSymbol& s, PointSet where) {
    std::map<int, std::vector<Partition>> by_degree;
    for (const auto& e : s) by_degree[e.degree].push_back(e.lambda);
    RatPoly r = RatPoly::constant(1);
    for (const auto& [d, parts] : by_degree) {
        const RatPoly pd = point_count_poly(d, where);
        for (size_t k = 0; k < parts.size(); ++k) r *= pd - RatPoly::constant(static_cast<long>(k));
        r = r * Rational(BigInt(1), z_sigma(parts));
    }
    return r;
}

RatPoly a_sigma_poly(const SegreSymbol& s) {
    RatPoly r = RatPoly::constant(1);
    for (const auto& e : s) r *= a_lambda_poly(e.lambda).compose_power(e.degree);
    return r;
}

namespace {

// Injective assignments of entries to point indices (points of equal degree
// distinct), taking equal entries in increasing order so each class is seen once.
void for_each_placement(const SegreSymbol& s, const std::vector<size_t>& npoints,
                        const std::function<void(const std::vector<size_t>&)>& visit) {
    std::vector<size_t> idx(s.size());
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == s.size()) {
            visit(idx);
            return;
        }
        const size_t start = i > 0 && s[i] == s[i - 1] ? idx[i - 1] + 1 : 0;
        for (size_t k = start; k < npoints[i]; ++k) {
            bool used = false;
            for (size_t j = 0; j < i && !used; ++j) used = s[j].degree == s[i].degree && idx[j] == k;
            if (used) continue;
            idx[i] = k;
            go(i + 1);
        }
    };
    go(0);
}

const QuiverPtr& jordan_q() {
    static const QuiverPtr q = share(Quiver::jordan());
    return q;
}

}  // namespace

std::vector<Rep> enumerate_class(const SegreSymbol& s, const Field& f, bool allow_empty) {
    std::map<int, std::vector<FPoly>> points;
    std::vector<size_t> npoints;
    for (const auto& e : s) {
        auto it = points.find(e.degree);
        if (it == points.end()) it = points.emplace(e.degree, monic_irreducibles(*f, e.degree)).first;
        npoints.push_back(it->second.size());
    }
    std::vector<Rep> out;
    for_each_placement(s, npoints, [&](const std::vector<size_t>& idx) {
        std::vector<Rep> parts;
        for (size_t i = 0; i < s.size(); ++i) parts.push_back(jordan_module(f, s[i].lambda, points[s[i].degree][idx[i]]));
        out.push_back(direct_sum(parts, jordan_q(), f));
    });
    if (out.empty() && !allow_empty)
        throw InputError("class " + segre_to_string(s) + " is empty over " + f->name());
    return out;
}

RatPoly segre_hall_poly(const SegreSymbol& rho, const SegreSymbol& sigma, const SegreSymbol& tau,
                        const Budget& budget) {
    std::map<int, std::array<std::vector<Partition>, 3>> by_degree;
    for (const auto& e : rho) by_degree[e.degree][0].push_back(e.lambda);
    for (const auto& e : sigma) by_degree[e.degree][1].push_back(e.lambda);
    for (const auto& e : tau) by_degree[e.degree][2].push_back(e.lambda);
    RatPoly result = RatPoly::constant(1);
    for (auto& [d, parts] : by_degree) {
        auto& [a, b, c] = parts;
        if (a.size() > c.size() || b.size() > c.size()) return RatPoly();
        a.resize(c.size());
        b.resize(c.size());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        RatPoly sum;
        do {
            do {
                RatPoly term = RatPoly::constant(1);
                for (size_t i = 0; i < c.size() && !term.is_zero(); ++i)
                    term *= classical_hall_poly(a[i], b[i], c[i], budget).compose_power(d);
                sum += term;
            } while (std::next_permutation(b.begin(), b.end()));
        } while (std::next_permutation(a.begin(), a.end()));
        result *= sum;
        if (result.is_zero()) return result;
    }
    return result;
}

std::vector<CheckReport> segre_sum_check(const SegreSymbol& rho, const SegreSymbol& sigma, const SegreSymbol& tau,
                                         const Field& f, const Budget& budget) {
    const auto rs = enumerate_class(rho, f, true), ss = enumerate_class(sigma, f, true),
               ts = enumerate_class(tau, f, true);
    const long q = f->q();
    const Rational fq = segre_hall_poly(rho, sigma, tau, budget).eval(q);
    const Rational nr = n_sigma_poly(rho).eval(q), ns = n_sigma_poly(sigma).eval(q), nt = n_sigma_poly(tau).eval(q);
    const std::string field = "q=" + std::to_string(q);

    std::vector<CheckReport> out;
    out.push_back(make_report("class_size", field + " rho", Rational(static_cast<long>(rs.size())), nr));
    out.push_back(make_report("class_size", field + " sigma", Rational(static_cast<long>(ss.size())), ns));
    out.push_back(make_report("class_size", field + " tau", Rational(static_cast<long>(ts.size())), nt));

    std::vector<BigInt> by_r(rs.size()), by_s(ss.size()), by_t(ts.size());
    for (size_t r = 0; r < rs.size(); ++r)
        for (size_t s = 0; s < ss.size(); ++s)
            for (size_t t = 0; t < ts.size(); ++t) {
                const BigInt h = hall_number(rs[r], ss[s], ts[t], budget);
                by_r[r] += h;
                by_s[s] += h;
                by_t[t] += h;
            }
    for (size_t t = 0; t < ts.size(); ++t)
        out.push_back(make_report("segre_fixed_T", field + " T#" + std::to_string(t), Rational(by_t[t]), fq));
    for (size_t r = 0; r < rs.size(); ++r)
        out.push_back(make_report("segre_fixed_R", field + " R#" + std::to_string(r), nr * Rational(by_r[r]), nt * fq));
    for (size_t s = 0; s < ss.size(); ++s)
        out.push_back(make_report("segre_fixed_S", field + " S#" + std::to_string(s), ns * Rational(by_s[s]), nt * fq));
    return out;
}

// ---------------------------------------------------------------------------
// Kronecker

DecompSymbol make_decomp(std::vector<int> p, std::vector<int> i, SegreSymbol regular) {
    for (int r : p)
        if (r < 0) throw InputError("P_r needs r >= 0");
    for (int r : i)
        if (r < 0) throw InputError("I_r needs r >= 0");
    std::sort(p.begin(), p.end());
    std::sort(i.begin(), i.end());
    return {std::move(p), std::move(i), make_segre(std::move(regular))};
}

DimVec decomp_dims(const DecompSymbol& a) {
    DimVec d{0, 0};
    for (int r : a.P) d = dim_add(d, {r, r + 1});
    for (int r : a.I) d = dim_add(d, {r + 1, r});
    const int w = segre_weight(a.regular);
    return dim_add(d, {w, w});
}

std::string decomp_to_string(const DecompSymbol& a) {
    std::string out;
    for (int r : a.P) out += (out.empty() ? "" : "+") + std::string("P") + std::to_string(r);
    for (int r : a.I) out += (out.empty() ? "" : "+") + std::string("I") + std::to_string(r);
    if (!a.regular.empty()) out += (out.empty() ? "" : "+") + std::string("R") + segre_to_string(a.regular);
    return out.empty() ? "0" : out;
}

std::vector<KPoint> kronecker_points(const FieldCtx& f, int d, const Budget& budget) {
    std::vector<KPoint> out;
    for (auto& p : monic_irreducibles(f, d, budget)) out.push_back({false, std::move(p)});
    if (d == 1) out.push_back({true, FPoly{{0, 1}}});
    return out;
}

namespace {

const QuiverPtr& kronecker_q() {
    static const QuiverPtr q = share(Quiver::kronecker());
    return q;
}

}  // namespace

Rep kronecker_regular(const Partition& lambda, const KPoint& x, const Field& f) {
    const Partition l = make_partition(lambda);
    if (l.empty()) throw InputError("kronecker_regular: empty partition");
    if (x.infinity) {
        const Matrix j = jordan_matrix(*f, l, FPoly{{0, 1}});
        return Rep(kronecker_q(), f, {j.rows(), j.rows()}, {j, Matrix::identity(j.rows())});
    }
    if (!fpoly_is_irreducible(*f, x.p) || !x.p.is_monic()) throw InputError("kronecker_regular: point is not monic irreducible");
    const Matrix j = jordan_matrix(*f, l, x.p);
    return Rep(kronecker_q(), f, {j.rows(), j.rows()}, {Matrix::identity(j.rows()), j});
}

std::vector<Rep> decomp_enumerate(const DecompSymbol& a, const Field& f, const Budget& budget) {
    std::vector<Rep> discrete;
    for (int r : a.P) discrete.push_back(kronecker_preset(KroneckerKind::Preprojective, r, f));
    for (int r : a.I) discrete.push_back(kronecker_preset(KroneckerKind::Preinjective, r, f));
    std::map<int, std::vector<KPoint>> points;
    std::vector<size_t> npoints;
    for (const auto& e : a.regular) {
        auto it = points.find(e.degree);
        if (it == points.end()) it = points.emplace(e.degree, kronecker_points(*f, e.degree, budget)).first;
        npoints.push_back(it->second.size());
    }
    std::vector<Rep> out;
    for_each_placement(a.regular, npoints, [&](const std::vector<size_t>& idx) {
        std::vector<Rep> parts = discrete;
        for (size_t i = 0; i < a.regular.size(); ++i)
            parts.push_back(kronecker_regular(a.regular[i].lambda, points[a.regular[i].degree][idx[i]], f));
        out.push_back(direct_sum(parts, kronecker_q(), f));
    });
    return out;
}

DecompSymbol decomp_classify(const Rep& m, const Budget& budget) {
    if (!m.quiver().is_kronecker()) throw InputError("decomp_classify needs a Kronecker representation");
    const FieldCtx& f = m.field();
    std::vector<int> p, i;
    // point key: (infinity, coefficients) -> Loewy lengths at that point
    std::map<std::pair<bool, std::vector<Fel>>, std::pair<KPoint, std::vector<int>>> tubes;
    for (const auto& part : decompose(m, budget)) {
        const int x = part.dims()[0], y = part.dims()[1];
        if (y == x + 1) {
            p.push_back(x);
            continue;
        }
        if (x == y + 1) {
            i.push_back(y);
            continue;
        }
        if (x != y) throw VerificationError("indecomposable Kronecker summand with dimension vector off the defect range");
        const Matrix& a = part.mat(0);
        const Matrix& b = part.mat(1);
        KPoint pt;
        JordanType jt;
        if (auto ai = inverse(f, a)) {
            jt = jordan_type(f, mat_mul(f, *ai, b), budget);
        } else {
            auto bi = inverse(f, b);
            if (!bi) throw VerificationError("regular indecomposable with neither map invertible");
            jt = jordan_type(f, mat_mul(f, *bi, a), budget);
            pt.infinity = true;
            if (jt.parts.size() != 1 || !(jt.parts[0].first == FPoly{{0, 1}}))
                throw VerificationError("summand at infinity is not nilpotent");
        }
        if (jt.parts.size() != 1 || jt.parts[0].second.size() != 1)
            throw VerificationError("regular summand is not indecomposable");
        if (!pt.infinity) pt.p = jt.parts[0].first;
        auto& slot = tubes[{pt.infinity, pt.infinity ? std::vector<Fel>{} : pt.p.coeffs}];
        slot.first = pt;
        slot.second.push_back(jt.parts[0].second[0]);
    }
    SegreSymbol reg;
    for (auto& [key, val] : tubes) reg.push_back({make_partition(val.second), val.first.degree()});
    return make_decomp(std::move(p), std::move(i), std::move(reg));
}

BigInt decomp_class_sum(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                        const Field& f, const Budget& budget) {
    const auto cs = decomp_enumerate(gamma, f, budget);
    if (cs.empty()) throw InputError("class " + decomp_to_string(gamma) + " is empty over " + f->name());
    const DimVec db = decomp_dims(beta);
    if (!dim_leq(db, decomp_dims(gamma)) || !(dim_add(db, decomp_dims(alpha)) == decomp_dims(gamma))) return 0;
    std::optional<BigInt> value;
    for (const auto& c : cs) {
        BigInt count = 0;
        for_each_invariant_subspace(c, db, [&](const SubspaceTuple& u) {
            auto [sub, quot] = sub_quotient(c, u);
            if (decomp_classify(sub, budget) == beta && decomp_classify(quot, budget) == alpha) ++count;
            return false;
        }, budget);
        if (value && *value != count)
            throw VerificationError("class sum for " + decomp_to_string(gamma) + " depends on the chosen member");
        value = count;
    }
    return *value;
}

int decomp_end_dim(const DecompSymbol& a) {
    for (int q : prime_powers(2, 64)) {
        Budget b = default_budget();
        b.max_field_size = std::max<std::uint64_t>(b.max_field_size, q);
        const Field f = field_of_order(q, b);
        const auto ms = decomp_enumerate(a, f);
        if (!ms.empty()) return hom_dim(ms.front(), ms.front());
    }
    throw BudgetError("class " + decomp_to_string(a) + " is empty over every field up to 64 elements");
}

int decomp_degree_bound(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma) {
    const long diff = decomp_end_dim(gamma) - decomp_end_dim(alpha) - decomp_end_dim(beta);
    const int half = diff > 0 ? static_cast<int>(diff / 2) : 0;
    return half + n_sigma_poly(alpha.regular, PointSet::ProjectiveLine).degree() +
           n_sigma_poly(beta.regular, PointSet::ProjectiveLine).degree() + 2;
}

PolyFit decomp_hall_fit(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                        const Budget& budget) {
    if (!(dim_add(decomp_dims(alpha), decomp_dims(beta)) == decomp_dims(gamma))) {
        PolyFit zero;
        zero.degree_bound = -1;
        return zero;
    }
    const int bound = decomp_degree_bound(alpha, beta, gamma);
    return fit_polynomial([&](const Field& f) { return Rational(decomp_class_sum(alpha, beta, gamma, f, budget)); },
                          bound, budget);
}

RatPoly decomp_hall_poly(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                         const Budget& budget) {
    return decomp_hall_fit(alpha, beta, gamma, budget).poly;
}

}  // namespace hallkit
