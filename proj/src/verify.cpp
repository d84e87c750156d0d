#include "hallkit/verify.hpp"

#include <array>
#include <random>
#include <set>
#include <tuple>

namespace hallkit {

namespace {

std::string dims_to_string(const DimVec& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace

ClassUniverse::ClassUniverse(QuiverPtr q, Field f, DimVec bound, bool nilpotent_only, const Budget& budget)
    : quiver_(std::move(q)), field_(std::move(f)), bound_(std::move(bound)) {
    quiver_->check_dims(bound_);
    for (const auto& d : dims_below(bound_)) {
        table_of_dim_[d] = tables_.size();
        tables_.push_back(iso_classes(quiver_, d, field_, budget));
        const auto& t = tables_.back();
        std::vector<int> ids(t.entries.size(), -1);
        for (size_t i = 0; i < t.entries.size(); ++i) {
            const Rep& r = t.entries[i].rep;
            if (nilpotent_only && !is_nilpotent_rep(r)) continue;
            ids[i] = static_cast<int>(classes_.size());
            std::string name;
            if (quiver_->is_jordan() && nilpotent_only)
                name = partition_to_string(loewy_partition(r, budget));
            else
                name = dims_to_string(d) + "#" + std::to_string(i);
            classes_.push_back({r, t.entries[i].aut_size, std::move(name), {}});
            by_dim_[d].push_back(ids[i]);
        }
        local_to_global_.push_back(std::move(ids));
    }
    for (auto& e : classes_) {
        const Rep& x = e.rep;
        for (const auto& sub_dims : dims_below(x.dims())) {
            for_each_invariant_subspace(x, sub_dims, [&](const SubspaceTuple& u) {
                auto [sub, quot] = sub_quotient(x, u);
                const int n = classify(sub), m = classify(quot);
                if (n < 0 || m < 0) throw VerificationError("sub or quotient of a member fell outside the class universe");
                e.splittings[{m, n}] += 1;
                return false;
            }, budget);
        }
    }
}

int ClassUniverse::classify(const Rep& m) const {
    auto it = table_of_dim_.find(m.dims());
    if (it == table_of_dim_.end()) throw InputError("dimension vector " + dims_to_string(m.dims()) + " outside the universe");
    const int local = tables_[it->second].lookup(m);
    return local < 0 ? -1 : local_to_global_[it->second][local];
}

const std::vector<int>& ClassUniverse::classes_of_dim(const DimVec& d) const {
    static const std::vector<int> none;
    auto it = by_dim_.find(d);
    return it == by_dim_.end() ? none : it->second;
}

BigInt ClassUniverse::F(int m, int n, int x) const {
    const auto& s = classes_[x].splittings;
    auto it = s.find({m, n});
    return it == s.end() ? BigInt(0) : it->second;
}

namespace {

using Quad = std::tuple<int, int, int, int>;

// (A, C) -> [(X, F_{AC}^X)] over the whole universe.
std::map<std::pair<int, int>, std::vector<std::pair<int, BigInt>>> products(const ClassUniverse& u) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, BigInt>>> out;
    for (int x = 0; x < u.size(); ++x)
        for (const auto& [mn, f] : u.splittings(x)) out[mn].push_back({x, f});
    return out;
}

// Pairs (M, N) grouped by dim M + dim N, everything inside the bound.
std::map<DimVec, std::vector<std::pair<int, int>>> pairs_by_sum(const ClassUniverse& u) {
    std::map<DimVec, std::vector<std::pair<int, int>>> out;
    for (int m = 0; m < u.size(); ++m)
        for (int n = 0; n < u.size(); ++n) {
            const DimVec e = dim_add(u.dims(m), u.dims(n));
            if (dim_leq(e, u.bound())) out[e].push_back({m, n});
        }
    return out;
}

std::string names(const ClassUniverse& u, std::initializer_list<int> ids) {
    std::string s = "q=" + std::to_string(u.field()->q());
    for (int c : ids) s += " " + u.name(c);
    return s;
}

}  // namespace

std::vector<CheckReport> green_check(const ClassUniverse& u) {
    const long q = u.field()->q();
    std::map<Quad, Rational> lhs, rhs;
    for (int e = 0; e < u.size(); ++e) {
        const Rational inv_a = Rational(1) / Rational(u.aut(e));
        for (const auto& [mn, f1] : u.splittings(e))
            for (const auto& [xy, f2] : u.splittings(e))
                lhs[{mn.first, mn.second, xy.first, xy.second}] += Rational(f1 * f2) * inv_a;
    }
    const auto prod = products(u);
    for (int m = 0; m < u.size(); ++m)
        for (int n = 0; n < u.size(); ++n) {
            if (!dim_leq(dim_add(u.dims(m), u.dims(n)), u.bound())) continue;
            const BigInt amn = u.aut(m) * u.aut(n);
            for (const auto& [ab, fab] : u.splittings(m))
                for (const auto& [cd, fcd] : u.splittings(n)) {
                    const auto [a, b] = ab;
                    const auto [c, d] = cd;
                    auto pac = prod.find({a, c});
                    auto pbd = prod.find({b, d});
                    if (pac == prod.end() || pbd == prod.end()) continue;
                    const Rational base = rational_pow(q, -euler_form(u.quiver(), u.dims(a), u.dims(d))) *
                                          Rational(fab * fcd * u.aut(a) * u.aut(b) * u.aut(c) * u.aut(d)) /
                                          Rational(amn);
                    for (const auto& [x, fac] : pac->second)
                        for (const auto& [y, fbd] : pbd->second)
                            rhs[{m, n, x, y}] += base * Rational(fac * fbd) / Rational(u.aut(x) * u.aut(y));
                }
        }
    std::vector<CheckReport> out;
    for (const auto& [e, pairs] : pairs_by_sum(u))
        for (const auto& [m, n] : pairs)
            for (const auto& [x, y] : pairs) {
                const Quad k{m, n, x, y};
                auto l = lhs.find(k);
                auto r = rhs.find(k);
                out.push_back(make_report("green", names(u, {m, n, x, y}), l == lhs.end() ? Rational(0) : l->second,
                                          r == rhs.end() ? Rational(0) : r->second));
            }
    return out;
}

std::vector<CheckReport> assoc_check(const ClassUniverse& u) {
    std::map<Quad, BigInt> lhs, rhs;
    for (int m = 0; m < u.size(); ++m)
        for (const auto& [xc, f1] : u.splittings(m)) {
            // left: F_{AB}^X F_{XC}^M
            for (const auto& [ab, f2] : u.splittings(xc.first))
                lhs[{ab.first, ab.second, xc.second, m}] += f1 * f2;
            // right: F_{AX}^M F_{BC}^X with (A, X) = xc
            for (const auto& [bc, f2] : u.splittings(xc.second)) rhs[{xc.first, bc.first, bc.second, m}] += f1 * f2;
        }
    std::vector<CheckReport> out;
    // every triple (A, B, C) with dims adding up to dim M
    for (int m = 0; m < u.size(); ++m) {
        const DimVec& dm = u.dims(m);
        for (int a = 0; a < u.size(); ++a) {
            if (!dim_leq(u.dims(a), dm)) continue;
            const DimVec rest = dim_sub(dm, u.dims(a));
            for (int b = 0; b < u.size(); ++b) {
                if (!dim_leq(u.dims(b), rest)) continue;
                for (int c : u.classes_of_dim(dim_sub(rest, u.dims(b)))) {
                    const Quad k{a, b, c, m};
                    auto l = lhs.find(k);
                    auto r = rhs.find(k);
                    out.push_back(make_report("assoc", names(u, {a, b, c, m}),
                                              Rational(l == lhs.end() ? BigInt(0) : l->second),
                                              Rational(r == rhs.end() ? BigInt(0) : r->second)));
                }
            }
        }
    }
    // a nonzero term outside the enumerated triples would be a bookkeeping bug
    for (const auto* side : {&lhs, &rhs})
        for (const auto& [k, v] : *side) {
            const auto [a, b, c, m] = k;
            if (!(dim_add(dim_add(u.dims(a), u.dims(b)), u.dims(c)) == u.dims(m)))
                out.push_back(make_report("assoc", "stray term " + names(u, {a, b, c, m}), Rational(v), Rational(0)));
        }
    return out;
}

std::vector<CheckReport> riedtmann_check(const ClassUniverse& u) {
    const long q = u.field()->q();
    std::map<std::pair<int, int>, Rational> sums;
    for (int x = 0; x < u.size(); ++x)
        for (const auto& [mn, f] : u.splittings(x))
            sums[mn] += Rational(f * u.aut(mn.first) * u.aut(mn.second)) / Rational(u.aut(x));
    std::vector<CheckReport> out;
    for (const auto& [e, pairs] : pairs_by_sum(u))
        for (const auto& [m, n] : pairs) {
            auto it = sums.find({m, n});
            const Rational s = it == sums.end() ? Rational(0) : it->second;
            out.push_back(make_report("riedtmann", names(u, {m, n}),
                                      s * rational_pow(q, hom_dim(u.rep(m), u.rep(n))),
                                      rational_pow(q, ext_dim(u.rep(m), u.rep(n)))));
        }
    return out;
}

CheckReport riedtmann_sum_check(const Rep& m, const Rep& n, const Budget& budget) {
    if (!m.compatible(n)) throw InputError("riedtmann_sum_check: representations over different quivers or fields");
    const auto table = iso_classes(m.quiver_ptr(), dim_add(m.dims(), n.dims()), m.field_ptr(), budget);
    const long q = m.field().q();
    Rational sum = 0;
    for (const auto& x : table.entries) {
        const BigInt f = hall_number(m, n, x.rep, budget);
        if (f != 0) sum += Rational(f) / Rational(x.aut_size);
    }
    sum *= Rational(aut_size(m, budget) * aut_size(n, budget)) * rational_pow(q, hom_dim(m, n));
    return make_report("riedtmann", "q=" + std::to_string(q) + " dims " + dims_to_string(m.dims()) + " " +
                                        dims_to_string(n.dims()),
                       sum, rational_pow(q, ext_dim(m, n)));
}

std::vector<CheckReport> table_check(const ClassUniverse& u) {
    std::vector<CheckReport> out;
    const long q = u.field()->q();
    for (const auto& t : u.tables()) {
        const std::string inst = "q=" + std::to_string(q) + " dims " + dims_to_string(t.dims);
        BigInt orbits = 0;
        for (size_t i = 0; i < t.entries.size(); ++i) {
            const auto& e = t.entries[i];
            orbits += e.orbit_size;
            out.push_back(make_report("orbit_stabilizer", inst + " #" + std::to_string(i),
                                      Rational(e.orbit_size * e.aut_size), Rational(t.group_order)));
        }
        out.push_back(make_report("orbit_sum", inst, Rational(orbits),
                                  rational_pow(q, u.quiver().entry_count(t.dims))));
    }
    return out;
}

std::vector<CheckReport> defect_check(const ClassUniverse& u) {
    std::vector<CheckReport> out;
    for (int x = 0; x < u.size(); ++x)
        for (const auto& [mn, f] : u.splittings(x))
            out.push_back(make_report("defect", names(u, {mn.first, mn.second, x}),
                                      Rational(defect(u.quiver(), u.dims(mn.first)) +
                                               defect(u.quiver(), u.dims(mn.second))),
                                      Rational(defect(u.quiver(), u.dims(x)))));
    return out;
}

std::vector<CheckReport> euler_check(const QuiverPtr& q, const Field& f, int max_dim, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::uniform_int_distribution<int> entry(0, f->q() - 1);
    auto random_rep = [&](const DimVec& d) {
        std::vector<Matrix> mats;
        for (const auto& a : q->arrows()) {
            Matrix m(d[a.head], d[a.tail]);
            for (auto& x : m.data()) x = static_cast<Fel>(entry(rng));
            mats.push_back(std::move(m));
        }
        return Rep(q, f, d, std::move(mats));
    };
    std::vector<CheckReport> out;
    for (int t = 0; t < trials; ++t) {
        DimVec d(q->n_vertices()), e(q->n_vertices());
        for (auto& x : d) x = dim(rng);
        for (auto& x : e) x = dim(rng);
        const Rep m = random_rep(d), n = random_rep(e);
        out.push_back(make_report("euler", "q=" + std::to_string(f->q()) + " trial " + std::to_string(t) + " " +
                                               dims_to_string(d) + " " + dims_to_string(e),
                                  Rational(euler_form(*q, d, e)), Rational(hom_dim(m, n) - ext_dim(m, n))));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kronecker

std::vector<CheckReport> torsion_split_check(const Field& f, const Budget& budget) {
    const long q = f->q();
    const std::string fq = "q=" + std::to_string(q);
    std::vector<CheckReport> out;
    auto P = [&](int r) { return kronecker_preset(KroneckerKind::Preprojective, r, f); };
    auto I = [&](int r) { return kronecker_preset(KroneckerKind::Preinjective, r, f); };
    const QuiverPtr kq = P(0).quiver_ptr();
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) {
            if (a < 0 && b < 0) continue;
            // a or b = -1 stands for a zero summand
            const Rep xt = a >= 0 ? I(a) : Rep::zero(kq, f, {0, 0});
            const Rep xf = b >= 0 ? P(b) : Rep::zero(kq, f, {0, 0});
            const Rep x = direct_sum(xf, xt);
            const std::string inst = fq + " X_t=" + (a >= 0 ? "I" + std::to_string(a) : "0") +
                                     " X_f=" + (b >= 0 ? "P" + std::to_string(b) : "0");
            out.push_back(make_report("torsion_aut", inst, Rational(aut_size(x, budget)),
                                      Rational(aut_size(xf, budget) * aut_size(xt, budget)) *
                                          rational_pow(q, euler_form(*kq, xf.dims(), xt.dims()))));
            out.push_back(make_report("torsion_hom_t_f", inst, Rational(hom_dim(xt, xf)), Rational(0)));
            if (dim_leq(x.dims(), {2, 2})) {
                const auto table = iso_classes(kq, x.dims(), f, budget);
                for (size_t i = 0; i < table.entries.size(); ++i) {
                    const Rep& e = table.entries[i].rep;
                    const bool is_x = is_isomorphic(e, x, budget);
                    out.push_back(make_report("torsion_delta", inst + " E#" + std::to_string(i),
                                              Rational(hall_number(xf, xt, e, budget)), Rational(is_x ? 1 : 0)));
                }
            } else {
                // no extension of X_f by X_t other than the split one
                out.push_back(make_report("torsion_delta", inst + " E=X", Rational(hall_number(xf, xt, x, budget)), Rational(1)));
                out.push_back(make_report("torsion_ext", inst, Rational(ext_dim(xf, xt)), Rational(0)));
            }
        }
    return out;
}

std::vector<CheckReport> kronecker_regular_check(const Field& f, int n, const Budget& budget) {
    if (n < 0 || n > 1) throw InputError("kronecker_regular_check supports n = 0 or 1");
    const long q = f->q();
    const std::string fq = "q=" + std::to_string(q);
    auto P = [&](int r) { return kronecker_preset(KroneckerKind::Preprojective, r, f); };
    auto I = [&](int r) { return kronecker_preset(KroneckerKind::Preinjective, r, f); };
    std::vector<SegreSymbol> inside, outside;
    if (n == 0) {
        inside.push_back(make_segre({{{1}, 1}}));
    } else {
        inside.push_back(make_segre({{{1}, 1}, {{1}, 1}}));
        inside.push_back(make_segre({{{2}, 1}}));
        inside.push_back(make_segre({{{1}, 2}}));
        outside.push_back(make_segre({{{1, 1}, 1}}));
    }
    std::vector<CheckReport> out;
    for (const auto& s : inside)
        for (const auto& r : decomp_enumerate(make_decomp({}, {}, s), f, budget)) {
            const std::string rn = fq + " R in " + segre_to_string(s) + " " + dims_to_string(r.dims());
            const Rational ar(aut_size(r, budget));
            for (int m = 0; m <= n; ++m) {
                const std::string inst = rn + " m=" + std::to_string(m);
                out.push_back(make_report("kronecker_IP", inst, Rational(hall_number(I(n - m), P(m), r, budget)),
                                          ar / Rational(q - 1)));
                out.push_back(make_report("kronecker_PI_literal", inst, Rational(hall_number(P(m), I(n - m), r, budget)),
                                          Rational(0)));
                out.push_back(make_report("kronecker_RP", inst, Rational(hall_number(r, P(m), P(m + n + 1), budget)),
                                          Rational(1)));
            }
        }
    for (const auto& s : outside)
        for (const auto& r : decomp_enumerate(make_decomp({}, {}, s), f, budget))
            for (int m = 0; m <= n; ++m)
                out.push_back(make_report("kronecker_RP_outside",
                                          fq + " R in " + segre_to_string(s) + " m=" + std::to_string(m),
                                          Rational(hall_number(r, P(m), P(m + n + 1), budget)), Rational(0)));
    out.push_back(make_report("grassmannian_P2", fq, Rational(grassmannian_count(P(2), {0, 1}, budget)),
                              Rational(q * q + q + 1)));
    return out;
}

// ---------------------------------------------------------------------------
// Segre example

std::vector<CheckReport> example_reproduce(const Field& f, const Budget& budget) {
    const long q = f->q();
    if (q < 3) throw InputError("the example needs q >= 3 (three distinct linear polynomials)");
    const std::string fq = "q=" + std::to_string(q);
    auto lin = [&](Fel x) { return FPoly{{f->neg(x), 1}}; };
    auto M = [&](const Partition& l, Fel x) { return jordan_module(f, l, lin(x)); };
    static const QuiverPtr jq = share(Quiver::jordan());

    using Triple = std::array<Fel, 3>;
    std::vector<Triple> triples;
    std::vector<std::pair<Fel, Fel>> pairs;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            if (x == y) continue;
            if (x < y) pairs.push_back({static_cast<Fel>(x), static_cast<Fel>(y)});
            for (int z = 0; z < q; ++z)
                if (z != x && z != y) triples.push_back({static_cast<Fel>(x), static_cast<Fel>(y), static_cast<Fel>(z)});
        }
    std::vector<Rep> rs, ss, ts;
    for (const auto& [x, y, z] : triples) {
        rs.push_back(direct_sum({M({1, 1}, x), M({1, 1, 1}, y), M({2, 1}, z)}, jq, f));
        ts.push_back(direct_sum({M({1, 1, 1}, x), M({2, 1, 1}, y), M({2, 1}, z)}, jq, f));
    }
    for (const auto& [x, y] : pairs) ss.push_back(direct_sum({M({1}, x), M({1}, y)}, jq, f));

    const Rational top(q * q + q + 1), next(q * q + q);
    auto same_set = [](std::pair<Fel, Fel> s, Fel a, Fel b) {
        return (s.first == a && s.second == b) || (s.first == b && s.second == a);
    };
    auto tname = [](const char* what, const Triple& t) {
        return std::string(what) + "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    auto pname = [](const std::pair<Fel, Fel>& p) {
        return "S(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    };

    std::vector<CheckReport> out;
    const size_t nr = rs.size(), ns = ss.size(), nt = ts.size();
    std::vector<BigInt> F(nr * ns * nt);
    auto at = [&](size_t r, size_t s, size_t t) -> BigInt& { return F[(r * ns + s) * nt + t]; };
    for (size_t r = 0; r < nr; ++r)
        for (size_t s = 0; s < ns; ++s)
            for (size_t t = 0; t < nt; ++t) {
                at(r, s, t) = hall_number(rs[r], ss[s], ts[t], budget);
                const Triple& R = triples[r];
                const Triple& T = triples[t];
                Rational expect = 0;
                if (R == T && same_set(pairs[s], R[0], R[1]))
                    expect = top;
                else if (R == Triple{T[2], T[0], T[1]} && same_set(pairs[s], R[0], R[2]))
                    expect = next;
                out.push_back(make_report("example_F", fq + " " + tname("R", R) + " " + pname(pairs[s]) + " " + tname("T", T),
                                          Rational(at(r, s, t)), expect));
            }

    // single sums
    for (size_t s = 0; s < ns; ++s)
        for (size_t t = 0; t < nt; ++t) {
            BigInt sum = 0;
            for (size_t r = 0; r < nr; ++r) sum += at(r, s, t);
            const Triple& T = triples[t];
            const Rational expect = same_set(pairs[s], T[0], T[1]) ? top : same_set(pairs[s], T[1], T[2]) ? next : Rational(0);
            out.push_back(make_report("example_sum_R", fq + " " + pname(pairs[s]) + " " + tname("T", T), Rational(sum), expect));
        }
    for (size_t r = 0; r < nr; ++r)
        for (size_t t = 0; t < nt; ++t) {
            BigInt sum = 0;
            for (size_t s = 0; s < ns; ++s) sum += at(r, s, t);
            const Triple& R = triples[r];
            const Triple& T = triples[t];
            const Rational expect = R == T ? top : R == Triple{T[2], T[0], T[1]} ? next : Rational(0);
            out.push_back(make_report("example_sum_S", fq + " " + tname("R", R) + " " + tname("T", T), Rational(sum), expect));
        }
    for (size_t r = 0; r < nr; ++r)
        for (size_t s = 0; s < ns; ++s) {
            BigInt sum = 0;
            for (size_t t = 0; t < nt; ++t) sum += at(r, s, t);
            const Triple& R = triples[r];
            const Rational expect = same_set(pairs[s], R[0], R[1]) ? top : same_set(pairs[s], R[0], R[2]) ? next : Rational(0);
            out.push_back(make_report("example_sum_T", fq + " " + tname("R", R) + " " + pname(pairs[s]), Rational(sum), expect));
        }

    // double sums
    const Rational dbl(2 * q * q + 2 * q + 1);
    for (size_t t = 0; t < nt; ++t) {
        BigInt sum = 0;
        for (size_t r = 0; r < nr; ++r)
            for (size_t s = 0; s < ns; ++s) sum += at(r, s, t);
        out.push_back(make_report("example_sum_RS", fq + " " + tname("T", triples[t]), Rational(sum), dbl));
    }
    for (size_t r = 0; r < nr; ++r) {
        BigInt sum = 0;
        for (size_t s = 0; s < ns; ++s)
            for (size_t t = 0; t < nt; ++t) sum += at(r, s, t);
        out.push_back(make_report("example_sum_ST", fq + " " + tname("R", triples[r]), Rational(sum), dbl));
    }
    for (size_t s = 0; s < ns; ++s) {
        BigInt sum = 0;
        for (size_t r = 0; r < nr; ++r)
            for (size_t t = 0; t < nt; ++t) sum += at(r, s, t);
        out.push_back(make_report("example_sum_RT", fq + " " + pname(pairs[s]), Rational(sum), dbl * Rational(2 * (q - 2))));
    }

    // symbolic route
    const SegreSymbol rho = make_segre({{{1, 1}, 1}, {{1, 1, 1}, 1}, {{2, 1}, 1}});
    const SegreSymbol sigma = make_segre({{{1}, 1}, {{1}, 1}});
    const SegreSymbol tau = make_segre({{{1, 1, 1}, 1}, {{2, 1, 1}, 1}, {{2, 1}, 1}});
    const RatPoly poly = segre_hall_poly(rho, sigma, tau, budget);
    const RatPoly expect_poly(std::vector<Rational>{1, 2, 2});
    for (int i = 0; i <= std::max(poly.degree(), expect_poly.degree()); ++i)
        out.push_back(make_report("example_symbolic", "coefficient of T^" + std::to_string(i), poly.coeff(i),
                                  expect_poly.coeff(i)));
    const RatPoly T = RatPoly::T();
    const RatPoly fixed_s = n_sigma_poly(tau) * poly;
    const RatPoly fixed_s_expect =
        n_sigma_poly(sigma) * expect_poly * (T - RatPoly::constant(2)) * Rational(2);
    for (int i = 0; i <= std::max(fixed_s.degree(), fixed_s_expect.degree()); ++i)
        out.push_back(make_report("example_symbolic_fixed_S", "coefficient of T^" + std::to_string(i), fixed_s.coeff(i),
                                  fixed_s_expect.coeff(i)));
    struct Ingredient {
        Partition lam, mu, nu;
        RatPoly expect;
    };
    const std::vector<Ingredient> ingredients = {
        {{1, 1}, {1}, {1, 1, 1}, RatPoly(std::vector<Rational>{1, 1, 1})},
        {{2, 1}, {1}, {2, 1, 1}, RatPoly(std::vector<Rational>{0, 1, 1})},
        {{1, 1}, {1}, {2, 1}, RatPoly::constant(1)},
        {{1, 1, 1}, {1}, {2, 1, 1}, RatPoly::constant(1)},
    };
    for (const auto& g : ingredients) {
        const RatPoly p = classical_hall_poly(g.lam, g.mu, g.nu, budget);
        const std::string inst = partition_to_string(g.lam) + " " + partition_to_string(g.mu) + " " + partition_to_string(g.nu);
        for (int i = 0; i <= std::max(p.degree(), g.expect.degree()); ++i)
            out.push_back(make_report("example_ingredient", inst + " coefficient of T^" + std::to_string(i), p.coeff(i),
                                      g.expect.coeff(i)));
    }
    for (auto& r : segre_sum_check(rho, sigma, tau, f, budget)) out.push_back(std::move(r));
    return out;
}

}  // namespace hallkit
