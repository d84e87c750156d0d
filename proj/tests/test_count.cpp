#include <map>

#include "doctest.h"
#include "support.hpp"

using namespace hallkit;
using namespace testsupport;

namespace {
const QuiverPtr J = share(Quiver::jordan());
const QuiverPtr A2 = share(Quiver::linear(2));
const QuiverPtr K = share(Quiver::kronecker());
const QuiverPtr C2 = share(Quiver::cyclic(2));

Rep S(const Field& f) { return jordan_rep(f, Matrix(1, 1)); }
}  // namespace

TEST_CASE("invariant subspaces") {
    auto f2 = make_field(2, 1);
    auto zero2 = jordan_rep(f2, Matrix(2, 2));
    auto j2 = jordan_rep(f2, Matrix(2, 2, {0, 0, 1, 0}));
    CHECK(invariant_subspaces(j2, {0}).size() == 1);
    CHECK(invariant_subspaces(zero2, {1}).size() == 3);
    CHECK(invariant_subspaces(j2, {1}).size() == 1);
    for (const auto& u : invariant_subspaces(j2, {1})) CHECK(is_invariant(j2, u));
}

TEST_CASE("hall numbers") {
    auto f2 = make_field(2, 1);
    auto f3 = make_field(3, 1);
    auto zero2 = jordan_rep(f2, Matrix(2, 2));
    auto j2 = jordan_rep(f2, Matrix(2, 2, {0, 0, 1, 0}));
    CHECK(hall_number(S(f2), S(f2), zero2) == 3);
    CHECK(hall_number(S(f2), S(f2), j2) == 1);
    CHECK(hall_number(S(f2), zero2, j2) == 0);
    CHECK(p_number(S(f2), S(f2), zero2) == 3);
    CHECK(p_number(S(f3), S(f3), jordan_rep(f3, Matrix(2, 2))) == 16);
    CHECK(p_number(S(f2), zero2, j2) == 0);
}

TEST_CASE("primary fast path agrees with naive enumeration") {
    std::mt19937_64 rng(21);
    for (int q : {2, 3}) {
        auto f = field_of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 1 + trial % 4;
            auto x = random_rep(rng, J, f, {n});
            std::uniform_int_distribution<int> k(0, n);
            const int e = k(rng);
            auto subs = invariant_subspaces(x, {e});
            if (subs.empty()) continue;
            auto [sub, quot] = sub_quotient(x, subs[rng() % subs.size()]);
            CHECK(hall_number(quot, sub, x) == hall_number_naive(quot, sub, x));
            auto other = random_rep(rng, J, f, {e});
            CHECK(hall_number(quot, other, x) == hall_number_naive(quot, other, x));
        }
    }
}

TEST_CASE("jordan type is a complete similarity invariant") {
    auto f2 = make_field(2, 1);
    auto table = iso_classes(J, {3}, f2);
    std::vector<JordanType> types;
    for (const auto& e : table.entries) types.push_back(jordan_type(*f2, e.rep.mat(0)));
    for (size_t i = 0; i < types.size(); ++i)
        for (size_t j = i + 1; j < types.size(); ++j) CHECK_FALSE(types[i] == types[j]);
    auto m = jordan_module(f2, {2, 1}, FPoly{{1, 1, 1}});
    auto t = jordan_type(*f2, m.mat(0));
    REQUIRE(t.parts.size() == 1);
    CHECK(t.parts[0].second == Partition{2, 1});
}

TEST_CASE("grassmannians") {
    for (int q : {2, 3}) {
        auto f = field_of_order(q);
        auto p2 = kronecker_preset(KroneckerKind::Preprojective, 2, f);
        CHECK(grassmannian_count(p2, {0, 1}) == q * q + q + 1);
        CHECK(grassmannian_count(p2, p2.dims()) == 1);
        CHECK(grassmannian_count(p2, {0, 0}) == 1);
    }
}

TEST_CASE("iso class tables") {
    auto f2 = make_field(2, 1);
    CHECK(iso_classes(J, {2}, f2).entries.size() == 6);
    for (int q : {2, 3}) CHECK(iso_classes(A2, {1, 1}, field_of_order(q)).entries.size() == 2);
    CHECK(iso_classes(K, {0, 0}, f2).entries.size() == 1);

    struct Case {
        QuiverPtr q;
        DimVec d;
        int field;
    };
    std::vector<Case> cases = {{J, {2}, 2}, {J, {3}, 2}, {J, {2}, 3}, {A2, {2, 2}, 2}, {A2, {2, 1}, 3},
                               {K, {1, 1}, 2}, {K, {1, 1}, 3}, {K, {2, 1}, 2}, {C2, {1, 1}, 3}, {C2, {2, 1}, 2}};
    for (const auto& c : cases) {
        auto f = field_of_order(c.field);
        auto t = iso_classes(c.q, c.d, f);
        BigInt orbit_sum = 0;
        for (const auto& e : t.entries) {
            orbit_sum += e.orbit_size;
            CHECK(e.orbit_size * e.aut_size == t.group_order);
            CHECK(t.lookup(e.rep) == &e - t.entries.data());
        }
        BigInt all;
        mpz_ui_pow_ui(all.get_mpz_t(), c.field, c.q->entry_count(c.d));
        CHECK(orbit_sum == all);
        // binning with is_isomorphic yields the same representatives
        auto reps = iso_classes_by_binning(c.q, c.d, f);
        REQUIRE(reps.size() == t.entries.size());
        for (size_t i = 0; i < reps.size(); ++i) CHECK(reps[i] == t.entries[i].rep);
    }
}

TEST_CASE("isomorphism is an equivalence on table members") {
    auto f2 = make_field(2, 1);
    auto t = iso_classes(K, {1, 2}, f2);
    std::mt19937_64 rng(4);
    std::vector<Rep> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(rep_from_index(K, f2, {1, 2}, rng() % t.class_of.size()));
    for (const auto& a : sample) {
        CHECK(is_isomorphic(a, a));
        for (const auto& b : sample) {
            const bool ab = is_isomorphic(a, b);
            CHECK(ab == is_isomorphic(b, a));
            CHECK(ab == (t.lookup(a) == t.lookup(b)));
            for (const auto& c : sample)
                if (ab && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
        }
    }
}

TEST_CASE("indecomposables and decomposition") {
    auto f2 = make_field(2, 1);
    auto s = S(f2);
    auto j2 = jordan_rep(f2, Matrix(2, 2, {0, 0, 1, 0}));
    CHECK(is_indecomposable(s));
    CHECK_FALSE(is_indecomposable(direct_sum(s, s)));
    for (int q : {2, 3}) {
        auto f = field_of_order(q);
        for (int l = 0; l < q; ++l) {
            Rep r(K, f, {1, 1}, {Matrix(1, 1, {1}), Matrix(1, 1, {static_cast<Fel>(l)})});
            CHECK(hom_dim(r, r) == 1);
            CHECK(is_indecomposable(r));
        }
    }
    CHECK(decompose(j2).size() == 1);
    auto parts = decompose(direct_sum(s, j2));
    REQUIRE(parts.size() == 2);
    CHECK(((is_isomorphic(parts[0], s) && is_isomorphic(parts[1], j2)) ||
           (is_isomorphic(parts[1], s) && is_isomorphic(parts[0], j2))));
    auto semis = decompose(jordan_rep(f2, Matrix(2, 2)));
    REQUIRE(semis.size() == 2);
    for (const auto& p : semis) CHECK(is_isomorphic(p, s));

    // decompose reassembles to the original up to isomorphism
    std::mt19937_64 rng(8);
    for (const auto& q : {J, A2, K}) {
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_rep(rng, q, f2, random_dims(rng, q->n_vertices(), 3));
            auto ps = decompose(m);
            for (const auto& p : ps) CHECK(is_indecomposable(p));
            CHECK(is_isomorphic(direct_sum(ps, q, f2), m));
        }
    }
}

TEST_CASE("riedtmann sums over small tables") {
    // sum_X F_MN^X |Hom(M,N)| a_M a_N / a_X = q^{ext(M,N)}
    struct Case {
        QuiverPtr q;
        DimVec dm, dn;
        int field;
    };
    std::vector<Case> cases = {{J, {1}, {1}, 2}, {J, {1}, {1}, 3}, {A2, {1, 0}, {0, 1}, 2},
                               {A2, {0, 1}, {1, 0}, 3}, {K, {1, 0}, {0, 1}, 2}, {K, {0, 1}, {1, 0}, 2}};
    for (const auto& c : cases) {
        auto f = field_of_order(c.field);
        auto tm = iso_classes(c.q, c.dm, f), tn = iso_classes(c.q, c.dn, f);
        auto tx = iso_classes(c.q, dim_add(c.dm, c.dn), f);
        for (const auto& m : tm.entries)
            for (const auto& n : tn.entries) {
                Rational sum = 0;
                for (const auto& x : tx.entries)
                    sum += Rational(hall_number(m.rep, n.rep, x.rep) * m.aut_size * n.aut_size) / Rational(x.aut_size);
                sum *= rational_pow(c.field, hom_dim(m.rep, n.rep));
                CHECK(sum == rational_pow(c.field, ext_dim(m.rep, n.rep)));
            }
    }
}

TEST_CASE("defect is additive on short exact sequences") {
    auto f2 = make_field(2, 1);
    auto t11 = iso_classes(K, {1, 1}, f2);
    auto t10 = iso_classes(K, {1, 0}, f2), t01 = iso_classes(K, {0, 1}, f2);
    for (const auto& x : t11.entries)
        for (const auto* tm : {&t10, &t01})
            for (const auto* tn : {&t10, &t01})
                for (const auto& m : tm->entries)
                    for (const auto& n : tn->entries)
                        if (hall_number(m.rep, n.rep, x.rep) > 0)
                            CHECK(defect(*K, x.rep.dims()) == defect(*K, m.rep.dims()) + defect(*K, n.rep.dims()));
}

TEST_CASE("nilpotency") {
    auto f2 = make_field(2, 1);
    CHECK(is_nilpotent_rep(jordan_rep(f2, Matrix(2, 2, {0, 0, 1, 0}))));
    CHECK_FALSE(is_nilpotent_rep(jordan_rep(f2, Matrix::identity(1))));
    Rep c(C2, f2, {1, 1}, {Matrix(1, 1, {1}), Matrix(1, 1, {1})});
    CHECK_FALSE(is_nilpotent_rep(c));
    Rep c0(C2, f2, {1, 1}, {Matrix(1, 1, {1}), Matrix(1, 1, {0})});
    CHECK(is_nilpotent_rep(c0));
    CHECK(is_nilpotent_rep(rep_from_index(K, f2, {2, 2}, 77)));
}
