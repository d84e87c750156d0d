#include <algorithm>
#include <set>

#include "doctest.h"
#include "hallkit/gfq.hpp"

using namespace hallkit;

namespace {

// Product-of-lower-degree oracle: a monic polynomial of degree d is reducible
// iff it equals a product of two monic polynomials of positive degree.
std::vector<FPoly> all_monic(const FieldCtx& f, int d) {
    std::vector<FPoly> out;
    std::vector<Fel> c(d, 0);
    for (;;) {
        FPoly p;
        p.coeffs = c;
        p.coeffs.push_back(1);
        out.push_back(p);
        int i = 0;
        while (i < d && ++c[i] == f.q()) c[i++] = 0;
        if (i == d) break;
    }
    return out;
}

std::set<std::vector<Fel>> reducible_monic(const FieldCtx& f, int d) {
    std::set<std::vector<Fel>> out;
    for (int a = 1; a < d; ++a)
        for (const auto& x : all_monic(f, a))
            for (const auto& y : all_monic(f, d - a)) out.insert(fpoly_mul(f, x, y).coeffs);
    return out;
}

// Span of a set of row vectors, as a sorted set.
std::set<std::vector<Fel>> span_of(const FieldCtx& f, const std::vector<std::vector<Fel>>& rows, int n) {
    std::set<std::vector<Fel>> s{std::vector<Fel>(n, 0)};
    for (const auto& r : rows) {
        std::set<std::vector<Fel>> next;
        for (const auto& v : s)
            for (int c = 0; c < f.q(); ++c) {
                auto w = v;
                for (int k = 0; k < n; ++k) w[k] = f.add(w[k], f.mul(static_cast<Fel>(c), r[k]));
                next.insert(w);
            }
        s = std::move(next);
    }
    return s;
}

}  // namespace

TEST_CASE("prime fields and extension moduli") {
    auto f2 = make_field(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus().empty());
    CHECK(f2->add(1, 1) == 0);

    // least monic quadratic over F_2 with no root
    auto f4 = make_field(2, 2);
    std::vector<int> expected;
    for (int c = 0; c < 4 && expected.empty(); ++c) {
        const int c0 = c % 2, c1 = c / 2;
        bool root = false;
        for (int x = 0; x < 2; ++x) root |= (x * x + c1 * x + c0) % 2 == 0;
        if (!root) expected = {c0, c1, 1};
    }
    CHECK(f4->modulus() == expected);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
    const Fel t = f4->generator();
    CHECK(f4->mul(t, t) == f4->add(t, 1));

    auto f3 = make_field(3, 1);
    CHECK(f3->inv(2) == 2);
    CHECK_THROWS_AS(f3->inv(0), InputError);
    CHECK_THROWS_AS(make_field(4, 1), InputError);
    CHECK_THROWS_AS(make_field(2, 7), BudgetError);  // 128 > default budget
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (int q : prime_powers(2, 16)) {
        auto f = field_of_order(q);
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f->add(a, 0) == a);
            CHECK(f->mul(a, 1) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
        // q-th power is identity (Frobenius over the full field)
        for (int a = 0; a < q; ++a) CHECK(f->pow(a, q) == a);
    }
}

TEST_CASE("monic irreducibles match a factoring oracle") {
    auto f2 = make_field(2, 1);
    auto l1 = monic_irreducibles(*f2, 1);
    REQUIRE(l1.size() == 2);
    CHECK(fpoly_to_string(*f2, l1[0]) == "t");
    CHECK(fpoly_to_string(*f2, l1[1]) == "t+1");
    auto l2 = monic_irreducibles(*f2, 2);
    REQUIRE(l2.size() == 1);
    CHECK(fpoly_to_string(*f2, l2[0]) == "t^2+t+1");

    for (int q : {2, 3, 4, 5}) {
        auto f = field_of_order(q);
        for (int d = 1; d <= 3; ++d) {
            CAPTURE(q);
            CAPTURE(d);
            const auto red = reducible_monic(*f, d);
            std::vector<FPoly> oracle;
            for (const auto& p : all_monic(*f, d))
                if (!red.count(p.coeffs)) oracle.push_back(p);
            std::sort(oracle.begin(), oracle.end(), fpoly_less);
            CHECK(monic_irreducibles(*f, d) == oracle);
        }
    }
    CHECK(monic_irreducibles(*make_field(3, 1), 2).size() == 3);
}

TEST_CASE("polynomial arithmetic") {
    auto f = make_field(3, 1);
    FPoly a{{1, 1}}, b{{2, 1}};  // t+1, t+2
    auto prod = fpoly_mul(*f, a, b);
    CHECK(prod.coeffs == std::vector<Fel>{2, 0, 1});
    auto [qq, r] = fpoly_divmod(*f, prod, a);
    CHECK(qq == b);
    CHECK(r.is_zero());
    CHECK(fpoly_gcd(*f, prod, fpoly_mul(*f, a, a)) == a);
    auto fac = distinct_irreducible_factors(*f, fpoly_mul(*f, prod, a));
    CHECK(fac == std::vector<FPoly>{a, b});
}

TEST_CASE("row reduction, kernels, inverses") {
    auto f3 = make_field(3, 1);
    auto f2 = make_field(2, 1);
    CHECK(rank(*f3, Matrix::identity(2)) == 2);
    CHECK(rank(*f3, Matrix(2, 2)) == 0);
    CHECK(kernel_basis(*f3, Matrix(2, 2)).rows() == 2);
    Matrix ones(2, 2, {1, 1, 1, 1});
    CHECK(rank(*f2, ones) == 1);
    auto k = kernel_basis(*f2, ones);
    REQUIRE(k.rows() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(0, 1) == 1);

    auto f5 = make_field(5, 1);
    Matrix m(3, 3, {1, 2, 3, 0, 1, 4, 5 % 5, 6 % 5, 0});
    auto inv = inverse(*f5, m);
    REQUIRE(inv);
    CHECK(mat_mul(*f5, m, *inv) == Matrix::identity(3));
    Matrix sing(2, 2, {1, 2, 2, 4});
    CHECK_FALSE(inverse(*f5, sing).has_value());

    auto r = rref(*f5, m);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("minimal polynomial") {
    auto f2 = make_field(2, 1);
    Matrix j2(2, 2, {0, 0, 1, 0});
    CHECK(minimal_polynomial(*f2, j2).coeffs == std::vector<Fel>{0, 0, 1});
    CHECK(minimal_polynomial(*f2, Matrix(2, 2)).coeffs == std::vector<Fel>{0, 1});
    CHECK(minimal_polynomial(*f2, Matrix::identity(3)).coeffs == std::vector<Fel>{1, 1});
}

TEST_CASE("subspace enumeration matches span dedup") {
    auto f2 = make_field(2, 1);
    CHECK(subspaces(f2, 2, 1).size() == 3);
    CHECK(subspaces(make_field(3, 1), 3, 1).size() == 13);
    CHECK(subspaces(f2, 4, 0).size() == 1);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(4, 2, 2) == 35);

    for (int q : {2, 3}) {
        auto f = field_of_order(q);
        for (int n = 0; n <= (q == 2 ? 4 : 3); ++n)
            for (int m = 0; m <= n; ++m) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(m);
                // oracle: spans of all m-tuples of vectors that have dimension m
                std::set<std::set<std::vector<Fel>>> oracle;
                std::vector<std::vector<Fel>> vecs;
                std::uint64_t nv = 1;
                for (int i = 0; i < n; ++i) nv *= q;
                for (std::uint64_t v = 0; v < nv; ++v) {
                    std::vector<Fel> x(n);
                    auto t = v;
                    for (int i = 0; i < n; ++i, t /= q) x[i] = static_cast<Fel>(t % q);
                    vecs.push_back(x);
                }
                std::uint64_t target = 1;
                for (int i = 0; i < m; ++i) target *= q;
                std::vector<size_t> pick(m, 0);
                for (;;) {
                    std::vector<std::vector<Fel>> rows;
                    for (size_t i : pick) rows.push_back(vecs[i]);
                    auto s = span_of(*f, rows, n);
                    if (s.size() == target) oracle.insert(s);
                    int i = m - 1;
                    while (i >= 0 && ++pick[i] == vecs.size()) pick[i--] = 0;
                    if (i < 0) break;
                }
                std::set<std::set<std::vector<Fel>>> got;
                auto subs = subspaces(f, n, m);
                for (const auto& u : subs) {
                    CHECK(rref(*f, u).reduced == u);
                    std::vector<std::vector<Fel>> rows;
                    for (int r = 0; r < u.rows(); ++r) rows.emplace_back(u.row(r).begin(), u.row(r).end());
                    got.insert(span_of(*f, rows, n));
                }
                CHECK(subs.size() == got.size());
                CHECK(got == oracle);
                CHECK(subs.size() == gaussian_binomial(n, m, q));
            }
    }
}

TEST_CASE("budgets are hard errors") {
    Budget tiny;
    tiny.max_subspaces = 10;
    CHECK_THROWS_AS(SubspaceStream(make_field(3, 1), 3, 1, tiny), BudgetError);
}
