#pragma once

// Shared helpers for the test binaries: random representations and small
// brute-force oracles.

#include <random>

#include "hallkit/count.hpp"

namespace testsupport {

using namespace hallkit;

inline Matrix random_matrix(std::mt19937_64& rng, const FieldCtx& f, int r, int c) {
    std::uniform_int_distribution<int> d(0, f.q() - 1);
    Matrix m(r, c);
    for (auto& x : m.data()) x = static_cast<Fel>(d(rng));
    return m;
}

inline Rep random_rep(std::mt19937_64& rng, const QuiverPtr& q, const Field& f, const DimVec& d) {
    std::vector<Matrix> mats;
    for (const auto& a : q->arrows()) mats.push_back(random_matrix(rng, *f, d[a.head], d[a.tail]));
    return Rep(q, f, d, std::move(mats));
}

inline DimVec random_dims(std::mt19937_64& rng, int n, int maxd) {
    std::uniform_int_distribution<int> d(0, maxd);
    DimVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

/// Counts intertwiners M -> N by enumerating every vertex-indexed tuple of matrices.
inline std::uint64_t brute_hom_count(const Rep& m, const Rep& n) {
    const auto& f = m.field();
    const int nv = m.quiver().n_vertices();
    int entries = 0;
    for (int i = 0; i < nv; ++i) entries += m.dims()[i] * n.dims()[i];
    std::uint64_t total = 1;
    for (int i = 0; i < entries; ++i) total *= f.q();
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto v = idx;
        Morphism phi;
        for (int i = 0; i < nv; ++i) {
            Matrix p(n.dims()[i], m.dims()[i]);
            for (auto& x : p.data()) {
                x = static_cast<Fel>(v % f.q());
                v /= f.q();
            }
            phi.push_back(p);
        }
        if (is_intertwiner(m, n, phi)) ++count;
    }
    return count;
}

inline FPoly linear(const FieldCtx& f, int root) {  // t - root
    return FPoly{{f.neg(static_cast<Fel>(root)), 1}};
}

}  // namespace testsupport
