#pragma once

// Automorphism polynomials of nilpotent Jordan modules, Loewy partitions, and
// universal Hall polynomials recovered from exact counts by interpolation.

#include <string>
#include <vector>

#include "hallkit/count.hpp"
#include "hallkit/partition.hpp"
#include "hallkit/upoly.hpp"

namespace hallkit {

/// a_lambda(T) = T^{sum min(i,j) l_i l_j} prod_i (1-T^-1)...(1-T^-l_i); |Aut M(lambda,p)| at T = q^{deg p}.
RatPoly a_lambda_poly(const Partition& lambda);

/// Loewy lengths of the indecomposable summands of a nilpotent module over the
/// Jordan quiver or an oriented cycle. InputError otherwise.
Partition loewy_partition(const Rep& m, const Budget& budget = default_budget());
/// Smallest L with every path of length L acting as zero.
int loewy_length(const Rep& m);

/// A polynomial recovered from samples at prime powers, with the samples it came from.
struct PolyFit {
    RatPoly poly;
    int degree_bound = 0;
    std::vector<Sample> samples;  // all of them lie on poly; more than degree_bound+1
};

/// Samples value(q) at q = 2, 3, 4, 5, 7, ... until degree_bound + 2 points
/// (at least 2) are in hand, skipping fields where a budget is exceeded, and
/// interpolates. `max_q` caps the search.
PolyFit fit_polynomial(const std::function<Rational(const Field&)>& value, int degree_bound,
                       const Budget& budget = default_budget(), int extra_samples = 1, int max_q = 64);

/// F_{lambda mu}^{nu}(q): submodules of M(nu,t) isomorphic to M(mu,t) with
/// quotient isomorphic to M(lambda,t). Degree bound
/// floor((deg a_nu - deg a_lambda - deg a_mu)/2); zero when sizes do not add up.
PolyFit classical_hall_fit(const Partition& lambda, const Partition& mu, const Partition& nu,
                           const Budget& budget = default_budget());
RatPoly classical_hall_poly(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const Budget& budget = default_budget());

/// A module class given by a multiset of indecomposable labels, the same over
/// every field. On a<n> a label is a dimension vector (a positive root); on
/// cyclic<n> and jordan it is {top vertex, Loewy length}.
struct DiscreteClass {
    std::string preset;
    std::vector<std::vector<int>> labels;
};

QuiverPtr discrete_quiver(const DiscreteClass& c);
/// The unique indecomposable for one label over f; InputError when a label
/// has no indecomposable or more than one.
Rep discrete_indecomposable(const DiscreteClass& c, const std::vector<int>& label, const Field& f,
                            const Budget& budget = default_budget());
Rep instantiate(const DiscreteClass& c, const Field& f, const Budget& budget = default_budget());

/// F_{mu nu}^{xi}: nu is the submodule class, mu the quotient class. Degree
/// bound sum_i e_i (x_i - e_i) for e = dim nu, x = dim xi (the Grassmannian degree).
PolyFit universal_hall_fit(const DiscreteClass& mu, const DiscreteClass& nu, const DiscreteClass& xi,
                           const Budget& budget = default_budget());
RatPoly universal_hall_poly(const DiscreteClass& mu, const DiscreteClass& nu, const DiscreteClass& xi,
                            const Budget& budget = default_budget());

/// 1 + T + ... + T^m, the count F_{M M^m}^{M^{m+1}} for exceptional M.
RatPoly exceptional_poly(int m);

}  // namespace hallkit
