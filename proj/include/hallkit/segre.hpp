#pragma once

// Segre symbols over the Jordan quiver, their counting polynomials and the
// symbolic Segre Hall polynomial; decomposition symbols for the Kronecker
// quiver with tubes parameterized by the points of P^1.

#include <vector>

#include "hallkit/count.hpp"
#include "hallkit/hallpoly.hpp"
#include "hallkit/partition.hpp"
#include "hallkit/report.hpp"
#include "hallkit/upoly.hpp"

namespace hallkit {

struct SegreEntry {
    Partition lambda;
    int degree = 1;
    auto operator<=>(const SegreEntry&) const = default;
};

/// Multiset of (partition, degree), stored sorted.
using SegreSymbol = std::vector<SegreEntry>;

/// Validates (nonempty partitions, degree >= 1) and sorts.
SegreSymbol make_segre(std::vector<SegreEntry> entries);
/// sum |lambda_i| d_i, the dimension of every module in the class.
int segre_weight(const SegreSymbol& s);
/// Every Segre symbol of the given weight.
std::vector<SegreSymbol> segre_symbols_of_weight(int w);
std::string segre_to_string(const SegreSymbol& s);

/// Number of monic irreducible polynomials of degree d, (1/d) sum_{e|d} mu(e) T^{d/e}.
RatPoly phi_poly(int d);
/// prod over distinct partitions of (multiplicity)!.
BigInt z_sigma(const std::vector<Partition>& parts);

/// Where the points of a class live: monic irreducibles of k[t] (Jordan
/// quiver), or closed points of P^1 (Kronecker tubes; T+1 points of degree 1).
enum class PointSet { AffineLine, ProjectiveLine };

RatPoly point_count_poly(int d, PointSet where = PointSet::AffineLine);
/// n_sigma = prod_d P_d (P_d - 1) ... (P_d - r_d + 1) / z_d with P_d the point count.
RatPoly n_sigma_poly(const SegreSymbol& s, PointSet where = PointSet::AffineLine);
/// a_sigma = prod_i a_{lambda_i}(T^{d_i}).
RatPoly a_sigma_poly(const SegreSymbol& s);

/// Every isomorphism class in S(sigma, F_q) as a Jordan-quiver module
/// (direct sum of M(lambda_i, p_i) over distinct monic irreducibles p_i).
/// InputError when the class is empty over this field, unless allow_empty.
std::vector<Rep> enumerate_class(const SegreSymbol& s, const Field& f, bool allow_empty = false);

/// Symbolic F_{rho sigma}^{tau}: per degree, sum over distinct placements of
/// the zero-padded rho and sigma parts against tau's of the products of
/// classical Hall polynomials in T^d, then multiply over degrees.
RatPoly segre_hall_poly(const SegreSymbol& rho, const SegreSymbol& sigma, const SegreSymbol& tau,
                        const Budget& budget = default_budget());

/// Brute-force sums of F_{RS}^T over the enumerated classes: for every fixed
/// T (sum over R,S), fixed R (sum over S,T, weighted by n_rho against n_tau)
/// and fixed S (weighted by n_sigma).
std::vector<CheckReport> segre_sum_check(const SegreSymbol& rho, const SegreSymbol& sigma, const SegreSymbol& tau,
                                         const Field& f, const Budget& budget = default_budget());

// Kronecker decomposition symbols --------------------------------------------

/// Discrete part P_r / I_r labels plus a regular Segre symbol over P^1.
struct DecompSymbol {
    std::vector<int> P;
    std::vector<int> I;
    SegreSymbol regular;
    bool operator==(const DecompSymbol&) const = default;
};

DecompSymbol make_decomp(std::vector<int> p, std::vector<int> i, SegreSymbol regular);
DimVec decomp_dims(const DecompSymbol& a);
std::string decomp_to_string(const DecompSymbol& a);

/// A closed point of P^1: a monic irreducible p, or infinity (degree 1).
struct KPoint {
    bool infinity = false;
    FPoly p;
    int degree() const { return infinity ? 1 : p.degree(); }
};

std::vector<KPoint> kronecker_points(const FieldCtx& f, int d, const Budget& budget = default_budget());
/// Regular Kronecker module of dimension (m,m), m = deg x |lambda|: maps (I, J(lambda,p))
/// at a finite point, (J(lambda,t), I) at infinity.
Rep kronecker_regular(const Partition& lambda, const KPoint& x, const Field& f);

/// All classes in S(alpha, F_q): the discrete part plus each placement of the
/// regular part at distinct points.
std::vector<Rep> decomp_enumerate(const DecompSymbol& a, const Field& f, const Budget& budget = default_budget());
/// The decomposition symbol of a Kronecker representation.
DecompSymbol decomp_classify(const Rep& m, const Budget& budget = default_budget());

/// sum_{A in S(alpha), B in S(beta)} F_{AB}^C at one field, computed for every
/// C in S(gamma); VerificationError if the value depends on C.
BigInt decomp_class_sum(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                        const Field& f, const Budget& budget = default_budget());

/// Interpolates decomp_class_sum over q = 2,3,4,5,...
PolyFit decomp_hall_fit(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                        const Budget& budget = default_budget());
RatPoly decomp_hall_poly(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma,
                         const Budget& budget = default_budget());
/// max(0, floor((deg a_gamma - deg a_alpha - deg a_beta)/2)) + deg n_alpha + deg n_beta + 2.
int decomp_degree_bound(const DecompSymbol& alpha, const DecompSymbol& beta, const DecompSymbol& gamma);
/// [A,A] for the members A of S(alpha) (the degree of a_alpha).
int decomp_end_dim(const DecompSymbol& a);

}  // namespace hallkit
