#pragma once

// Exhaustive checks of the Hall-algebra identities over complete tables of
// isomorphism classes, plus the Kronecker and Segre worked examples.

#include <map>
#include <string>
#include <vector>

#include "hallkit/count.hpp"
#include "hallkit/report.hpp"
#include "hallkit/segre.hpp"

namespace hallkit {

/// All isomorphism classes with dimension vector <= bound (componentwise),
/// optionally only the nilpotent ones, with every Hall number among them.
/// Sub- and quotient modules of a member are members, so the F table is closed.
class ClassUniverse {
public:
    ClassUniverse(QuiverPtr q, Field f, DimVec bound, bool nilpotent_only, const Budget& budget = default_budget());

    const Quiver& quiver() const { return *quiver_; }
    const Field& field() const { return field_; }
    const DimVec& bound() const { return bound_; }
    int size() const { return static_cast<int>(classes_.size()); }

    const Rep& rep(int c) const { return classes_[c].rep; }
    const DimVec& dims(int c) const { return classes_[c].rep.dims(); }
    const BigInt& aut(int c) const { return classes_[c].aut; }
    const std::string& name(int c) const { return classes_[c].name; }
    /// Global id of the class of m, -1 if it is filtered out.
    int classify(const Rep& m) const;
    const std::vector<int>& classes_of_dim(const DimVec& d) const;
    const std::vector<IsoClassTable>& tables() const { return tables_; }

    /// (quotient M, sub N) -> F_{MN}^X for the nonzero values.
    const std::map<std::pair<int, int>, BigInt>& splittings(int x) const { return classes_[x].splittings; }
    BigInt F(int m, int n, int x) const;

private:
    struct Entry {
        Rep rep;
        BigInt aut;
        std::string name;
        std::map<std::pair<int, int>, BigInt> splittings;
    };
    QuiverPtr quiver_;
    Field field_;
    DimVec bound_;
    std::vector<IsoClassTable> tables_;
    std::map<DimVec, size_t> table_of_dim_;
    std::vector<std::vector<int>> local_to_global_;
    std::map<DimVec, std::vector<int>> by_dim_;
    std::vector<Entry> classes_;
};

/// sum_E F_{MN}^E F_{XY}^E / a_E against the four-fold sum with the twist
/// q^{-<A,D>}, for every (M,N,X,Y) with dim M + dim N = dim X + dim Y in range.
std::vector<CheckReport> green_check(const ClassUniverse& u);
/// sum_X F_{AB}^X F_{XC}^M = sum_X F_{AX}^M F_{BC}^X for every (A,B,C,M) in range.
std::vector<CheckReport> assoc_check(const ClassUniverse& u);
/// sum_X F_{MN}^X |Hom(M,N)| a_M a_N / a_X = q^{[M,N]^1} for every pair in range.
std::vector<CheckReport> riedtmann_check(const ClassUniverse& u);
/// The same sum for one pair, over a fresh table for dim M + dim N.
CheckReport riedtmann_sum_check(const Rep& m, const Rep& n, const Budget& budget = default_budget());
/// Orbit sizes add up to the size of the representation space and
/// orbit * stabilizer = |GL| on every table.
std::vector<CheckReport> table_check(const ClassUniverse& u);
/// defect(X) = defect(M) + defect(N) whenever F_{MN}^X != 0 (affine quivers).
std::vector<CheckReport> defect_check(const ClassUniverse& u);
/// <dim M, dim N> = [M,N] - [M,N]^1 on random pairs.
std::vector<CheckReport> euler_check(const QuiverPtr& q, const Field& f, int max_dim, int trials, std::uint64_t seed);

/// Kronecker X = X_f + X_t with X_f = P_b preprojective, X_t = I_a preinjective:
/// F_{X_f X_t}^E = [E = X] and a_X = a_{X_f} a_{X_t} q^{<X_f,X_t>}.
std::vector<CheckReport> torsion_split_check(const Field& f, const Budget& budget = default_budget());
/// For regular R of dimension (n+1)(1,1) with at most one summand per tube:
/// F_{I_{n-m} P_m}^R = a_R/(q-1) and F_{R P_m}^{P_{m+n+1}} = 1; the literal
/// order F_{P_m I_{n-m}}^R is reported as 0, and R with two summands in one
/// tube as F_{R P_m}^{P_{m+n+1}} = 0. Also |Gr(P_2,(0,1))| = q^2+q+1.
std::vector<CheckReport> kronecker_regular_check(const Field& f, int n, const Budget& budget = default_budget());
/// The Segre example with rho = {(1,1),(1,1,1),(2,1)}, sigma = {(1),(1)},
/// tau = {(1,1,1),(2,1,1),(2,1)}: pointwise case analysis, single and double
/// sums, and agreement with the symbolic route. Needs q >= 3.
std::vector<CheckReport> example_reproduce(const Field& f, const Budget& budget = default_budget());

}  // namespace hallkit
