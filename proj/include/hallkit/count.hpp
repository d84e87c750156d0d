#pragma once

// Counting engine: invariant subspaces, Hall numbers, quiver Grassmannians,
// isomorphism-class tables and Krull-Schmidt decomposition.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hallkit/partition.hpp"
#include "hallkit/rep.hpp"

namespace hallkit {

// Similarity classes of square matrices --------------------------------------

/// For each monic irreducible factor p of the minimal polynomial (sorted), the
/// partition r_1 >= r_2 >= ... of the blocks k[t]/(p^{r_i}). A complete
/// similarity invariant.
struct JordanType {
    std::vector<std::pair<FPoly, Partition>> parts;
    bool operator==(const JordanType&) const = default;
};

JordanType jordan_type(const FieldCtx& f, const Matrix& a, const Budget& budget = default_budget());
/// Partition of the p-primary part of a (empty if p does not divide the minimal polynomial).
Partition primary_partition(const FieldCtx& f, const Matrix& a, const FPoly& p);

// Subrepresentations ---------------------------------------------------------

/// Number of subspace tuples with the given dimensions (before the invariance filter), saturating.
std::uint64_t subspace_tuple_count(const Rep& x, const DimVec& e);

/// Visits every arrow-invariant tuple (U_i <= X_i) with dim U = e once, as RREF
/// bases, vertex 0 slowest. Stops when the visitor returns true.
void for_each_invariant_subspace(const Rep& x, const DimVec& e,
                                 const std::function<bool(const SubspaceTuple&)>& visit,
                                 const Budget& budget = default_budget());
std::vector<SubspaceTuple> invariant_subspaces(const Rep& x, const DimVec& e, const Budget& budget = default_budget());

/// F_{MN}^X = #{U <= X : U ~ N, X/U ~ M}. On the Jordan quiver this runs
/// through the primary decomposition; elsewhere it is hall_number_naive.
BigInt hall_number(const Rep& m, const Rep& n, const Rep& x, const Budget& budget = default_budget());
/// Direct enumeration of invariant subspaces with is_isomorphic on both ends.
BigInt hall_number_naive(const Rep& m, const Rep& n, const Rep& x, const Budget& budget = default_budget());
/// P_{MN}^X = F_{MN}^X a_M a_N.
BigInt p_number(const Rep& m, const Rep& n, const Rep& x, const Budget& budget = default_budget());
/// |Gr(X, e)|, all subrepresentations of dimension e.
BigInt grassmannian_count(const Rep& x, const DimVec& e, const Budget& budget = default_budget());

// Isomorphism classes --------------------------------------------------------

/// |GL_d(F_q)|.
BigInt gl_order(long q, int d);

/// Position of a representation in the lexicographic stream of all
/// representations of its dimension vector (arrow by arrow, row-major, first
/// entry most significant).
std::uint64_t rep_index(const Rep& m);
Rep rep_from_index(const QuiverPtr& q, const Field& f, const DimVec& d, std::uint64_t index);

struct IsoClass {
    Rep rep;
    BigInt orbit_size;
    BigInt aut_size;
};

struct IsoClassTable {
    QuiverPtr quiver;
    Field field;
    DimVec dims;
    BigInt group_order;  // prod_i |GL_{d_i}(F_q)|
    std::vector<IsoClass> entries;
    std::vector<std::int32_t> class_of;  // by rep_index

    int lookup(const Rep& m) const { return class_of[rep_index(m)]; }
};

/// Streams all representations in lexicographic order; the first member of
/// each GL-orbit is its representative. Orbit sizes are counted while the
/// orbit is marked; automorphism counts come from aut_size independently.
IsoClassTable iso_classes(const QuiverPtr& q, const DimVec& d, const Field& f, const Budget& budget = default_budget());
/// Oracle: representatives by binning the same stream with is_isomorphic.
std::vector<Rep> iso_classes_by_binning(const QuiverPtr& q, const DimVec& d, const Field& f,
                                        const Budget& budget = default_budget());

// Krull-Schmidt --------------------------------------------------------------

/// Endomorphism that is neither nilpotent nor invertible, if one exists.
/// Exhaustive over End(M) when no cheap candidate works (BudgetError past the budget).
std::optional<Morphism> splitting_endomorphism(const Rep& m, const Budget& budget = default_budget());
bool is_indecomposable(const Rep& m, const Budget& budget = default_budget());
/// Indecomposable summands, split recursively along Fitting decompositions
/// M = Im phi^n (+) Ker phi^n.
std::vector<Rep> decompose(const Rep& m, const Budget& budget = default_budget());

/// Block matrix on the direct sum of all vertex spaces: the sum of the arrow maps.
Matrix arrow_operator(const Rep& m);
/// Every long enough path acts as zero.
bool is_nilpotent_rep(const Rep& m);

}  // namespace hallkit
