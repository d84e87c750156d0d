#pragma once

// Concrete quiver representations over a finite field and the homological
// toolkit on them.

#include <functional>
#include <memory>
#include <vector>

#include "hallkit/gfq.hpp"
#include "hallkit/quiver.hpp"
#include "hallkit/upoly.hpp"

namespace hallkit {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// One matrix per arrow a, of shape dims[h(a)] x dims[t(a)].
class Rep {
public:
    Rep(QuiverPtr quiver, Field field, DimVec dims, std::vector<Matrix> mats);
    static Rep zero(QuiverPtr quiver, Field field, DimVec dims);

    const Quiver& quiver() const { return *quiver_; }
    const QuiverPtr& quiver_ptr() const { return quiver_; }
    const FieldCtx& field() const { return *field_; }
    const Field& field_ptr() const { return field_; }
    const DimVec& dims() const { return dims_; }
    const std::vector<Matrix>& mats() const { return mats_; }
    const Matrix& mat(int arrow) const { return mats_[arrow]; }
    int total_dim() const { return dim_total(dims_); }
    bool is_zero() const { return total_dim() == 0; }

    /// Same quiver and same field.
    bool compatible(const Rep& o) const;
    bool operator==(const Rep& o) const { return compatible(o) && dims_ == o.dims_ && mats_ == o.mats_; }

private:
    QuiverPtr quiver_;
    Field field_;
    DimVec dims_;
    std::vector<Matrix> mats_;
};

/// A vertex-indexed family of linear maps phi_i : M_i -> N_i, each stored as
/// an N_i x M_i matrix.
using Morphism = std::vector<Matrix>;

struct HomBasis {
    std::vector<Morphism> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Basis of the intertwiner space {phi : phi_h M_a = N_a phi_t for every arrow a}.
HomBasis hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);
/// dim Ext^1(M,N) = [M,N] - <dim M, dim N>.
int ext_dim(const Rep& m, const Rep& n);

bool is_intertwiner(const Rep& m, const Rep& n, const Morphism& phi);
bool is_iso_morphism(const FieldCtx& f, const Morphism& phi);
bool is_nilpotent_morphism(const FieldCtx& f, const Morphism& phi);
Morphism compose(const FieldCtx& f, const Morphism& psi, const Morphism& phi);  // psi o phi

/// Visits every F_q-linear combination of the basis exactly once (internally
/// an odometer over the F_p-span, one addition per step). Stops early when
/// the visitor returns true; returns whether it stopped early.
bool for_each_in_span(const FieldCtx& f, const std::vector<Morphism>& basis,
                      const std::function<bool(const Morphism&)>& visit);

/// q^n as an unsigned count, or nullopt past `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t q, int n, std::uint64_t cap);

/// |Aut(M)|. Enumerates End(M) when q^[M,M] fits the candidate budget;
/// otherwise splits M into indecomposables and counts units of End(M) through
/// its semisimple quotient, prod GL_m(F_{q^f}) times q^{dim rad}.
BigInt aut_size(const Rep& m, const Budget& budget = default_budget());
/// |Aut(M)| by plain enumeration of End(M); BudgetError past the budget.
BigInt aut_size_enumerated(const Rep& m, const Budget& budget = default_budget());

/// Invertible intertwiner M -> N, if one exists.
std::optional<Morphism> find_isomorphism(const Rep& m, const Rep& n, const Budget& budget = default_budget());
bool is_isomorphic(const Rep& m, const Rep& n, const Budget& budget = default_budget());

Rep direct_sum(const Rep& m, const Rep& n);
Rep direct_sum(const std::vector<Rep>& parts, const QuiverPtr& q, const Field& f);

/// One subspace per vertex, given by basis rows (any basis; normalized to RREF).
using SubspaceTuple = std::vector<Matrix>;

bool is_invariant(const Rep& x, const SubspaceTuple& u_rref);
/// Restriction to U and the induced map on X/U. Sub coordinates follow the
/// RREF basis of each U_i; quotient coordinates follow the standard basis
/// vectors at the non-pivot columns, ascending.
std::pair<Rep, Rep> sub_quotient(const Rep& x, const SubspaceTuple& u);
Rep restrict_to(const Rep& x, const SubspaceTuple& u);

/// GL-action g . M with g_i invertible: (g.M)_a = g_h M_a g_t^{-1}.
Rep transport(const Rep& m, const Morphism& g, const Morphism& g_inv);

// Constructions ------------------------------------------------------------

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last column -a_i.
Matrix companion_matrix(const FieldCtx& f, const FPoly& p);
/// Block-diagonal companion matrices of p^r, one block per part r of lambda.
Matrix jordan_matrix(const FieldCtx& f, const std::vector<int>& lambda, const FPoly& p);
/// M(lambda, p) on the Jordan quiver; InputError when p is not monic irreducible.
Rep jordan_module(const Field& f, const std::vector<int>& lambda, const FPoly& p);
Rep jordan_rep(const Field& f, const Matrix& a);

enum class KroneckerKind { Preprojective, Preinjective };
/// P_r (dims (r, r+1)) or I_r (dims (r+1, r)) from the shift inclusions/projections.
Rep kronecker_preset(KroneckerKind kind, int r, const Field& f);

/// Simple representation at a vertex.
Rep simple_rep(const QuiverPtr& q, const Field& f, int vertex);

}  // namespace hallkit
