#pragma once

// Quivers, dimension vectors, the Euler form, the radical vector of an affine
// quiver, and the defect.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hallkit/error.hpp"

namespace hallkit {

using DimVec = std::vector<int>;

struct Arrow {
    int tail;
    int head;
    bool operator==(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver(int n_vertices, std::vector<Arrow> arrows, std::string preset = {});

    /// Presets: "jordan", "kronecker", "a<n>" (linear 0->1->...), "cyclic<n>".
    static Quiver preset(const std::string& name);
    static Quiver jordan();
    static Quiver kronecker();
    static Quiver linear(int n);
    static Quiver cyclic(int n);

    int n_vertices() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& preset_name() const { return preset_; }
    bool connected() const { return connected_; }

    /// An oriented cycle (cyclic<n>, including the Jordan quiver as n = 1).
    bool is_oriented_cycle() const;
    bool is_jordan() const { return n_ == 1 && arrows_.size() == 1; }
    bool is_kronecker() const;

    void check_dims(const DimVec& d) const;
    /// Number of matrix entries of a representation of dimension d.
    int entry_count(const DimVec& d) const;

    bool operator==(const Quiver& o) const { return n_ == o.n_ && arrows_ == o.arrows_; }

private:
    int n_;
    std::vector<Arrow> arrows_;
    std::string preset_;
    bool connected_ = true;
};

/// <d,e> = sum_i d_i e_i - sum_a d_{t(a)} e_{h(a)}.
long euler_form(const Quiver& q, const DimVec& d, const DimVec& e);

/// Minimal strictly positive integer generator of the radical of the
/// symmetrized Euler form; InputError if the quiver is not affine.
DimVec delta(const Quiver& q);

/// <delta, e>.
long defect(const Quiver& q, const DimVec& e);

DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_sub(const DimVec& a, const DimVec& b);
bool dim_leq(const DimVec& a, const DimVec& b);
int dim_total(const DimVec& d);
/// All e with 0 <= e <= d componentwise, lexicographic.
std::vector<DimVec> dims_below(const DimVec& d);

}  // namespace hallkit
