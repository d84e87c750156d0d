#include "hallkit/quiver.hpp"

#include <algorithm>
#include <numeric>

#include "hallkit/upoly.hpp"

namespace hallkit {

Quiver::Quiver(int n_vertices, std::vector<Arrow> arrows, std::string preset)
    : n_(n_vertices), arrows_(std::move(arrows)), preset_(std::move(preset)) {
    if (n_ < 1) throw InputError("a quiver needs at least one vertex");
    for (const auto& a : arrows_)
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw InputError("arrow endpoint out of range");
    // union-find connectivity
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : arrows_) parent[find(a.tail)] = find(a.head);
    for (int v = 0; v < n_; ++v)
        if (find(v) != find(0)) connected_ = false;
}

Quiver Quiver::jordan() { return Quiver(1, {{0, 0}}, "jordan"); }
Quiver Quiver::kronecker() { return Quiver(2, {{0, 1}, {0, 1}}, "kronecker"); }

Quiver Quiver::linear(int n) {
    if (n < 1) throw InputError("a_n needs n >= 1");
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    return Quiver(n, std::move(arrows), "a" + std::to_string(n));
}

Quiver Quiver::cyclic(int n) {
    if (n < 1) throw InputError("cyclic_n needs n >= 1");
    std::vector<Arrow> arrows;
    for (int i = 0; i < n; ++i) arrows.push_back({i, (i + 1) % n});
    return Quiver(n, std::move(arrows), n == 1 ? "jordan" : "cyclic" + std::to_string(n));
}

Quiver Quiver::preset(const std::string& name) {
    std::string s = name;
    s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "jordan") return jordan();
    if (s == "kronecker") return kronecker();
    auto number_after = [&](const std::string& prefix) -> int {
        const std::string rest = s.substr(prefix.size());
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
            throw InputError("bad quiver preset '" + name + "'");
        return std::stoi(rest);
    };
    if (s.rfind("cyclic", 0) == 0) return cyclic(number_after("cyclic"));
    if (s.rfind("a", 0) == 0) return linear(number_after("a"));
    throw InputError("unknown quiver preset '" + name + "'");
}

bool Quiver::is_oriented_cycle() const {
    if (static_cast<int>(arrows_.size()) != n_) return false;
    for (int i = 0; i < n_; ++i)
        if (!(arrows_[i].tail == i && arrows_[i].head == (i + 1) % n_)) return false;
    return true;
}

bool Quiver::is_kronecker() const {
    return n_ == 2 && arrows_.size() == 2 && arrows_[0] == Arrow{0, 1} && arrows_[1] == Arrow{0, 1};
}

void Quiver::check_dims(const DimVec& d) const {
    if (static_cast<int>(d.size()) != n_)
        throw InputError("dimension vector has " + std::to_string(d.size()) + " entries, quiver has " +
                         std::to_string(n_) + " vertices");
    for (int x : d)
        if (x < 0) throw InputError("negative entry in dimension vector");
}

int Quiver::entry_count(const DimVec& d) const {
    int n = 0;
    for (const auto& a : arrows_) n += d[a.tail] * d[a.head];
    return n;
}

long euler_form(const Quiver& q, const DimVec& d, const DimVec& e) {
    q.check_dims(d);
    q.check_dims(e);
    long s = 0;
    for (int i = 0; i < q.n_vertices(); ++i) s += static_cast<long>(d[i]) * e[i];
    for (const auto& a : q.arrows()) s -= static_cast<long>(d[a.tail]) * e[a.head];
    return s;
}

DimVec delta(const Quiver& q) {
    const int n = q.n_vertices();
    // symmetrized form matrix C_ij = <e_i,e_j> + <e_j,e_i>, integer kernel by exact rational elimination
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] += 2;
    for (const auto& a : q.arrows()) {
        c[a.tail][a.head] -= 1;
        c[a.head][a.tail] -= 1;
    }
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (c[r][col] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(c[p], c[row]);
        const Rational inv = 1 / c[row][col];
        for (auto& x : c[row]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || c[r][col] == 0) continue;
            const Rational f = c[r][col];
            for (int k = 0; k < n; ++k) c[r][k] -= f * c[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    if (n - row != 1) throw InputError("quiver is not affine: radical of the symmetrized Euler form has dimension " +
                                       std::to_string(n - row));
    int free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<Rational> v(n, 0);
    v[free_col] = 1;
    for (int r = 0; r < row; ++r) v[pivots[r]] = -c[r][free_col];
    // clear denominators, normalize to coprime positive entries
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, BigInt(x.get_den()));
    std::vector<BigInt> w(n);
    for (int i = 0; i < n; ++i) w[i] = BigInt(v[i] * Rational(l));
    BigInt g = 0;
    for (const auto& x : w) g = gcd(g, x);
    const bool neg = w[0] < 0;
    DimVec out(n);
    for (int i = 0; i < n; ++i) {
        BigInt x = w[i] / g;
        if (neg) x = -x;
        if (x <= 0) throw InputError("quiver is not affine: radical contains no strictly positive vector");
        out[i] = static_cast<int>(x.get_si());
    }
    return out;
}

long defect(const Quiver& q, const DimVec& e) { return euler_form(q, delta(q), e); }

DimVec dim_add(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vector length mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

DimVec dim_sub(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vector length mismatch");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool dim_leq(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int dim_total(const DimVec& d) { return std::accumulate(d.begin(), d.end(), 0); }

std::vector<DimVec> dims_below(const DimVec& d) {
    std::vector<DimVec> out;
    DimVec cur(d.size(), 0);
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(d.size()) - 1;
        while (i >= 0 && cur[i] == d[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

}  // namespace hallkit
