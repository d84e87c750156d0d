#include "hallkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hallkit/error.hpp"

namespace hallkit {

Partition make_partition(std::vector<int> parts) {
    for (int x : parts)
        if (x <= 0) throw InputError("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::vector<int> exponents(const Partition& p) {
    const int top = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
    std::vector<int> l(top + 1, 0);
    for (int x : p) ++l[x];
    return l;
}

Partition from_exponents(const std::vector<int>& l) {
    Partition p;
    for (int i = static_cast<int>(l.size()) - 1; i >= 1; --i) p.insert(p.end(), l[i], i);
    return p;
}

Partition cup(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    return make_partition(std::move(r));
}

bool reverse_lex_less(const Partition& a, const Partition& b) {
    auto la = exponents(a), lb = exponents(b);
    const size_t n = std::max(la.size(), lb.size());
    la.resize(n, 0);
    lb.resize(n, 0);
    for (size_t i = n; i-- > 1;)
        if (la[i] != lb[i]) return la[i] > lb[i];
    return false;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace hallkit
