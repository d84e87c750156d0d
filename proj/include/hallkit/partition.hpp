#pragma once

// Integer partitions: weakly decreasing positive parts, plus the exponential
// form (1^{l_1} 2^{l_2} ...) used by the automorphism and ordering formulas.

#include <string>
#include <vector>

namespace hallkit {

using Partition = std::vector<int>;

/// Sorts decreasingly; InputError on a non-positive part.
Partition make_partition(std::vector<int> parts);
int partition_size(const Partition& p);
/// l_i = number of parts equal to i, for i = 1..max part (index 0 unused).
std::vector<int> exponents(const Partition& p);
Partition from_exponents(const std::vector<int>& l);

/// Exponent vectors add.
Partition cup(const Partition& a, const Partition& b);

/// a < b iff for the largest i where the exponents differ, l_i(a) > l_i(b).
/// With this order (2) < (1,1), and a proper extension of M by N is smaller
/// than the split one.
bool reverse_lex_less(const Partition& a, const Partition& b);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

std::string partition_to_string(const Partition& p);

}  // namespace hallkit
