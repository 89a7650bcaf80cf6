#ifndef VAK_PARTITIONS_HPP
#define VAK_PARTITIONS_HPP

#include <vector>

namespace vak {

// All partitions of n (weakly decreasing parts), reverse-lexicographic:
// (n), (n-1,1), ..., (1,...,1). partitions_of(0) = { () }.
std::vector<std::vector<int>> partitions_of(int n, int max_part = -1);

// Partitions of n with exactly k parts, same relative order.
std::vector<std::vector<int>> partitions_exact_parts(int n, int k);

// Partitions of n into at most k parts.
std::vector<std::vector<int>> partitions_max_parts(int n, int k);

long long partition_count(int n);

}  // namespace vak

#endif
