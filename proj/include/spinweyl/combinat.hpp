#pragma once

#include <string>
#include <vector>

#include "spinweyl/numeric.hpp"

namespace spinweyl {

// weakly decreasing positive parts
using Partition = std::vector<int>;

struct Bipartition {
  Partition first;
  Partition second;
  bool operator==(const Bipartition&) const = default;
  bool operator<(const Bipartition& o) const;
};

std::vector<Partition> partitions(int n);
std::vector<Partition> distinct_partitions(int n);

int partition_weight(const Partition& lam);
Partition transpose(const Partition& lam);
// "even" partition: weight minus number of parts is even
bool partition_even(const Partition& lam);
bool is_partition(const Partition& lam);
bool has_distinct_parts(const Partition& lam);
std::string partition_str(const Partition& lam);
std::string bipartition_str(const Bipartition& bp);

// dimension of the genuine type(s) attached to a distinct-parts partition:
// 2^[(n-m)/2] * n!/(lam_1!...lam_m!) * prod_{i<j} (lam_i-lam_j)/(lam_i+lam_j)
Int schur_dimension(const Partition& lam);

// trace ratio tr/dim of the genuine type on the class of a 3-cycle, n >= 3:
// |C| * tr/dim = sum_i lam_i(lam_i^2-1)/6 - n(n-1)/2, |C| = n(n-1)(n-2)/3
Rat spin_char_on_3cycle(const Partition& lam);

// rational-function identity over the parts used in the inductive proof of
// the 3-cycle trace formula; false only signals an implementation bug
bool verify_partition_fraction_identity(const Partition& lam);

// sum over boxes (i,j) of (c1*(j-i)+c2)^k, k in {1,2}
Rat content_power_sum(const Partition& lam, int k, const Rat& c1, const Rat& c2);

// peeling algorithm attaching bipartitions to a partition with box contents
// c1*(j-i)+c2: repeatedly strip the first row or first column, whichever owns
// the corner box of largest absolute content, branching on ties; a final
// single box goes by the sign of its content and branches at zero
std::vector<Bipartition> slooten(const Partition& lam, const Rat& c1, const Rat& c2);

}  // namespace spinweyl
