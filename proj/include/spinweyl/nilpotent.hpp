#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinweyl/combinat.hpp"
#include "spinweyl/linalg.hpp"
#include "spinweyl/rootsys.hpp"

namespace spinweyl {

enum class Algebra { sl, so, sp };

std::string algebra_str(Algebra a, int m);

// nilpotent orbit of a classical Lie algebra, recorded by its Jordan partition
struct NilpotentOrbitClass {
  Algebra algebra = Algebra::sl;
  int m = 0;            // sl(m), so(m) or sp(m)
  Partition partition;  // of m, obeying the parity-multiplicity rule
  bool in_N0 = false;         // solvable centralizer
  bool distinguished = false; // no torus in the centralizer
  std::vector<int> h_coords;  // middle element weight strings, weakly decreasing
  Rat h_norm_sq;              // standard form, rank coordinates (sum-zero for sl)

  bool operator==(const NilpotentOrbitClass& o) const {
    return algebra == o.algebra && m == o.m && partition == o.partition;
  }
  bool operator<(const NilpotentOrbitClass& o) const;
  std::string str() const;
};

// the parity-multiplicity rule of the algebra: even parts of so / odd parts of
// sp occur with even multiplicity
bool valid_orbit_partition(Algebra a, int m, const Partition& lam);

NilpotentOrbitClass make_orbit(Algebra a, int m, const Partition& lam);

// every orbit of the algebra, by decreasing h norm
std::vector<NilpotentOrbitClass> classify_orbits(Algebra a, int m);

bool in_N0(const NilpotentOrbitClass& orbit);
bool is_distinguished(const NilpotentOrbitClass& orbit);

// full weight string multiset and the norm in standard rank coordinates
std::pair<std::vector<int>, Rat> middle_element(const NilpotentOrbitClass& orbit);

// orbit whose middle element halves are twice the eps contents of lam
// ('B' -> so(2n+1), eps 1; 'C' -> sp(2n), eps 1/2; 'D' -> so(2n), eps 0;
//  'A' -> sl(n), the partition itself)
NilpotentOrbitClass orbit_from_contents(const Partition& lam, char type);

// a {0,2} weight labeling of a sub-diagram together with the element realizing
// it inside the ambient Cartan
struct WeightedDiagram {
  std::vector<int> labels;  // per chosen node
  RatVec h;                 // ambient coordinates
  Rat norm_sq;              // under the root system form
};

// labelings of the sub-diagram spanned by the chosen simple roots whose
// adjoint grading is balanced (as many roots in degree two as the rank plus
// the roots in degree zero); descending norm order
std::vector<WeightedDiagram> distinguished_diagrams(const RootSystem& rs,
                                                    const std::vector<int>& nodes);
std::vector<WeightedDiagram> distinguished_diagrams(const RootSystem& rs);

// restriction data for a cuspidal pair: host algebra, its cuspidal partition,
// the induced root system and the parameter values on the two root lengths
struct CuspidalCase {
  std::string id;
  int p = 0;          // family parameter, 0 for the two exceptional cases
  std::string host;
  Partition cusp;
  char root_type = 0;
  int root_rank = 0;  // 0 when the family exists at every rank n
  Rat c_long;
  Rat c_short;
};

// the four classical families for p = 1..pmax plus the two exceptional cases
std::vector<CuspidalCase> cuspidal_cases(int pmax = 2);

}  // namespace spinweyl
