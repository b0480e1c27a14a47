#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinweyl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// all hard invariant failures funnel through this
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw invariant_error(what);
}

std::string int_str(const Int& v);
std::string rat_str(const Rat& r);  // "p" or "p/q", q > 0
Rat rat_parse(const std::string& s);
double rat_double(const Rat& r);

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

// true and sets root if v >= 0 is a perfect square
bool perfect_square(const Int& v, Int& root);

// decompose r >= 0 as s^2 * m with m squarefree in {1,2,3,6};
// returns false if r is not of that shape
bool tower_sqrt_split(const Rat& r, Rat& s, int& m);

Int int_gcd(Int a, Int b);
Int int_lcm(const Int& a, const Int& b);
int64_t lcm_i64(int64_t a, int64_t b);

}  // namespace spinweyl
