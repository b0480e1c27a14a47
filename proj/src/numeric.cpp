#include "spinweyl/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace spinweyl {

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_parse(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, pos));
  Int d(s.substr(pos + 1));
  check(d != 0, "rat_parse: zero denominator");
  return Rat(n) / Rat(d);
}

double rat_double(const Rat& r) { return r.convert_to<double>(); }

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

bool perfect_square(const Int& v, Int& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

bool tower_sqrt_split(const Rat& r, Rat& s, int& m) {
  if (r < 0) return false;
  if (r == 0) {
    s = 0;
    m = 1;
    return true;
  }
  Int p = rat_num(r), q = rat_den(r);
  Int n = p * q;  // r = n / q^2
  for (int cand : {1, 2, 3, 6}) {
    if (n % cand != 0) continue;
    Int root;
    if (perfect_square(n / cand, root)) {
      s = Rat(root) / Rat(q);
      m = cand;
      return true;
    }
  }
  return false;
}

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

int64_t lcm_i64(int64_t a, int64_t b) {
  Int v = int_lcm(Int(a), Int(b));
  check(v <= Int(std::numeric_limits<int64_t>::max()), "lcm_i64 overflow");
  return v.convert_to<int64_t>();
}

}  // namespace spinweyl
