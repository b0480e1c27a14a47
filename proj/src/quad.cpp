#include "spinweyl/quad.hpp"

#include <cmath>

namespace spinweyl {

Quad Quad::operator*(const Quad& o) const {
  // (a + b r2 + c r3 + d r6)(a' + b' r2 + c' r3 + d' r6)
  Rat na = a * o.a + 2 * (b * o.b) + 3 * (c * o.c) + 6 * (d * o.d);
  Rat nb = a * o.b + b * o.a + 3 * (c * o.d + d * o.c);
  Rat nc = a * o.c + c * o.a + 2 * (b * o.d + d * o.b);
  Rat nd = a * o.d + d * o.a + b * o.c + c * o.b;
  return Quad(na, nb, nc, nd);
}

double Quad::approx() const {
  static const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  return rat_double(a) + rat_double(b) * r2 + rat_double(c) * r3 + rat_double(d) * r6;
}

std::string Quad::str() const {
  std::string s = rat_str(a);
  auto app = [&s](const Rat& coef, const char* tag) {
    if (coef == 0) return;
    if (coef > 0) s += "+";
    s += rat_str(coef);
    s += "*";
    s += tag;
  };
  app(b, "sqrt2");
  app(c, "sqrt3");
  app(d, "sqrt6");
  return s;
}

bool quad_sqrt_of_rat(const Rat& r, Quad& out) {
  Rat s;
  int m;
  if (!tower_sqrt_split(r, s, m)) return false;
  switch (m) {
    case 1: out = Quad(s); break;
    case 2: out = Quad::sqrt2().scaled(s); break;
    case 3: out = Quad::sqrt3().scaled(s); break;
    case 6: out = Quad::sqrt6().scaled(s); break;
    default: return false;
  }
  return true;
}

std::string QuadC::str() const {
  if (im.is_zero()) return re.str();
  return re.str() + " + (" + im.str() + ")*i";
}

Quad quad_conj2(const Quad& q) { return Quad(q.a, -q.b, q.c, -q.d); }
Quad quad_conj3(const Quad& q) { return Quad(q.a, q.b, -q.c, -q.d); }

Quad quad_inv(const Quad& q) {
  check(!q.is_zero(), "inverse of zero");
  Quad p = quad_conj2(q) * quad_conj3(q) * quad_conj2(quad_conj3(q));
  Quad n = q * p;  // field norm, rational
  check(n.is_rational() && n.a != 0, "field norm must be a nonzero rational");
  return p.scaled(Rat(1) / n.a);
}

}  // namespace spinweyl
