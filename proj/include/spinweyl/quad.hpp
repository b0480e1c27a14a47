#pragma once

#include "spinweyl/numeric.hpp"

#include <string>

namespace spinweyl {

// element of Q(sqrt2, sqrt3): a + b sqrt2 + c sqrt3 + d sqrt6
struct Quad {
  Rat a, b, c, d;

  Quad() : a(0), b(0), c(0), d(0) {}
  explicit Quad(const Rat& r) : a(r), b(0), c(0), d(0) {}
  Quad(Rat a_, Rat b_, Rat c_, Rat d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quad sqrt2() { return Quad(Rat(0), Rat(1), Rat(0), Rat(0)); }
  static Quad sqrt3() { return Quad(Rat(0), Rat(0), Rat(1), Rat(0)); }
  static Quad sqrt6() { return Quad(Rat(0), Rat(0), Rat(0), Rat(1)); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }

  Quad operator+(const Quad& o) const { return Quad(a + o.a, b + o.b, c + o.c, d + o.d); }
  Quad operator-(const Quad& o) const { return Quad(a - o.a, b - o.b, c - o.c, d - o.d); }
  Quad operator-() const { return Quad(-a, -b, -c, -d); }
  Quad operator*(const Quad& o) const;
  Quad scaled(const Rat& r) const { return Quad(a * r, b * r, c * r, d * r); }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Quad& o) const { return !(*this == o); }

  double approx() const;
  std::string str() const;  // "a+b*sqrt2+c*sqrt3+d*sqrt6", lossless text form
};

// exact square root of a nonnegative rational inside the tower; false if absent
bool quad_sqrt_of_rat(const Rat& r, Quad& out);

// Galois conjugates (sqrt2 -> -sqrt2 resp. sqrt3 -> -sqrt3) and exact inverse
Quad quad_conj2(const Quad& q);
Quad quad_conj3(const Quad& q);
Quad quad_inv(const Quad& q);  // throws on zero

// complex value with real and imaginary parts in the tower
struct QuadC {
  Quad re, im;

  QuadC() = default;
  explicit QuadC(Quad r) : re(std::move(r)) {}
  QuadC(Quad r, Quad i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  QuadC operator+(const QuadC& o) const { return QuadC(re + o.re, im + o.im); }
  QuadC operator-(const QuadC& o) const { return QuadC(re - o.re, im - o.im); }
  QuadC operator*(const QuadC& o) const {
    return QuadC(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  QuadC conj() const { return QuadC(re, -im); }
  bool operator==(const QuadC& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QuadC& o) const { return !(*this == o); }
  std::string str() const;
};

}  // namespace spinweyl
