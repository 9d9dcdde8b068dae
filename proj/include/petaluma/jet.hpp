#pragma once

#include <gmpxx.h>

#include "petaluma/laurent.hpp"

namespace petaluma {

// Order-2 Taylor data of a polynomial at t = 1: value, first and second
// derivative. Products compose by the Leibniz rule.
struct Jet {
  mpz_class d0, d1, d2;

  Jet() : d0(0), d1(0), d2(0) {}
  Jet(long v) : d0(v), d1(0), d2(0) {}
  Jet(mpz_class v0, mpz_class v1, mpz_class v2)
      : d0(std::move(v0)), d1(std::move(v1)), d2(std::move(v2)) {}

  static Jet of(const Laurent& p) {
    Jet j;
    p.jet_at_one(j.d0, j.d1, j.d2);
    return j;
  }

  Jet operator+(const Jet& o) const { return {d0 + o.d0, d1 + o.d1, d2 + o.d2}; }
  Jet operator-(const Jet& o) const { return {d0 - o.d0, d1 - o.d1, d2 - o.d2}; }
  Jet operator-() const { return {-d0, -d1, -d2}; }
  Jet operator*(const Jet& o) const {
    return {d0 * o.d0, d0 * o.d1 + d1 * o.d0, d0 * o.d2 + 2 * d1 * o.d1 + d2 * o.d0};
  }
  Jet& operator+=(const Jet& o) { d0 += o.d0; d1 += o.d1; d2 += o.d2; return *this; }
  Jet& operator-=(const Jet& o) { d0 -= o.d0; d1 -= o.d1; d2 -= o.d2; return *this; }
  Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
  bool operator==(const Jet& o) const { return d0 == o.d0 && d1 == o.d1 && d2 == o.d2; }
};

}  // namespace petaluma
