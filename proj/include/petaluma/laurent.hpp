#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace petaluma {

// Exact integer Laurent polynomial, dense coefficients over a contiguous
// exponent window. Canonical form: empty for zero, nonzero leading and
// trailing coefficients otherwise.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { if (c != 0) { lo_ = 0; coeff_.push_back(mpz_class(c)); } }
  Laurent(const mpz_class& c) { if (c != 0) { lo_ = 0; coeff_.push_back(c); } }
  static Laurent monomial(const mpz_class& c, int exp);

  bool is_zero() const { return coeff_.empty(); }
  int lo() const { return lo_; }                          // lowest exponent
  int hi() const { return lo_ + int(coeff_.size()) - 1; } // highest exponent
  int span() const { return is_zero() ? 0 : hi() - lo(); }
  const mpz_class& at(int exp) const;  // 0 outside window
  const std::vector<mpz_class>& coeffs() const { return coeff_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return lo_ == o.lo_ && coeff_ == o.coeff_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent shifted(int dexp) const;     // multiply by t^dexp
  Laurent reversed() const;            // t -> 1/t
  // Exact division; throws Errc::Internal if the remainder is nonzero.
  Laurent divide_exact(const Laurent& d) const;

  mpz_class eval_at_one() const;
  // Value and first two derivatives at t = 1.
  void jet_at_one(mpz_class& d0, mpz_class& d1, mpz_class& d2) const;

  // Text form: terms in descending exponent, e.g. "t^1 - 1 + t^-1".
  std::string str(const std::string& var = "t") const;

  void set(int exp, const mpz_class& c);

 private:
  void trim();
  int lo_ = 0;
  std::vector<mpz_class> coeff_;  // coeff_[i] is the coefficient of t^(lo_+i)
};

}  // namespace petaluma
