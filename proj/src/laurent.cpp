#include "petaluma/laurent.hpp"

#include <algorithm>

#include "petaluma/error.hpp"

namespace petaluma {

namespace {
const mpz_class kZero = 0;
}

Laurent Laurent::monomial(const mpz_class& c, int exp) {
  Laurent r;
  if (c != 0) {
    r.lo_ = exp;
    r.coeff_.push_back(c);
  }
  return r;
}

const mpz_class& Laurent::at(int exp) const {
  if (is_zero() || exp < lo_ || exp > hi()) return kZero;
  return coeff_[size_t(exp - lo_)];
}

void Laurent::trim() {
  size_t front = 0;
  while (front < coeff_.size() && coeff_[front] == 0) ++front;
  if (front == coeff_.size()) {
    coeff_.clear();
    lo_ = 0;
    return;
  }
  size_t back = coeff_.size();
  while (back > front && coeff_[back - 1] == 0) --back;
  if (front > 0 || back < coeff_.size()) {
    coeff_ = std::vector<mpz_class>(coeff_.begin() + long(front), coeff_.begin() + long(back));
    lo_ += int(front);
  }
}

void Laurent::set(int exp, const mpz_class& c) {
  if (is_zero()) {
    if (c == 0) return;
    lo_ = exp;
    coeff_.assign(1, c);
    return;
  }
  if (exp < lo_) {
    coeff_.insert(coeff_.begin(), size_t(lo_ - exp), kZero);
    lo_ = exp;
  } else if (exp > hi()) {
    coeff_.resize(size_t(exp - lo_ + 1), kZero);
  }
  coeff_[size_t(exp - lo_)] = c;
  trim();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  int nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
  std::vector<mpz_class> out(size_t(nhi - nlo + 1));
  for (size_t i = 0; i < coeff_.size(); ++i) out[size_t(lo_ - nlo) + i] = coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) out[size_t(o.lo_ - nlo) + i] += o.coeff_[i];
  lo_ = nlo;
  coeff_ = std::move(out);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  *this += -o;
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  if (is_zero() || o.is_zero()) return r;
  r.lo_ = lo_ + o.lo_;
  r.coeff_.assign(coeff_.size() + o.coeff_.size() - 1, kZero);
  mpz_class tmp;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t j = 0; j < o.coeff_.size(); ++j) {
      if (o.coeff_[j] == 0) continue;
      mpz_addmul(r.coeff_[i + j].get_mpz_t(), coeff_[i].get_mpz_t(), o.coeff_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

Laurent Laurent::shifted(int dexp) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += dexp;
  return r;
}

Laurent Laurent::reversed() const {
  Laurent r;
  if (is_zero()) return r;
  r.lo_ = -hi();
  r.coeff_.assign(coeff_.rbegin(), coeff_.rend());
  return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
  require(!d.is_zero(), Errc::Internal, "division by zero polynomial");
  if (is_zero()) return Laurent();
  Laurent rem = *this;
  Laurent quot;
  const mpz_class& dlead = d.coeff_.back();
  while (!rem.is_zero() && rem.span() >= d.span()) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.coeff_.back().get_mpz_t(), dlead.get_mpz_t());
    require(r == 0, Errc::Internal, "inexact polynomial division");
    int shift = rem.hi() - d.hi();
    Laurent term = monomial(q, shift);
    quot += term;
    rem -= term * d;
  }
  require(rem.is_zero(), Errc::Internal, "inexact polynomial division");
  return quot;
}

mpz_class Laurent::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeff_) s += c;
  return s;
}

void Laurent::jet_at_one(mpz_class& d0, mpz_class& d1, mpz_class& d2) const {
  d0 = 0; d1 = 0; d2 = 0;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    long e = lo_ + long(i);
    d0 += coeff_[i];
    d1 += coeff_[i] * e;
    d2 += coeff_[i] * e * (e - 1);
  }
}

std::string Laurent::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = hi(); e >= lo(); --e) {
    const mpz_class& c = at(e);
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string mag = a.get_str();
    if (e == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += var + "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace petaluma
