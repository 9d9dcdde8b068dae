#include "petaluma/petal.hpp"

#include <algorithm>
#include <sstream>

#include "petaluma/error.hpp"

namespace petaluma {

namespace {

void check_permutation(const std::vector<int>& h) {
  std::vector<char> seen(h.size() + 1, 0);
  for (int v : h) {
    if (v < 1 || v > int(h.size()) || seen[size_t(v)])
      fail(Errc::NotPermutation, "heights are not a permutation of {1.." +
                                     std::to_string(h.size()) + "}");
    seen[size_t(v)] = 1;
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) { out.push_back(std::stoi(cur)); cur.clear(); }
    } else if ((c >= '0' && c <= '9') || c == '-') {
      cur += c;
    } else {
      fail(Errc::SyntaxError, "unexpected character in list: " + std::string(1, c));
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

}  // namespace

PetalPermutation::PetalPermutation(std::vector<int> heights) : heights_(std::move(heights)) {
  require(heights_.size() % 2 == 1, Errc::EvenLength,
          "petal permutation length must be odd, got " + std::to_string(heights_.size()));
  check_permutation(heights_);
}

int PetalPermutation::position_of(int h) const {
  for (int k = 1; k <= p(); ++k)
    if (height(k) == h) return k;
  fail(Errc::OutOfRange, "height " + std::to_string(h) + " not present");
}

std::string PetalPermutation::str() const {
  std::ostringstream os;
  os << "(";
  for (int k = 1; k <= p(); ++k) os << (k > 1 ? "," : "") << height(k);
  os << ")";
  return os.str();
}

LinkPetalPermutation::LinkPetalPermutation(std::vector<int> heights, int m, int n)
    : heights_(std::move(heights)), m_(m), n_(n) {
  require(m >= 0 && n >= 0, Errc::OutOfRange, "negative petal counts");
  require(int(heights_.size()) == 2 * (m + n), Errc::LengthMismatch,
          "expected " + std::to_string(2 * (m + n)) + " heights, got " +
              std::to_string(heights_.size()));
  check_permutation(heights_);
}

std::string LinkPetalPermutation::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < heights_.size(); ++i) os << (i ? "," : "") << heights_[i];
  os << "; " << m_ << "," << n_ << ")";
  return os.str();
}

PetalPermutation make_petal(const std::vector<int>& heights) { return PetalPermutation(heights); }

LinkPetalPermutation make_link(const std::vector<int>& heights, int m, int n) {
  return LinkPetalPermutation(heights, m, n);
}

PetalPermutation apply_symmetry(const PetalPermutation& pi, Symmetry sym) {
  int p = pi.p();
  std::vector<int> out(size_t(p));
  switch (sym) {
    case Symmetry::rotate_values:
      for (int k = 1; k <= p; ++k) out[size_t(k - 1)] = pi.height(k) % p + 1;
      break;
    case Symmetry::rotate_positions:
      for (int k = 1; k <= p; ++k) out[size_t(k - 1)] = pi.height(k % p + 1);
      break;
    case Symmetry::reflect:
      for (int k = 1; k <= p; ++k) out[size_t(k - 1)] = p + 1 - pi.height(k);
      break;
  }
  return PetalPermutation(std::move(out));
}

PetalPermutation stabilize(const PetalPermutation& pi, int position, int level) {
  int p = pi.p();
  require(level >= 1 && level <= p + 1, Errc::OutOfRange,
          "stabilization level must be in 1.." + std::to_string(p + 1));
  require(position >= 1 && position <= p + 1, Errc::OutOfRange,
          "insertion position must be in 1.." + std::to_string(p + 1));
  std::vector<int> out;
  out.reserve(size_t(p + 2));
  for (int k = 1; k <= p; ++k) {
    int h = pi.height(k);
    out.push_back(h >= level ? h + 2 : h);
  }
  out.insert(out.begin() + (position - 1), {level + 1, level});
  return PetalPermutation(std::move(out));
}

PetalPermutation parse_petal(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') {
    require(s.back() == ')', Errc::SyntaxError, "unbalanced parentheses");
    s = s.substr(1, s.size() - 2);
  }
  return PetalPermutation(parse_int_list(s));
}

LinkPetalPermutation parse_link(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') {
    require(s.back() == ')', Errc::SyntaxError, "unbalanced parentheses");
    s = s.substr(1, s.size() - 2);
  }
  auto semi = s.find(';');
  require(semi != std::string::npos, Errc::SyntaxError,
          "link literal needs '; m,n' suffix");
  auto heights = parse_int_list(s.substr(0, semi));
  auto mn = parse_int_list(s.substr(semi + 1));
  require(mn.size() == 2, Errc::SyntaxError, "expected exactly m,n after ';'");
  return LinkPetalPermutation(heights, mn[0], mn[1]);
}

}  // namespace petaluma
