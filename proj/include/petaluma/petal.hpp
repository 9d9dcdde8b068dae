#pragma once

#include <string>
#include <vector>

namespace petaluma {

// Heights sequence of a (2n+1)-petal knot diagram. heights[k-1] is the
// height of the k-th straight arc in traversal order; entries are a
// permutation of {1..p} with p odd.
class PetalPermutation {
 public:
  explicit PetalPermutation(std::vector<int> heights);  // validates

  int p() const { return int(heights_.size()); }
  int n() const { return (p() - 1) / 2; }
  int height(int pos) const { return heights_[size_t(pos - 1)]; }  // pos in 1..p
  int position_of(int h) const;                                     // inverse permutation
  const std::vector<int>& heights() const { return heights_; }

  bool operator==(const PetalPermutation& o) const { return heights_ == o.heights_; }

  std::string str() const;  // "(1,3,5,2,4)"

 private:
  std::vector<int> heights_;
};

// Heights of a (2m,2n)-petal 2-component link. Arcs 1..2m belong to the
// first component, arcs 2m+1..2m+2n to the second.
class LinkPetalPermutation {
 public:
  LinkPetalPermutation(std::vector<int> heights, int m, int n);  // validates

  int m() const { return m_; }
  int n() const { return n_; }
  int total() const { return 2 * (m_ + n_); }
  int height(int pos) const { return heights_[size_t(pos - 1)]; }
  const std::vector<int>& heights() const { return heights_; }

  bool operator==(const LinkPetalPermutation& o) const {
    return m_ == o.m_ && n_ == o.n_ && heights_ == o.heights_;
  }

  std::string str() const;  // "(4,9,1,3,8,7,5,2,6,10; 2,3)"

 private:
  std::vector<int> heights_;
  int m_, n_;
};

enum class Symmetry { rotate_values, rotate_positions, reflect };

PetalPermutation make_petal(const std::vector<int>& heights);
LinkPetalPermutation make_link(const std::vector<int>& heights, int m, int n);

PetalPermutation apply_symmetry(const PetalPermutation& pi, Symmetry sym);

// Inserts the adjacent pair (level+1, level) at `position` (1..p+1), shifting
// existing heights >= level up by two. Preserves the knot type.
PetalPermutation stabilize(const PetalPermutation& pi, int position, int level);

PetalPermutation parse_petal(const std::string& text);
LinkPetalPermutation parse_link(const std::string& text);

}  // namespace petaluma
