#pragma once

#include <array>
#include <string>
#include <vector>

namespace petaluma {

class PetalPermutation;

// One end of an oriented edge: which crossing it meets and at which slot.
struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
  bool operator==(const EdgeEnd& o) const { return crossing == o.crossing && slot == o.slot; }
};

// Slots are numbered counterclockwise around the crossing with slot 0 the
// incoming under-strand end. The under-strand exits at slot 2. For sign +1
// the over-strand enters at slot 1 and exits at slot 3; for sign -1 it
// enters at slot 3 and exits at slot 1.
struct Crossing {
  int sign = 0;
  std::array<int, 4> edge = {-1, -1, -1, -1};

  int in_over_slot() const { return sign > 0 ? 1 : 3; }
  int out_over_slot() const { return sign > 0 ? 3 : 1; }
  bool is_incoming(int slot) const { return slot == 0 || slot == in_over_slot(); }
};

struct DiagramEdge {
  EdgeEnd tail, head;  // oriented tail -> head
};

// Oriented combinatorial knot/link diagram: 4-regular graph with rotation
// system, over/under and sign data per crossing.
class KnotDiagram {
 public:
  std::vector<Crossing> crossings;
  std::vector<DiagramEdge> edges;
  int components = 1;
  int base_edge = 0;

  int num_crossings() const { return int(crossings.size()); }
  int num_edges() const { return int(edges.size()); }
  int writhe() const;

  // Edge following the given one along the strand.
  int next_edge(int e) const;
  // Edge visit order of the component containing `start` (edge ids).
  std::vector<int> component_of(int start) const;
  // Recomputes and checks the component count; throws on inconsistency.
  void validate() const;

  std::string gauss_code() const;
};

// A passage of a strand through a crossing, in traversal order.
struct Passage {
  int crossing;
  int in_slot;
  bool under() const { return in_slot == 0; }
};

// All passages of the component containing base_edge, starting with the
// head of base_edge.
std::vector<Passage> passages_from(const KnotDiagram& d, int base_edge);

KnotDiagram mirror_diagram(const KnotDiagram& d);
// Joins two knot diagrams into their connected sum by splicing edge e1 of
// d1 with edge e2 of d2.
KnotDiagram connect_sum_diagram(const KnotDiagram& d1, const KnotDiagram& d2, int e1 = 0,
                                int e2 = 0);
// Splits edge e with a new reducible (nugatory) crossing of the given sign.
KnotDiagram add_kink(const KnotDiagram& d, int e, int sign);

}  // namespace petaluma
