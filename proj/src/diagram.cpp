#include "petaluma/diagram.hpp"

#include <sstream>

#include "petaluma/error.hpp"

namespace petaluma {

int KnotDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

int KnotDiagram::next_edge(int e) const {
  const EdgeEnd& h = edges[size_t(e)].head;
  int out = (h.slot + 2) % 4;
  return crossings[size_t(h.crossing)].edge[size_t(out)];
}

std::vector<int> KnotDiagram::component_of(int start) const {
  std::vector<int> seq;
  int e = start;
  do {
    seq.push_back(e);
    e = next_edge(e);
  } while (e != start);
  return seq;
}

void KnotDiagram::validate() const {
  if (crossings.empty()) {
    require(edges.empty(), Errc::Internal, "crossingless diagram must have no edges");
    return;
  }
  require(edges.size() == crossings.size() * 2, Errc::Internal, "edge count mismatch");
  for (size_t ci = 0; ci < crossings.size(); ++ci) {
    const Crossing& c = crossings[ci];
    require(c.sign == 1 || c.sign == -1, Errc::Internal, "bad crossing sign");
    for (int s = 0; s < 4; ++s) {
      int e = c.edge[size_t(s)];
      require(e >= 0 && e < int(edges.size()), Errc::Internal, "bad edge id in slot");
      EdgeEnd want{int(ci), s};
      bool incoming = c.is_incoming(s);
      const DiagramEdge& de = edges[size_t(e)];
      require(incoming ? de.head == want : de.tail == want, Errc::Internal,
              "slot/edge end mismatch");
    }
  }
  std::vector<char> seen(edges.size(), 0);
  int comps = 0;
  for (size_t e = 0; e < edges.size(); ++e) {
    if (seen[e]) continue;
    ++comps;
    for (int f : component_of(int(e))) seen[size_t(f)] = 1;
  }
  require(comps == components, Errc::Internal, "component count mismatch");
}

std::vector<Passage> passages_from(const KnotDiagram& d, int base_edge) {
  std::vector<Passage> out;
  for (int e : d.component_of(base_edge)) {
    const EdgeEnd& h = d.edges[size_t(e)].head;
    out.push_back({h.crossing, h.slot});
  }
  return out;
}

std::string KnotDiagram::gauss_code() const {
  if (crossings.empty()) return "";
  std::vector<int> label(crossings.size(), 0);
  int next_label = 1;
  std::ostringstream os;
  std::vector<char> edge_seen(edges.size(), 0);
  bool first_comp = true;
  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    int start = (e0 == 0) ? base_edge : int(e0);
    if (edge_seen[size_t(start)]) continue;
    if (!first_comp) os << " | ";
    first_comp = false;
    bool first_tok = true;
    for (int e : component_of(start)) {
      edge_seen[size_t(e)] = 1;
      const EdgeEnd& h = edges[size_t(e)].head;
      if (label[size_t(h.crossing)] == 0) label[size_t(h.crossing)] = next_label++;
      const Crossing& c = crossings[size_t(h.crossing)];
      if (!first_tok) os << ' ';
      first_tok = false;
      os << (h.slot == 0 ? 'U' : 'O') << label[size_t(h.crossing)] << (c.sign > 0 ? '+' : '-');
    }
  }
  return os.str();
}

KnotDiagram mirror_diagram(const KnotDiagram& d) {
  KnotDiagram m = d;
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const Crossing& c = d.crossings[ci];
    int r = c.in_over_slot();
    Crossing& mc = m.crossings[ci];
    mc.sign = -c.sign;
    for (int s = 0; s < 4; ++s) mc.edge[size_t(s)] = c.edge[size_t((s + r) % 4)];
  }
  auto remap = [&](EdgeEnd& end) {
    int r = d.crossings[size_t(end.crossing)].in_over_slot();
    end.slot = (end.slot - r + 4) % 4;
  };
  for (auto& e : m.edges) {
    remap(e.tail);
    remap(e.head);
  }
  m.validate();
  return m;
}

KnotDiagram connect_sum_diagram(const KnotDiagram& d1, const KnotDiagram& d2, int e1, int e2) {
  if (d1.crossings.empty()) return d2;
  if (d2.crossings.empty()) return d1;
  require(d1.components == 1 && d2.components == 1, Errc::MultiComponent,
          "connected sum needs knots");
  KnotDiagram out;
  out.crossings = d1.crossings;
  int coff = d1.num_crossings();
  for (Crossing c : d2.crossings) {
    for (auto& e : c.edge) e += d1.num_edges();
    out.crossings.push_back(c);
  }
  out.edges = d1.edges;
  for (DiagramEdge e : d2.edges) {
    e.tail.crossing += coff;
    e.head.crossing += coff;
    out.edges.push_back(e);
  }
  int f2 = e2 + d1.num_edges();
  // Cross-splice: tail(e1) -> head(e2'), tail(e2') -> head(e1).
  EdgeEnd t1 = out.edges[size_t(e1)].tail, h1 = out.edges[size_t(e1)].head;
  EdgeEnd t2 = out.edges[size_t(f2)].tail, h2 = out.edges[size_t(f2)].head;
  out.edges[size_t(e1)] = {t1, h2};
  out.edges[size_t(f2)] = {t2, h1};
  out.crossings[size_t(h2.crossing)].edge[size_t(h2.slot)] = e1;
  out.crossings[size_t(t2.crossing)].edge[size_t(t2.slot)] = f2;
  out.crossings[size_t(h1.crossing)].edge[size_t(h1.slot)] = f2;
  out.components = 1;
  out.base_edge = e1;
  out.validate();
  return out;
}

KnotDiagram add_kink(const KnotDiagram& d, int e, int sign) {
  KnotDiagram out = d;
  int x = out.num_crossings();
  EdgeEnd t = out.edges[size_t(e)].tail;
  int in_over = sign > 0 ? 1 : 3;
  int out_over = sign > 0 ? 3 : 1;
  // Reuse edge e as the incoming strand, add the loop and the outgoing strand.
  int loop = out.num_edges();
  int cont = loop + 1;
  EdgeEnd h = out.edges[size_t(e)].head;
  out.edges[size_t(e)] = {t, {x, 0}};
  out.edges.push_back({{x, 2}, {x, in_over}});
  out.edges.push_back({{x, out_over}, h});
  Crossing c;
  c.sign = sign;
  c.edge[0] = e;
  c.edge[2] = loop;
  c.edge[size_t(in_over)] = loop;
  c.edge[size_t(out_over)] = cont;
  out.crossings.push_back(c);
  out.crossings[size_t(h.crossing)].edge[size_t(h.slot)] = cont;
  out.validate();
  return out;
}

}  // namespace petaluma
