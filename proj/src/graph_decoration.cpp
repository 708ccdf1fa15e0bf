#include "opensys/graph_decoration.hpp"

#include <algorithm>

namespace opensys {

EdgeMultiset::EdgeMultiset(std::size_t vertices, std::vector<Edge> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= vertices_ || v >= vertices_) throw InvalidValue("edge endpoint outside the vertex set");
    if (v < u) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

EdgeMultiset GraphDecoration::transport(const Cospan& c, const EdgeMultiset& s) const {
  detail::check_transport_leg(*this, c);
  if (s.vertices() != c.left_foot().size()) throw SpaceMismatch("graph decoration does not live over the left foot");
  const std::size_t none = c.right_foot().size();
  std::vector<std::size_t> preimage(c.apex().size(), none);
  for (std::size_t k = 0; k < c.right().size(); ++k) preimage[c.right()(k)] = k;
  std::vector<EdgeMultiset::Edge> kept;
  for (const auto& [u, v] : s.edges()) {
    std::size_t pu = preimage[c.left()(u)], pv = preimage[c.left()(v)];
    if (pu != none && pv != none) kept.emplace_back(pu, pv);
  }
  return EdgeMultiset(c.right_foot().size(), std::move(kept));
}

EdgeMultiset GraphDecoration::laxator(const EdgeMultiset& s, const EdgeMultiset& t) const {
  std::vector<EdgeMultiset::Edge> edges = s.edges();
  for (const auto& [u, v] : t.edges()) edges.emplace_back(u + s.vertices(), v + s.vertices());
  return EdgeMultiset(s.vertices() + t.vertices(), std::move(edges));
}

EdgeMultiset double_edges(const EdgeMultiset& s) {
  std::vector<EdgeMultiset::Edge> edges = s.edges();
  edges.insert(edges.end(), s.edges().begin(), s.edges().end());
  return EdgeMultiset(s.vertices(), std::move(edges));
}

}  // namespace opensys
