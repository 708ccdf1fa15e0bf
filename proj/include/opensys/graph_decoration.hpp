#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "opensys/decor.hpp"

namespace opensys {

/// A finite multiset of unordered pairs over {0..vertices-1}. Edges are kept
/// normalized (smaller endpoint first) and sorted, so equality is structural.
class EdgeMultiset {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  EdgeMultiset() = default;
  /// Throws InvalidValue for an endpoint outside the vertex set.
  EdgeMultiset(std::size_t vertices, std::vector<Edge> edges);

  std::size_t vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const EdgeMultiset&, const EdgeMultiset&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<Edge> edges_;
};

/// Edge-multiset decorations over the epi-mono factorisation system.
/// Transport along N --f--> P <--m-- P' pushes endpoints forward along f and
/// then takes the preimage along the mono m; edges with an endpoint outside
/// the image of m are dropped. The laxator is disjoint union.
class GraphDecoration {
 public:
  using Decoration = EdgeMultiset;

  FactSys system() const { return FactSys::EpiMono; }
  Decoration transport(const Cospan& c, const Decoration& s) const;
  Decoration laxator(const Decoration& s, const Decoration& t) const;
  Decoration unit() const { return {}; }
  bool equal(const Decoration& s, const Decoration& t) const { return s == t; }
  std::size_t carrier(const Decoration& s) const { return s.vertices(); }
};

static_assert(DecorationFunctor<GraphDecoration>);

/// alpha_N(s) = s + s: a monoidal natural endo-transformation used to
/// exercise DecData morphisms.
EdgeMultiset double_edges(const EdgeMultiset& s);

}  // namespace opensys
