#pragma once

#include "gue/permutation.hpp"

#include <vector>

namespace gue {

/// Topological data of the oriented surface a ribbon graph thickens into.
/// Satisfies 2*genus + boundaries = vertices + edges and
/// eulerCharacteristic = 2 - vertices - edges.
struct SurfaceInvariants {
    int vertices = 0;
    int edges = 0;
    int boundaries = 0;
    int genus = 0;
    int eulerCharacteristic = 2;

    bool operator==(const SurfaceInvariants&) const = default;
};

/// A ribbon graph as a pair of permutations on a half-edge set: the vertex
/// permutation sigma (cyclic order of half-edges at each vertex) and the edge
/// involution kappa (fixed-point-free, pairing the two half-edges of each
/// edge). Vertices are the cycles of sigma; edges are the orbits of kappa.
///
/// Half-edges are indexed 0..2l-1 internally. An edge is identified by the
/// smaller half-edge index of its kappa-orbit.
///
/// Values are immutable after construction; all operations return new graphs.
class RibbonGraph {
public:
    /// Throws std::invalid_argument unless sigma and kappa act on the same
    /// even-sized set and kappa is a fixed-point-free involution.
    RibbonGraph(Permutation sigma, Permutation kappa);

    /// The graph on zero half-edges. It arises only from contraction; its
    /// invariants are reported as V=E=b=g=0 with Euler characteristic 2.
    static RibbonGraph empty();

    int halfEdges() const { return sigma_.size(); }
    bool isEmpty() const { return halfEdges() == 0; }

    const Permutation& sigma() const { return sigma_; }
    const Permutation& kappa() const { return kappa_; }

    /// The boundary permutation beta = sigma . kappa, i.e. kappa first, then
    /// sigma. Its cycles are the boundary components of the thickened surface.
    Permutation boundaryPermutation() const;

    /// Dual graph (H, beta, kappa). With the fixed composition order the dual
    /// of the dual is the original graph.
    RibbonGraph dual() const;

    SurfaceInvariants invariants() const;

    /// Edge identifiers: the smaller half-edge of each kappa-orbit, ascending.
    std::vector<int> edgeIds() const;

    /// True if both half-edges of the edge lie on the same vertex.
    bool isLoop(int edgeId) const;

    /// Contract the edge: remove its two half-edges from the dual
    /// presentation. Joining distinct vertices merges them; contracting a
    /// loop splits its vertex. Remaining half-edges are relabeled to
    /// 0..halfEdges()-3 preserving order.
    /// Throws std::invalid_argument for an unknown edge identifier.
    RibbonGraph contractEdge(int edgeId) const;

    bool operator==(const RibbonGraph&) const = default;

private:
    Permutation sigma_;
    Permutation kappa_;
};

} // namespace gue
