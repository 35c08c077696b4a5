#include "gue/ribbon_graph.hpp"

#include <stdexcept>

namespace gue {

RibbonGraph::RibbonGraph(Permutation sigma, Permutation kappa)
    : sigma_(std::move(sigma)), kappa_(std::move(kappa)) {
    if (sigma_.size() != kappa_.size())
        throw std::invalid_argument("RibbonGraph: sigma and kappa sizes differ");
    if (sigma_.size() % 2 != 0)
        throw std::invalid_argument("RibbonGraph: half-edge count must be even");
    if (!kappa_.isInvolution())
        throw std::invalid_argument("RibbonGraph: kappa is not an involution");
    if (kappa_.size() > 0 && kappa_.hasFixedPoint())
        throw std::invalid_argument("RibbonGraph: kappa has a fixed point");
}

RibbonGraph RibbonGraph::empty() {
    return RibbonGraph(Permutation::identity(0), Permutation::identity(0));
}

Permutation RibbonGraph::boundaryPermutation() const {
    return sigma_.after(kappa_);
}

RibbonGraph RibbonGraph::dual() const {
    return RibbonGraph(boundaryPermutation(), kappa_);
}

SurfaceInvariants RibbonGraph::invariants() const {
    if (isEmpty()) return SurfaceInvariants{};
    SurfaceInvariants inv;
    inv.vertices = cycleCount(sigma_);
    inv.edges = halfEdges() / 2;
    inv.boundaries = cycleCount(boundaryPermutation());
    const int twoGenus = inv.vertices + inv.edges - inv.boundaries;
    if (twoGenus % 2 != 0 || twoGenus < 0)
        throw std::logic_error("RibbonGraph::invariants: corrupted graph (odd or negative 2g)");
    inv.genus = twoGenus / 2;
    inv.eulerCharacteristic = 2 - inv.vertices - inv.edges;
    return inv;
}

std::vector<int> RibbonGraph::edgeIds() const {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(halfEdges() / 2));
    for (int h = 0; h < halfEdges(); ++h)
        if (h < kappa_(h)) ids.push_back(h);
    return ids;
}

bool RibbonGraph::isLoop(int edgeId) const {
    const int h = edgeId;
    const int h2 = kappa_(h);
    int x = sigma_(h);
    while (x != h) {
        if (x == h2) return true;
        x = sigma_(x);
    }
    return false;
}

namespace {

// Permutation with the two elements of `e` deleted from its cycle structure,
// followed by order-preserving relabeling onto {0,...,n-3}.
Permutation deleteAndRelabel(const Permutation& p, int a, int b) {
    const int n = p.size();
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(n - 2));
    auto relabel = [&](int x) { return x - (x > a ? 1 : 0) - (x > b ? 1 : 0); };
    for (int x = 0; x < n; ++x) {
        if (x == a || x == b) continue;
        int y = p(x);
        while (y == a || y == b) y = p(y);
        im.push_back(relabel(y));
    }
    return Permutation(std::move(im));
}

} // namespace

RibbonGraph RibbonGraph::contractEdge(int edgeId) const {
    if (edgeId < 0 || edgeId >= halfEdges() || kappa_(edgeId) < edgeId)
        throw std::invalid_argument("contractEdge: unknown edge identifier");
    const int h = edgeId;
    const int h2 = kappa_(h);
    // (Gamma/e)* = (H - e, beta/e, kappa/e); recover sigma as (beta/e).(kappa/e).
    const Permutation betaDeleted = deleteAndRelabel(boundaryPermutation(), h, h2);
    const Permutation kappaDeleted = deleteAndRelabel(kappa_, h, h2);
    return RibbonGraph(betaDeleted.after(kappaDeleted), kappaDeleted);
}

} // namespace gue
