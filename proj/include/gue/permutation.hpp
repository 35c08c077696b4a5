#pragma once

#include <vector>

namespace gue {

/// A permutation of {0,...,size-1}, stored as its image table.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `images` is a bijection on
    /// {0,...,images.size()-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int size);

    /// Builds a permutation from disjoint cycles; elements not mentioned are
    /// fixed points.
    static Permutation fromCycles(int size, const std::vector<std::vector<int>>& cycles);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    /// Composition: (this.after(other))(x) = this(other(x)).
    Permutation after(const Permutation& other) const;

    Permutation inverse() const;

    /// Disjoint-cycle decomposition. Cycles are listed by their smallest
    /// element, smallest first, and each cycle starts at its smallest element.
    /// Fixed points appear as 1-cycles.
    std::vector<std::vector<int>> cycles() const;

    bool isInvolution() const;
    bool hasFixedPoint() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Number of cycles in the disjoint-cycle decomposition (fixed points count).
int cycleCount(const Permutation& p);

} // namespace gue
