#include "gue/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gue {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int size) {
    std::vector<int> im(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::fromCycles(int size, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> im(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) im[static_cast<std::size_t>(i)] = i;
    for (const auto& cyc : cycles) {
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            const int from = cyc[j];
            const int to = cyc[(j + 1) % cyc.size()];
            if (from < 0 || from >= size) throw std::invalid_argument("fromCycles: element out of range");
            im[static_cast<std::size_t>(from)] = to;
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::after(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("Permutation::after: size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(i)] = (*this)(other(i));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>((*this)(i))] = i;
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            cyc.push_back(x);
            x = (*this)(x);
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

bool Permutation::isInvolution() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

bool Permutation::hasFixedPoint() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) == i) return true;
    return false;
}

int cycleCount(const Permutation& p) {
    int count = 0;
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    for (int start = 0; start < p.size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++count;
        int x = start;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            x = p(x);
        } while (x != start);
    }
    return count;
}

} // namespace gue
