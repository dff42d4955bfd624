#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace hyperlag {

/// Vertex labels are 1-based, so a graph on n vertices uses [n] = {1, ..., n}.
using Vertex = int;

/// A finite set of positive vertex labels, stored strictly increasing.
///
/// Edges of an r-graph are RSets of size r. Lower-uniformity neighbourhoods
/// (links) reuse the same type, including the empty set for pair links of
/// 2-graphs.
class RSet {
public:
    RSet() = default;
    /// Sorts the input; throws std::invalid_argument on a non-positive or
    /// repeated label.
    explicit RSet(std::vector<Vertex> elements);
    RSet(std::initializer_list<Vertex> elements) : RSet(std::vector<Vertex>(elements)) {}

    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    Vertex operator[](std::size_t k) const noexcept { return elems_[k]; }
    Vertex front() const noexcept { return elems_.front(); }
    Vertex back() const noexcept { return elems_.back(); }
    std::span<const Vertex> elements() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    bool contains(Vertex v) const noexcept;
    long long sum() const noexcept;

    /// Copy without v (v must be present).
    RSet without(Vertex v) const;
    /// Copy with v added (v must be absent).
    RSet with(Vertex v) const;

    /// Lexicographic comparison of the sorted element sequences. This is a
    /// container order only; colex order lives in colex.hpp.
    friend auto operator<=>(const RSet&, const RSet&) = default;
    friend bool operator==(const RSet&, const RSet&) = default;

private:
    std::vector<Vertex> elems_;
};

std::ostream& operator<<(std::ostream& os, const RSet& s);

}  // namespace hyperlag
