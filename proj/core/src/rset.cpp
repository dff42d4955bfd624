#include "hyperlag/rset.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hyperlag {

RSet::RSet(std::vector<Vertex> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    if (!elems_.empty() && elems_.front() < 1) {
        throw std::invalid_argument("set elements must be positive vertex labels");
    }
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw std::invalid_argument("set elements must be distinct");
    }
}

bool RSet::contains(Vertex v) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

long long RSet::sum() const noexcept {
    return std::accumulate(elems_.begin(), elems_.end(), 0LL);
}

RSet RSet::without(Vertex v) const {
    RSet out;
    out.elems_.reserve(elems_.size());
    std::copy_if(elems_.begin(), elems_.end(), std::back_inserter(out.elems_),
                 [v](Vertex u) { return u != v; });
    return out;
}

RSet RSet::with(Vertex v) const {
    RSet out;
    out.elems_.reserve(elems_.size() + 1);
    auto pos = std::lower_bound(elems_.begin(), elems_.end(), v);
    out.elems_.insert(out.elems_.end(), elems_.begin(), pos);
    out.elems_.push_back(v);
    out.elems_.insert(out.elems_.end(), pos, elems_.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const RSet& s) {
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) os << ',';
        os << s[k];
    }
    return os << '}';
}

}  // namespace hyperlag
