#include "clusterforge/ptolemy.hpp"

#include <stdexcept>

namespace clusterforge {

ChordOracle::ChordOracle(const WordTriangulation& tri) : tri_(tri) {
    size_ = tri.vertex_count();
    position_.assign(size_, -1);
    at_position_ = tri.boundary_cycle();
    for (int p = 0; p < size_; ++p) position_[at_position_[p]] = p;
}

bool ChordOracle::separates(int u, int v, int p, int q) const {
    // True when the chord p-q crosses the chord u-v strictly.
    auto between = [this](int lo, int hi, int x) {
        // x strictly between lo and hi walking forward around the cycle
        int d_hi = (hi - lo + size_) % size_;
        int d_x = (x - lo + size_) % size_;
        return d_x > 0 && d_x < d_hi;
    };
    const int pu = position_[u], pv = position_[v], pp = position_[p], pq = position_[q];
    return between(pu, pv, pp) != between(pu, pv, pq);
}

const Laurent& ChordOracle::chord(int u, int v) {
    const int nvars = tri_.label_count();
    auto key = std::pair{std::min(u, v), std::max(u, v)};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Laurent value = Laurent::one(nvars);
    if (u != v) {
        if (tri_.has_edge(u, v)) {
            value = Laurent::variable(nvars, tri_.label_of(u, v) - 1);
        } else {
            int cross = -1;
            for (int d = 1; d <= tri_.diagonal_count(); ++d) {
                auto [p, q] = tri_.endpoints(d);
                if (p == u || p == v || q == u || q == v) continue;
                if (separates(u, v, p, q)) {
                    cross = d;
                    break;
                }
            }
            if (cross < 0) throw std::logic_error("no crossing diagonal for chord");
            auto [p, q] = tri_.endpoints(cross);
            const Laurent numerator = chord(u, p) * chord(v, q) + chord(u, q) * chord(v, p);
            value = numerator.exact_div(chord(p, q));
        }
    }
    return memo_.emplace(key, std::move(value)).first->second;
}

const Laurent& ChordOracle::word_variable() { return chord(tri_.source(), tri_.sink()); }

}  // namespace clusterforge
