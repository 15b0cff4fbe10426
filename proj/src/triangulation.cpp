#include "clusterforge/triangulation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clusterforge {

namespace {

std::pair<int, int> ordered(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

WordTriangulation WordTriangulation::from_word(const Word& w) {
    WordTriangulation t;
    t.word_ = w;
    const int n = static_cast<int>(w.size()) + 1;
    t.n_ = n;

    t.vertex_names_.push_back("a");
    t.source_ = 0;
    auto new_vertex = [&t](const std::string& name) {
        t.vertex_names_.push_back(name);
        return static_cast<int>(t.vertex_names_.size()) - 1;
    };
    t.left_.assign(n, -1);
    t.right_.assign(n, -1);
    t.left_[0] = new_vertex("l1");
    t.right_[0] = new_vertex("r1");
    for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
        if (w.letter(i) == 'a') {
            t.left_[i] = new_vertex("l" + std::to_string(i + 1));
            t.right_[i] = t.right_[i - 1];
        } else {
            t.left_[i] = t.left_[i - 1];
            t.right_[i] = new_vertex("r" + std::to_string(i + 1));
        }
    }
    t.sink_ = new_vertex("b");

    t.label_endpoints_.assign(2 * n + 3 + 1, {-1, -1});
    auto set_label = [&t](int label, int u, int v) {
        t.label_endpoints_[label] = ordered(u, v);
        t.edge_labels_[ordered(u, v)] = label;
    };
    for (int i = 1; i <= n; ++i) set_label(i, t.left_[i - 1], t.right_[i - 1]);
    for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) {
        if (w.letter(i) == 'a') {
            set_label(n + static_cast<int>(i), t.left_[i - 1], t.left_[i]);
        } else {
            set_label(n + static_cast<int>(i), t.right_[i - 1], t.right_[i]);
        }
    }
    set_label(2 * n, t.source_, t.right_[0]);
    set_label(2 * n + 1, t.source_, t.left_[0]);
    const bool swap_last = w.size() % 2 == 0 && w.size() >= 2 &&
                           w.letter(w.size()) != w.letter(w.size() - 1);
    if (swap_last) {
        set_label(2 * n + 3, t.left_[n - 1], t.sink_);
        set_label(2 * n + 2, t.right_[n - 1], t.sink_);
    } else {
        set_label(2 * n + 2, t.left_[n - 1], t.sink_);
        set_label(2 * n + 3, t.right_[n - 1], t.sink_);
    }

    auto make_triangle = [&t](int u, int v, int x) {
        Triangle tr;
        tr.verts = {u, v, x};
        tr.opposite_labels = {t.label_of(v, x), t.label_of(u, x), t.label_of(u, v)};
        return tr;
    };
    t.triangles_.push_back(make_triangle(t.source_, t.left_[0], t.right_[0]));
    for (int i = 1; i < n; ++i) {
        // The triangle between diagonals i and i+1 has the shared endpoint
        // plus both non-shared ones.
        std::set<int> verts{t.left_[i - 1], t.right_[i - 1], t.left_[i], t.right_[i]};
        if (verts.size() != 3) throw std::logic_error("triangle strip corrupted");
        auto it = verts.begin();
        const int u = *it++;
        const int v = *it++;
        const int x = *it;
        t.triangles_.push_back(make_triangle(u, v, x));
    }
    t.triangles_.push_back(make_triangle(t.left_[n - 1], t.right_[n - 1], t.sink_));

    t.boundary_cycle_.push_back(t.source_);
    for (int i = 0; i < n; ++i) {
        if (i == 0 || t.left_[i] != t.left_[i - 1]) t.boundary_cycle_.push_back(t.left_[i]);
    }
    t.boundary_cycle_.push_back(t.sink_);
    for (int i = n - 1; i >= 0; --i) {
        if (i == n - 1 || t.right_[i] != t.right_[i + 1]) t.boundary_cycle_.push_back(t.right_[i]);
    }
    if (static_cast<int>(t.boundary_cycle_.size()) != t.vertex_count()) {
        throw std::logic_error("boundary cycle corrupted");
    }
    return t;
}

bool WordTriangulation::has_edge(int u, int v) const {
    return edge_labels_.count(ordered(u, v)) > 0;
}

int WordTriangulation::label_of(int u, int v) const {
    auto it = edge_labels_.find(ordered(u, v));
    if (it == edge_labels_.end()) throw std::out_of_range("no edge between vertices");
    return it->second;
}

std::pair<int, int> WordTriangulation::endpoints(int label) const {
    if (label < 1 || label > label_count()) throw std::out_of_range("bad edge label");
    return label_endpoints_[label];
}

std::array<int, 2> WordTriangulation::sides_at(int triangle_index, int vertex) const {
    const Triangle& tr = triangles_.at(triangle_index);
    std::array<int, 2> out{};
    int found = 0;
    for (int k = 0; k < 3; ++k) {
        if (tr.verts[k] != vertex) {
            if (found == 2) throw std::invalid_argument("vertex not in triangle");
            out[found++] = label_of(vertex, tr.verts[k]);
        }
    }
    if (found != 2) throw std::invalid_argument("vertex not in triangle");
    return out;
}

int WordTriangulation::opposite_label(int triangle_index, int vertex) const {
    const Triangle& tr = triangles_.at(triangle_index);
    for (int k = 0; k < 3; ++k) {
        if (tr.verts[k] == vertex) return tr.opposite_labels[k];
    }
    throw std::invalid_argument("vertex not in triangle");
}

bool WordTriangulation::is_fan() const { return word_.is_straight(); }

std::vector<int> WordTriangulation::labels_at_vertex(int v) const {
    std::vector<int> out;
    for (int label = 1; label <= label_count(); ++label) {
        auto [p, q] = label_endpoints_[label];
        if (p == v || q == v) out.push_back(label);
    }
    return out;
}

CurveSystem resolve_crossing(const CurveSystem& system, const WordTriangulation& tri,
                             int diagonal, bool pick_left) {
    CurveSystem out;
    bool found = false;
    for (const CurvePiece& piece : system) {
        auto it = std::find(piece.crossings.begin(), piece.crossings.end(), diagonal);
        if (it == piece.crossings.end()) {
            out.push_back(piece);
            continue;
        }
        if (found) throw std::logic_error("diagonal crossed twice");
        found = true;
        const int x = pick_left ? tri.left(diagonal) : tri.right(diagonal);
        const int y = pick_left ? tri.right(diagonal) : tri.left(diagonal);
        out.push_back({piece.from, {piece.crossings.begin(), it}, x});
        out.push_back({y, {std::next(it), piece.crossings.end()}, piece.to});
    }
    if (!found) throw std::invalid_argument("diagonal not crossed");
    return out;
}

Laurent resolved_weight(const CurveSystem& system, const WordTriangulation& tri) {
    const int nvars = tri.label_count();
    Laurent weight = Laurent::one(nvars);
    for (const CurvePiece& piece : system) {
        if (!piece.crossings.empty()) throw std::invalid_argument("unresolved crossing");
        if (piece.from == piece.to) return Laurent::zero(nvars);
        weight = weight * Laurent::variable(nvars, tri.label_of(piece.from, piece.to) - 1);
    }
    return weight;
}

std::vector<CurveSystem> enumerate_resolutions(const WordTriangulation& tri) {
    const int n = tri.diagonal_count();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    const CurveSystem initial{{tri.source(), all, tri.sink()}};
    std::vector<CurveSystem> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        CurveSystem system = initial;
        for (int i = 0; i < n; ++i) {
            system = resolve_crossing(system, tri, i + 1, (choice >> i) & 1);
        }
        out.push_back(std::move(system));
    }
    return out;
}

Laurent resolution_sum(const WordTriangulation& tri) {
    Laurent sum = Laurent::zero(tri.label_count());
    for (const CurveSystem& system : enumerate_resolutions(tri)) {
        sum = sum + resolved_weight(system, tri);
    }
    return sum;
}

std::vector<Laurent> dual_resolution_weights(const WordTriangulation& tri) {
    const int n = tri.diagonal_count();
    const int nvars = tri.label_count();
    std::vector<Laurent> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        std::vector<int> visits{tri.source()};
        for (int i = 0; i < n; ++i) {
            visits.push_back(((choice >> i) & 1) ? tri.left(i + 1) : tri.right(i + 1));
        }
        visits.push_back(tri.sink());
        Laurent weight = Laurent::one(nvars);
        for (std::size_t j = 0; j + 1 < visits.size(); ++j) {
            if (visits[j] == visits[j + 1]) {
                weight = Laurent::zero(nvars);
                break;
            }
            weight = weight * Laurent::variable(nvars, tri.label_of(visits[j], visits[j + 1]) - 1);
        }
        out.push_back(std::move(weight));
    }
    return out;
}

Laurent dual_resolution_sum(const WordTriangulation& tri) {
    Laurent sum = Laurent::zero(tri.label_count());
    for (const Laurent& weight : dual_resolution_weights(tri)) sum = sum + weight;
    return sum;
}

}  // namespace clusterforge
