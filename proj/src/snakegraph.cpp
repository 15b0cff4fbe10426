#include "clusterforge/snakegraph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace clusterforge {

GridEdge::GridEdge(GridPoint a, GridPoint b) {
    if (b < a) std::swap(a, b);
    u = a;
    v = b;
    const int dx = v.x - u.x, dy = v.y - u.y;
    if (dx + dy != 1 || dx < 0 || dy < 0)
        throw std::invalid_argument("GridEdge: endpoints must be lattice neighbors");
}

SnakeGraph SnakeGraph::from_shape(const Word& shape) {
    SnakeGraph g;
    g.shape_ = shape;
    GridPoint at{0, 0};
    g.tiles_.push_back(at);
    for (std::size_t i = 1; i <= shape.size(); ++i) {
        if (shape.letter(i) == 'a')
            ++at.x;
        else
            ++at.y;
        g.tiles_.push_back(at);
    }
    for (int t = 0; t < g.tile_count(); ++t) {
        for (Side s : {Side::S, Side::E, Side::N, Side::W}) ++g.incidence_[g.side(t, s)];
    }
    for (const auto& [e, count] : g.incidence_) g.edges_.push_back(e);
    return g;
}

GridEdge SnakeGraph::side(int tile_index, Side s) const {
    const GridPoint p = tiles_.at(static_cast<std::size_t>(tile_index));
    switch (s) {
        case Side::S: return {{p.x, p.y}, {p.x + 1, p.y}};
        case Side::E: return {{p.x + 1, p.y}, {p.x + 1, p.y + 1}};
        case Side::N: return {{p.x, p.y + 1}, {p.x + 1, p.y + 1}};
        case Side::W: return {{p.x, p.y}, {p.x, p.y + 1}};
    }
    throw std::logic_error("SnakeGraph::side: bad side");
}

bool SnakeGraph::is_boundary(const GridEdge& e) const {
    auto it = incidence_.find(e);
    if (it == incidence_.end()) throw std::out_of_range("SnakeGraph: no such edge");
    return it->second == 1;
}

int SnakeGraph::label(const GridEdge& e) const {
    auto it = labels_.find(e);
    if (it == labels_.end()) throw std::out_of_range("SnakeGraph: unlabeled edge");
    return it->second;
}

void SnakeGraph::set_label(const GridEdge& e, int label) {
    if (!incidence_.contains(e)) throw std::out_of_range("SnakeGraph: no such edge");
    labels_[e] = label;
}

GridPoint SnakeGraph::ne_corner() const {
    const GridPoint last = tiles_.back();
    return {last.x + 1, last.y + 1};
}

std::vector<GridPoint> SnakeGraph::neighbors(const GridPoint& p) const {
    std::vector<GridPoint> out;
    for (const GridPoint q : {GridPoint{p.x + 1, p.y}, GridPoint{p.x - 1, p.y},
                              GridPoint{p.x, p.y + 1}, GridPoint{p.x, p.y - 1}}) {
        if (incidence_.contains(GridEdge(p, q))) out.push_back(q);
    }
    return out;
}

namespace {

// Corner vertices of one snake tile inside the triangulated polygon.
struct TileCorners {
    int sw, se, nw, ne;
};

int third_vertex(const Triangle& t, int u, int v) {
    for (int w : t.verts)
        if (w != u && w != v) return w;
    throw std::logic_error("third_vertex: degenerate triangle");
}

}  // namespace

SnakeGraph snake_graph(const Word& w) {
    const WordTriangulation tri = WordTriangulation::from_word(w);
    const int n = tri.diagonal_count();
    SnakeGraph g = SnakeGraph::from_shape(w.dual());

    // Unfold the diagonal strip tile by tile: tile i has its crossed diagonal
    // on the NW-SE antidiagonal, and its NE corner is the far vertex of the
    // next triangle along the strip.
    std::vector<TileCorners> corners(static_cast<std::size_t>(n));
    corners[0].sw = tri.source();
    corners[0].se = tri.right(1);
    corners[0].nw = tri.left(1);
    corners[0].ne = third_vertex(tri.triangles().at(1), tri.left(1), tri.right(1));
    const Word& shape = g.shape();
    for (int i = 2; i <= n; ++i) {
        const TileCorners& prev = corners[static_cast<std::size_t>(i - 2)];
        TileCorners cur{};
        if (shape.letter(static_cast<std::size_t>(i - 1)) == 'a') {
            cur.sw = prev.se;
            cur.nw = prev.ne;
            cur.se = tri.left(i) == cur.nw ? tri.right(i) : tri.left(i);
        } else {
            cur.sw = prev.nw;
            cur.se = prev.ne;
            cur.nw = tri.left(i) == cur.se ? tri.right(i) : tri.left(i);
        }
        cur.ne = third_vertex(tri.triangles().at(i), tri.left(i), tri.right(i));
        corners[static_cast<std::size_t>(i - 1)] = cur;
    }

    auto put = [&g, &tri](const GridEdge& e, int u, int v) {
        const int label = tri.label_of(u, v);
        if (g.has_label(e) && g.label(e) != label)
            throw std::logic_error("snake_graph: gluing edge labeled inconsistently");
        g.set_label(e, label);
    };
    for (int i = 0; i < n; ++i) {
        const TileCorners& c = corners[static_cast<std::size_t>(i)];
        put(g.side(i, Side::S), c.sw, c.se);
        put(g.side(i, Side::E), c.se, c.ne);
        put(g.side(i, Side::N), c.nw, c.ne);
        put(g.side(i, Side::W), c.sw, c.nw);
    }
    return g;
}

DualizedSnake dual_snake_graph(const SnakeGraph& g) {
    const int n = g.tile_count();
    std::vector<GridPoint> tiles = g.tiles();
    std::map<GridEdge, int> labels;
    std::map<GridEdge, GridEdge> image;  // original -> current
    for (const GridEdge& e : g.edges()) {
        labels.emplace(e, g.has_labels() ? g.label(e) : 0);
        image.emplace(e, e);
    }

    for (int i = 0; i < n; ++i) {
        const GridPoint base = tiles[static_cast<std::size_t>(i)];
        const int c = base.x + base.y + 1;
        auto reflect = [&base](GridPoint p) {
            return GridPoint{base.x + p.y - base.y, base.y + p.x - base.x};
        };
        for (int j = i + 1; j < n; ++j)
            tiles[static_cast<std::size_t>(j)] = reflect(tiles[static_cast<std::size_t>(j)]);

        std::map<GridEdge, int> moved;
        for (const auto& [e, label] : labels) {
            const bool above = (e.u.x + e.u.y >= c) && (e.v.x + e.v.y >= c);
            const GridEdge target = above ? GridEdge(reflect(e.u), reflect(e.v)) : e;
            if (!moved.emplace(target, label).second)
                throw std::logic_error("dual_snake_graph: reflected edges collided");
        }
        for (auto& [orig, cur] : image) {
            const bool above = (cur.u.x + cur.u.y >= c) && (cur.v.x + cur.v.y >= c);
            if (above) cur = GridEdge(reflect(cur.u), reflect(cur.v));
        }
        labels = std::move(moved);
    }

    assert((tiles.front() == GridPoint{0, 0}));
    std::string shape;
    for (int j = 1; j < n; ++j) {
        const GridPoint a = tiles[static_cast<std::size_t>(j - 1)];
        const GridPoint b = tiles[static_cast<std::size_t>(j)];
        if (b.x == a.x + 1 && b.y == a.y)
            shape.push_back('a');
        else if (b.x == a.x && b.y == a.y + 1)
            shape.push_back('b');
        else
            throw std::logic_error("dual_snake_graph: tiles no longer form a chain");
    }

    DualizedSnake out{SnakeGraph::from_shape(Word(shape)), {}};
    if (out.graph.edges().size() != labels.size())
        throw std::logic_error("dual_snake_graph: edge sets diverged");
    if (g.has_labels()) {
        for (const auto& [e, label] : labels) out.graph.set_label(e, label);
    }
    out.edge_image = std::move(image);
    return out;
}

namespace {

int diagonal_index(const SnakeGraph& g, int tile, Side s) {
    const GridPoint p = g.tiles().at(static_cast<std::size_t>(tile));
    const bool far = (s == Side::N || s == Side::W);
    return p.y - p.x - (far ? 0 : 1);
}

int edge_sign(const SnakeGraph& g, int tile, Side s) {
    return diagonal_index(g, tile, s) % 2 == 0 ? +1 : -1;
}

// The distinguished final edge e_n: across from the previous edge when the
// last three tiles are straight, adjacent when they bend; small cases fixed
// separately.
Side final_side(const Word& shape) {
    const std::size_t m = shape.size();  // n - 1 gluings
    if (m <= 1) return Side::N;
    const char last = shape.letter(m);
    if (shape.letter(m - 1) == last)  // straight
        return last == 'a' ? Side::E : Side::N;
    return last == 'a' ? Side::N : Side::E;  // zigzag
}

}  // namespace

std::vector<int> sign_sequence(const SnakeGraph& g) {
    const Word& shape = g.shape();
    const int n = g.tile_count();
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(n) + 1);
    signs.push_back(edge_sign(g, 0, Side::S));
    for (int i = 1; i < n; ++i) {
        const Side glue = shape.letter(static_cast<std::size_t>(i)) == 'a' ? Side::E : Side::N;
        signs.push_back(edge_sign(g, i - 1, glue));
    }
    signs.push_back(edge_sign(g, n - 1, final_side(shape)));
    return signs;
}

ContinuedFraction cf_from_snake(const SnakeGraph& g) {
    return ContinuedFraction::from_sign_sequence(sign_sequence(g));
}

ContinuedFraction continued_fraction(const Word& w) {
    return cf_from_snake(SnakeGraph::from_shape(w.dual()));
}

std::optional<Word> word_from_signs(const std::vector<int>& signs) {
    if (signs.size() < 2 || signs.front() != -1) return std::nullopt;
    for (int s : signs)
        if (s != 1 && s != -1) return std::nullopt;
    const int n = static_cast<int>(signs.size()) - 1;
    std::string shape;
    int t = 0;  // y - x of the current tile
    for (int i = 1; i < n; ++i) {
        const bool want_even = signs[static_cast<std::size_t>(i)] > 0;
        // gluing right gives diagonal index t-1, gluing on top gives t
        if (((t - 1) % 2 == 0) == want_even) {
            shape.push_back('a');
            --t;
        } else {
            shape.push_back('b');
            ++t;
        }
    }
    const SnakeGraph g = SnakeGraph::from_shape(Word(shape));
    if (sign_sequence(g) != signs) return std::nullopt;
    return Word(shape).dual();
}

std::optional<Word> word_from_cf(const ContinuedFraction& cf) {
    return word_from_signs(cf.sign_sequence());
}

std::vector<int> straight_segments(const SnakeGraph& g) {
    const std::vector<int> runs = g.shape().run_lengths();
    if (runs.size() <= 1) return {g.tile_count()};
    std::vector<int> k(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const bool end = (i == 0 || i + 1 == runs.size());
        k[i] = runs[i] + (end ? 1 : 0);
    }
    return k;
}

std::vector<std::vector<GridEdge>> all_lattice_paths(const SnakeGraph& g) {
    std::vector<std::vector<GridEdge>> paths;
    std::vector<GridEdge> cur;
    const GridPoint goal = g.ne_corner();
    auto dfs = [&](auto&& self, GridPoint at) -> void {
        if (at == goal) {
            paths.push_back(cur);
            return;
        }
        for (const GridPoint next :
             {GridPoint{at.x + 1, at.y}, GridPoint{at.x, at.y + 1}}) {
            bool exists = false;
            for (const GridPoint q : g.neighbors(at))
                if (q == next) exists = true;
            if (!exists) continue;
            cur.emplace_back(at, next);
            self(self, next);
            cur.pop_back();
        }
    };
    dfs(dfs, g.sw_corner());
    return paths;
}

std::vector<std::vector<GridEdge>> all_perfect_matchings(const SnakeGraph& g) {
    std::set<GridPoint> vertex_set;
    for (const GridEdge& e : g.edges()) {
        vertex_set.insert(e.u);
        vertex_set.insert(e.v);
    }
    const std::vector<GridPoint> vertices(vertex_set.begin(), vertex_set.end());

    std::vector<std::vector<GridEdge>> matchings;
    std::set<GridPoint> used;
    std::vector<GridEdge> cur;
    auto dfs = [&](auto&& self) -> void {
        auto it = std::find_if(vertices.begin(), vertices.end(),
                               [&used](const GridPoint& p) { return !used.contains(p); });
        if (it == vertices.end()) {
            matchings.push_back(cur);
            return;
        }
        const GridPoint p = *it;
        used.insert(p);
        for (const GridPoint q : g.neighbors(p)) {
            if (used.contains(q)) continue;
            used.insert(q);
            cur.emplace_back(p, q);
            self(self);
            cur.pop_back();
            used.erase(q);
        }
        used.erase(p);
    };
    dfs(dfs);
    return matchings;
}

BigInt matching_count_after_deleting(const SnakeGraph& g, int drop) {
    if (drop < 0) throw std::invalid_argument("matching_count_after_deleting: drop < 0");
    if (drop >= g.tile_count()) return 1;
    const std::string rest = g.shape().str().substr(static_cast<std::size_t>(drop));
    const SnakeGraph suffix = SnakeGraph::from_shape(Word(rest));
    return static_cast<BigInt>(all_perfect_matchings(suffix).size());
}

FinitePoset orbit_poset(int tiles, int j) {
    if (tiles < 1) throw std::invalid_argument("orbit_poset: need at least one tile");
    const int len = tiles - 1;
    if (j < 0 || j > len) throw std::invalid_argument("orbit_poset: letter count out of range");

    std::vector<std::string> payloads;
    for (const Word& w : all_words(static_cast<std::size_t>(len))) {
        if (std::count(w.str().begin(), w.str().end(), 'b') == j) payloads.push_back(w.str());
    }
    std::vector<std::pair<int, int>> relations;
    auto index_of = [&payloads](const std::string& s) {
        return static_cast<int>(std::lower_bound(payloads.begin(), payloads.end(), s) -
                                payloads.begin());
    };
    for (const std::string& s : payloads) {
        for (std::size_t p = 0; p + 1 < s.size(); ++p) {
            if (s[p] == 'a' && s[p + 1] == 'b') {
                std::string up = s;
                std::swap(up[p], up[p + 1]);
                relations.emplace_back(index_of(s), index_of(up));
            }
        }
    }
    return FinitePoset(std::move(payloads), std::move(relations));
}

std::vector<Word> groupoid_neighbors(const Word& shape) {
    std::vector<Word> out;
    const std::string& s = shape.str();
    for (std::size_t p = 0; p + 1 < s.size(); ++p) {
        if (s[p] != s[p + 1]) {
            std::string t = s;
            std::swap(t[p], t[p + 1]);
            out.emplace_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

YoungEmbedding embed_lattice_paths(const SnakeGraph& g) {
    YoungEmbedding out;
    std::vector<std::string> words;
    for (const std::vector<GridEdge>& path : all_lattice_paths(g)) {
        std::string word;
        for (const GridEdge& step : path) word.push_back(step.horizontal() ? 'a' : 'b');
        words.push_back(std::move(word));
    }
    std::sort(words.begin(), words.end());
    for (const std::string& word : words) out.member_shapes.emplace_back(word);

    // The path hugging the lower-right boundary reads all its a-steps as
    // early as possible, so its word is the lexicographic minimum; the
    // upper-left path is the maximum.
    out.low = out.member_shapes.front();
    out.high = out.member_shapes.back();
    return out;
}

}  // namespace clusterforge
