#include "clusterforge/expansions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace clusterforge {

namespace {

std::string edge_key(const GridEdge& e) {
    std::ostringstream os;
    os << e.u.x << ',' << e.u.y << '-' << e.v.x << ',' << e.v.y;
    return os.str();
}

std::string edges_key(std::vector<GridEdge> edges) {
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (const GridEdge& e : edges) {
        if (!out.empty()) out += ';';
        out += edge_key(e);
    }
    return out;
}

int snake_variable_count(const SnakeGraph& g) { return 2 * g.tile_count() + 3; }

Laurent edge_product(const SnakeGraph& g, const std::vector<GridEdge>& edges) {
    const int nvars = snake_variable_count(g);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (const GridEdge& edge : edges) ++e[static_cast<std::size_t>(g.label(edge) - 1)];
    return Laurent::monomial(std::move(e), 1);
}

// Assemble a poset from canonical element keys and the up-move relation.
FinitePoset assemble(std::vector<std::string> payloads,
                     const std::vector<std::vector<int>>& ups,
                     std::vector<Laurent> weights) {
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < static_cast<int>(ups.size()); ++i)
        for (int j : ups[static_cast<std::size_t>(i)]) relations.emplace_back(i, j);
    FinitePoset poset(std::move(payloads), std::move(relations));
    if (!weights.empty()) poset.set_weights(std::move(weights));
    if (poset.size() > 0 && poset.minimal_elements().size() != 1)
        throw ExpansionError("expansion poset has no unique minimal element");
    return poset;
}

int tile_number(const SnakeGraph& g, const GridPoint& anchor) {
    const auto& tiles = g.tiles();
    auto it = std::find(tiles.begin(), tiles.end(), anchor);
    if (it == tiles.end()) return 0;
    return static_cast<int>(it - tiles.begin()) + 1;
}

}  // namespace

ExpansionKind expansion_kind_from_letter(char c) {
    switch (c) {
        case 'P': return ExpansionKind::matchings;
        case 'A': return ExpansionKind::angle_matchings;
        case 'T': return ExpansionKind::t_paths;
        case 'L': return ExpansionKind::lattice_paths;
        case 'B': return ExpansionKind::angle_paths;
        case 'S': return ExpansionKind::edge_walks;
    }
    throw std::invalid_argument("expansion kind letter must be one of P,A,T,L,B,S");
}

char expansion_letter(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::matchings: return 'P';
        case ExpansionKind::angle_matchings: return 'A';
        case ExpansionKind::t_paths: return 'T';
        case ExpansionKind::lattice_paths: return 'L';
        case ExpansionKind::angle_paths: return 'B';
        case ExpansionKind::edge_walks: return 'S';
    }
    throw std::invalid_argument("bad expansion kind");
}

std::string expansion_kind_name(ExpansionKind k) {
    switch (k) {
        case ExpansionKind::matchings: return "matchings";
        case ExpansionKind::angle_matchings: return "angle-matchings";
        case ExpansionKind::t_paths: return "t-paths";
        case ExpansionKind::lattice_paths: return "lattice-paths";
        case ExpansionKind::angle_paths: return "angle-paths";
        case ExpansionKind::edge_walks: return "edge-walks";
    }
    throw std::invalid_argument("bad expansion kind");
}

FinitePoset matching_poset(const SnakeGraph& g) {
    const std::vector<std::vector<GridEdge>> matchings = all_perfect_matchings(g);
    std::map<std::string, int> index;
    std::vector<std::string> payloads;
    for (const auto& m : matchings) {
        payloads.push_back(edges_key(m));
        index.emplace(payloads.back(), static_cast<int>(payloads.size()) - 1);
    }

    auto up_moves = [&g, &index](const std::vector<GridEdge>& m) {
        std::vector<int> ups;
        const std::set<GridEdge> in(m.begin(), m.end());
        for (int t = 0; t < g.tile_count(); ++t) {
            const bool odd = (t + 1) % 2 == 1;
            const GridEdge s = g.side(t, Side::S), e = g.side(t, Side::E);
            const GridEdge n = g.side(t, Side::N), w = g.side(t, Side::W);
            const GridEdge out1 = odd ? s : e, out2 = odd ? n : w;
            const GridEdge in1 = odd ? e : s, in2 = odd ? w : n;
            if (!in.contains(out1) || !in.contains(out2)) continue;
            std::vector<GridEdge> next;
            for (const GridEdge& x : m)
                if (x != out1 && x != out2) next.push_back(x);
            next.push_back(in1);
            next.push_back(in2);
            ups.push_back(index.at(edges_key(next)));
        }
        return ups;
    };

    std::vector<std::vector<int>> ups;
    std::vector<Laurent> weights;
    for (const auto& m : matchings) {
        ups.push_back(up_moves(m));
        if (g.has_labels()) weights.push_back(edge_product(g, m));
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

FinitePoset lattice_path_poset(const SnakeGraph& g) {
    const std::vector<std::vector<GridEdge>> paths = all_lattice_paths(g);
    std::map<std::string, int> index;
    std::vector<std::string> payloads;
    auto path_key = [](const std::vector<GridEdge>& p) {
        std::string s;
        for (const GridEdge& step : p) s.push_back(step.horizontal() ? 'E' : 'N');
        return s;
    };
    for (const auto& p : paths) {
        payloads.push_back(path_key(p));
        index.emplace(payloads.back(), static_cast<int>(payloads.size()) - 1);
    }

    auto up_moves = [&](const std::vector<GridEdge>& p) {
        std::vector<int> ups;
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            if (!p[j].horizontal() || p[j + 1].horizontal()) continue;
            const GridPoint corner = p[j].u;  // SW corner of the flipped tile
            // the flipped path needs the W and N sides of that tile
            if (tile_number(g, corner) == 0) continue;
            std::vector<GridEdge> next = p;
            next[j] = GridEdge(corner, {corner.x, corner.y + 1});
            next[j + 1] = GridEdge({corner.x, corner.y + 1}, {corner.x + 1, corner.y + 1});
            ups.push_back(index.at(path_key(next)));
        }
        return ups;
    };

    std::vector<std::vector<int>> ups;
    std::vector<Laurent> weights;
    for (const auto& p : paths) {
        ups.push_back(up_moves(p));
        if (g.has_labels()) weights.push_back(edge_product(g, p));
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

namespace {

std::vector<int> sorted_labels(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    return labels;
}

// Label multiset of the matching a t-path corresponds to: blue steps plus
// every diagonal that is not a red step.
std::vector<int> t_path_matching_labels(const std::vector<int>& seq, int n) {
    std::set<int> reds;
    std::vector<int> labels;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        if (j % 2 == 1)
            reds.insert(seq[j]);
        else
            labels.push_back(seq[j]);
    }
    for (int d = 1; d <= n; ++d)
        if (!reds.contains(d)) labels.push_back(d);
    return sorted_labels(std::move(labels));
}

bool multiset_replace(std::vector<int>& labels, int out1, int out2, int in1, int in2) {
    auto take = [&labels](int value) {
        auto it = std::find(labels.begin(), labels.end(), value);
        if (it == labels.end()) return false;
        labels.erase(it);
        return true;
    };
    if (!take(out1) || !take(out2)) return false;
    labels.push_back(in1);
    labels.push_back(in2);
    std::sort(labels.begin(), labels.end());
    return true;
}

}  // namespace

FinitePoset t_path_poset(const WordTriangulation& tri) {
    const int n = tri.diagonal_count();
    const int nvars = tri.label_count();
    const int sink = tri.sink();

    std::vector<std::vector<int>> elements;  // label sequences
    std::vector<int> seq;
    std::set<int> used;
    auto dfs = [&](auto&& self, int at, int red_cursor) -> void {
        for (int label = 1; label <= nvars; ++label) {
            if (used.contains(label)) continue;
            const auto [p, q] = tri.endpoints(label);
            if (p != at && q != at) continue;
            const int to = p == at ? q : p;
            seq.push_back(label);
            if (to == sink) {
                elements.push_back(seq);
            } else {
                used.insert(label);
                for (int i = red_cursor; i <= n; ++i) {
                    if (used.contains(i)) continue;
                    const int li = tri.left(i), ri = tri.right(i);
                    if (to != li && to != ri) continue;
                    used.insert(i);
                    seq.push_back(i);
                    self(self, to == li ? ri : li, i + 1);
                    seq.pop_back();
                    used.erase(i);
                }
                used.erase(label);
            }
            seq.pop_back();
        }
    };
    dfs(dfs, tri.source(), 1);

    std::map<std::vector<int>, int> by_matching;
    std::vector<std::string> payloads;
    std::vector<Laurent> weights;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        const std::vector<int>& s = elements[static_cast<std::size_t>(i)];
        std::string key;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j) key += ',';
            key += std::to_string(s[j]);
        }
        payloads.push_back(key);
        if (!by_matching.emplace(t_path_matching_labels(s, n), i).second)
            throw ExpansionError("t-paths with colliding matching label sets");
        Exponents exps(static_cast<std::size_t>(nvars), 0);
        for (std::size_t j = 0; j < s.size(); ++j)
            exps[static_cast<std::size_t>(s[j] - 1)] += (j % 2 == 0) ? 1 : -1;
        weights.push_back(Laurent::monomial(std::move(exps), 1));
    }

    // Side labels of the unfolded snake tiles drive the twist moves.
    const SnakeGraph g = snake_graph(tri.word());
    std::vector<std::vector<int>> ups(elements.size());
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        std::vector<int> base =
            t_path_matching_labels(elements[static_cast<std::size_t>(i)], n);
        for (int t = 0; t < n; ++t) {
            const bool odd = (t + 1) % 2 == 1;
            const int s = g.label(g.side(t, Side::S)), e = g.label(g.side(t, Side::E));
            const int nn = g.label(g.side(t, Side::N)), w = g.label(g.side(t, Side::W));
            std::vector<int> next = base;
            const bool ok = odd ? multiset_replace(next, s, nn, e, w)
                                : multiset_replace(next, e, w, s, nn);
            if (!ok) continue;
            auto it = by_matching.find(next);
            if (it != by_matching.end()) ups[static_cast<std::size_t>(i)].push_back(it->second);
        }
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

namespace {

std::vector<bool> diagonal_endpoint_mask(const WordTriangulation& tri) {
    std::vector<bool> mask(static_cast<std::size_t>(tri.vertex_count()), false);
    for (int i = 1; i <= tri.diagonal_count(); ++i) {
        mask[static_cast<std::size_t>(tri.left(i))] = true;
        mask[static_cast<std::size_t>(tri.right(i))] = true;
    }
    return mask;
}

std::string angles_key(const WordTriangulation& tri, const std::vector<int>& angles) {
    std::string key;
    for (std::size_t t = 0; t < angles.size(); ++t) {
        if (t) key += '|';
        key += tri.vertex_name(angles[t]);
    }
    return key;
}

Laurent angle_weight(const WordTriangulation& tri, const std::vector<int>& angles) {
    Exponents exps(static_cast<std::size_t>(tri.label_count()), 0);
    for (std::size_t t = 0; t < angles.size(); ++t)
        ++exps[static_cast<std::size_t>(
            tri.opposite_label(static_cast<int>(t), angles[t]) - 1)];
    return Laurent::monomial(std::move(exps), 1);
}

std::vector<std::vector<int>> allowed_angle_vertices(const WordTriangulation& tri) {
    const std::vector<bool> mask = diagonal_endpoint_mask(tri);
    std::vector<std::vector<int>> allowed;
    for (const Triangle& t : tri.triangles()) {
        std::vector<int> verts;
        for (int v : t.verts)
            if (mask[static_cast<std::size_t>(v)]) verts.push_back(v);
        allowed.push_back(std::move(verts));
    }
    return allowed;
}

}  // namespace

FinitePoset angle_matching_poset(const WordTriangulation& tri) {
    const std::vector<std::vector<int>> allowed = allowed_angle_vertices(tri);
    const int tris = static_cast<int>(allowed.size());

    std::vector<std::vector<int>> elements;
    std::vector<int> cur;
    std::set<int> taken;
    auto dfs = [&](auto&& self, int t) -> void {
        if (t == tris) {
            elements.push_back(cur);
            return;
        }
        for (int v : allowed[static_cast<std::size_t>(t)]) {
            if (taken.contains(v)) continue;
            taken.insert(v);
            cur.push_back(v);
            self(self, t + 1);
            cur.pop_back();
            taken.erase(v);
        }
    };
    dfs(dfs, 0);

    std::map<std::string, int> index;
    std::vector<std::string> payloads;
    std::vector<Laurent> weights;
    for (const auto& angles : elements) {
        payloads.push_back(angles_key(tri, angles));
        index.emplace(payloads.back(), static_cast<int>(payloads.size()) - 1);
        weights.push_back(angle_weight(tri, angles));
    }

    std::vector<std::vector<int>> ups(elements.size());
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        const std::vector<int>& angles = elements[static_cast<std::size_t>(i)];
        for (int d = 1; d <= tri.diagonal_count(); ++d) {
            const int li = tri.left(d), ri = tri.right(d);
            if (angles[static_cast<std::size_t>(d - 1)] != li ||
                angles[static_cast<std::size_t>(d)] != ri)
                continue;
            std::vector<int> next = angles;
            next[static_cast<std::size_t>(d - 1)] = ri;
            next[static_cast<std::size_t>(d)] = li;
            ups[static_cast<std::size_t>(i)].push_back(index.at(angles_key(tri, next)));
        }
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

FinitePoset angle_path_poset(const WordTriangulation& tri) {
    const std::vector<std::vector<int>> allowed = allowed_angle_vertices(tri);
    const std::vector<bool> mask = diagonal_endpoint_mask(tri);
    const int tris = static_cast<int>(allowed.size());

    // Parity targets: at every diagonal endpoint, the number of angles must
    // match the number of incident strip triangles mod 2.
    std::vector<int> target(static_cast<std::size_t>(tri.vertex_count()), 0);
    std::vector<int> last_triangle(static_cast<std::size_t>(tri.vertex_count()), -1);
    for (int t = 0; t < tris; ++t) {
        for (int v : tri.triangles()[static_cast<std::size_t>(t)].verts) {
            if (!mask[static_cast<std::size_t>(v)]) continue;
            target[static_cast<std::size_t>(v)] ^= 1;
            last_triangle[static_cast<std::size_t>(v)] = t;
        }
    }

    std::vector<std::vector<int>> elements;
    std::vector<int> cur;
    std::vector<int> count(static_cast<std::size_t>(tri.vertex_count()), 0);
    auto dfs = [&](auto&& self, int t) -> void {
        if (t == tris) {
            elements.push_back(cur);
            return;
        }
        for (int v : allowed[static_cast<std::size_t>(t)]) {
            ++count[static_cast<std::size_t>(v)];
            cur.push_back(v);
            bool ok = true;
            for (int u : tri.triangles()[static_cast<std::size_t>(t)].verts) {
                if (!mask[static_cast<std::size_t>(u)]) continue;
                if (last_triangle[static_cast<std::size_t>(u)] == t &&
                    count[static_cast<std::size_t>(u)] % 2 !=
                        target[static_cast<std::size_t>(u)])
                    ok = false;
            }
            if (ok) self(self, t + 1);
            cur.pop_back();
            --count[static_cast<std::size_t>(v)];
        }
    };
    dfs(dfs, 0);

    std::map<std::string, int> index;
    std::vector<std::string> payloads;
    std::vector<Laurent> weights;
    for (const auto& angles : elements) {
        payloads.push_back(angles_key(tri, angles));
        index.emplace(payloads.back(), static_cast<int>(payloads.size()) - 1);
        weights.push_back(angle_weight(tri, angles));
    }

    std::vector<std::vector<int>> ups(elements.size());
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        const std::vector<int>& angles = elements[static_cast<std::size_t>(i)];
        for (int d = 1; d <= tri.diagonal_count(); ++d) {
            const int li = tri.left(d), ri = tri.right(d);
            const int from = (d % 2 == 1) ? li : ri;
            const int to = (d % 2 == 1) ? ri : li;
            if (angles[static_cast<std::size_t>(d - 1)] != from ||
                angles[static_cast<std::size_t>(d)] != from)
                continue;
            std::vector<int> next = angles;
            next[static_cast<std::size_t>(d - 1)] = to;
            next[static_cast<std::size_t>(d)] = to;
            auto it = index.find(angles_key(tri, next));
            if (it == index.end())
                throw ExpansionError("angle-path flip left the enumerated set");
            ups[static_cast<std::size_t>(i)].push_back(it->second);
        }
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

FinitePoset edge_walk_poset(const WordTriangulation& tri) {
    const int n = tri.diagonal_count();
    const int steps = n + 1;

    std::vector<int> vertices(static_cast<std::size_t>(tri.vertex_count()));
    for (int v = 0; v < tri.vertex_count(); ++v) vertices[static_cast<std::size_t>(v)] = v;

    auto covers_all_triangles = [&tri](const std::vector<int>& walk) {
        for (const Triangle& t : tri.triangles()) {
            bool hit = false;
            for (std::size_t j = 0; j + 1 < walk.size() && !hit; ++j) {
                for (int k = 0; k < 3 && !hit; ++k) {
                    const int u = t.verts[static_cast<std::size_t>(k)];
                    const int v = t.verts[static_cast<std::size_t>((k + 1) % 3)];
                    if ((walk[j] == u && walk[j + 1] == v) ||
                        (walk[j] == v && walk[j + 1] == u))
                        hit = true;
                }
            }
            if (!hit) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> elements;  // vertex walks
    std::vector<int> walk{tri.source()};
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(walk.size()) == steps + 1) {
            if (walk.back() == tri.sink() && covers_all_triangles(walk))
                elements.push_back(walk);
            return;
        }
        for (int v : vertices) {
            if (!tri.has_edge(walk.back(), v)) continue;
            walk.push_back(v);
            self(self);
            walk.pop_back();
        }
    };
    dfs(dfs);

    auto walk_key = [&tri](const std::vector<int>& w) {
        std::string key;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (j) key += '|';
            key += tri.vertex_name(w[j]);
        }
        return key;
    };

    std::map<std::string, int> index;
    std::vector<std::string> payloads;
    std::vector<Laurent> weights;
    for (const auto& w : elements) {
        payloads.push_back(walk_key(w));
        index.emplace(payloads.back(), static_cast<int>(payloads.size()) - 1);
        Exponents exps(static_cast<std::size_t>(tri.label_count()), 0);
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            ++exps[static_cast<std::size_t>(tri.label_of(w[j], w[j + 1]) - 1)];
        weights.push_back(Laurent::monomial(std::move(exps), 1));
    }

    std::vector<std::vector<int>> ups(elements.size());
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        const std::vector<int>& w = elements[static_cast<std::size_t>(i)];
        for (std::size_t j = 1; j + 1 < w.size(); ++j) {
            for (int d = 1; d <= n; ++d) {
                const int from = (d % 2 == 1) ? tri.right(d) : tri.left(d);
                const int to = (d % 2 == 1) ? tri.left(d) : tri.right(d);
                if (w[j] != from) continue;
                if (!tri.has_edge(w[j - 1], to) || !tri.has_edge(to, w[j + 1])) continue;
                std::vector<int> next = w;
                next[j] = to;
                auto it = index.find(walk_key(next));
                if (it == index.end()) continue;  // flip target fails coverage
                ups[static_cast<std::size_t>(i)].push_back(it->second);
            }
        }
    }
    return assemble(std::move(payloads), ups, std::move(weights));
}

FinitePoset expansion_poset(ExpansionKind kind, const Word& w) {
    switch (kind) {
        case ExpansionKind::matchings: return matching_poset(snake_graph(w));
        case ExpansionKind::angle_matchings:
            return angle_matching_poset(WordTriangulation::from_word(w));
        case ExpansionKind::t_paths: return t_path_poset(WordTriangulation::from_word(w));
        case ExpansionKind::lattice_paths: return lattice_path_poset(snake_graph(w.dual()));
        case ExpansionKind::angle_paths:
            return angle_path_poset(WordTriangulation::from_word(w.dual()));
        case ExpansionKind::edge_walks:
            return edge_walk_poset(WordTriangulation::from_word(w.dual()));
    }
    throw std::invalid_argument("bad expansion kind");
}

int variable_count(const Word& w) { return 2 * (static_cast<int>(w.size()) + 1) + 3; }

Laurent diagonal_product(const Word& w) {
    const int nvars = variable_count(w);
    const int n = static_cast<int>(w.size()) + 1;
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = 1;
    return Laurent::monomial(std::move(e), 1);
}

std::vector<std::string> variable_names(const Word& w) {
    std::vector<std::string> names;
    for (int i = 1; i <= variable_count(w); ++i) names.push_back("x" + std::to_string(i));
    return names;
}

Laurent expansion_value(ExpansionKind kind, const FinitePoset& poset, const Word& w) {
    const Laurent sum = poset.weight_sum();
    if (kind == ExpansionKind::t_paths) return sum;
    return sum.exact_div(diagonal_product(w));
}

Laurent expand_word(ExpansionKind kind, const Word& w) {
    return expansion_value(kind, expansion_poset(kind, w), w);
}

}  // namespace clusterforge
