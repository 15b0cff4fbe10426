#include "clusterforge/sl3.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace clusterforge {

// ---------------------------------------------------------------------
// SL3Element / SL3Diagram

SL3Element SL3Element::edge(int from, int to) {
  if (from == to) throw SL3Error("SL3Element::edge: loop");
  SL3Element e;
  e.kind = Kind::edge;
  e.a = from;
  e.b = to;
  e.c = -1;
  return e;
}

SL3Element SL3Element::face(int p, int q, int r) {
  std::array<int, 3> v{p, q, r};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2])
    throw SL3Error("SL3Element::face: repeated vertex");
  SL3Element e;
  e.kind = Kind::face;
  e.a = v[0];
  e.b = v[1];
  e.c = v[2];
  return e;
}

bool SL3Element::contains_vertex(int v) const {
  if (kind == Kind::edge) return a == v || b == v;
  return a == v || b == v || c == v;
}

std::string SL3Element::to_string() const {
  std::ostringstream os;
  if (kind == Kind::edge)
    os << "e(" << a << ">" << b << ")";
  else
    os << "f(" << a << "," << b << "," << c << ")";
  return os.str();
}

void SL3Diagram::add(const SL3Element& e, int multiplicity) {
  if (multiplicity == 0) return;
  auto [it, inserted] = elements_.emplace(e, multiplicity);
  if (!inserted) {
    it->second += multiplicity;
    if (it->second == 0) elements_.erase(it);
  }
}

void SL3Diagram::add_all(const SL3Diagram& other) {
  for (const auto& [e, m] : other.elements_) add(e, m);
}

int SL3Diagram::multiplicity(const SL3Element& e) const {
  auto it = elements_.find(e);
  return it == elements_.end() ? 0 : it->second;
}

int SL3Diagram::element_count() const {
  int total = 0;
  for (const auto& [e, m] : elements_) total += std::abs(m);
  return total;
}

std::string SL3Diagram::to_string() const {
  if (elements_.empty()) return "{}";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, m] : elements_) {
    if (!first) os << " ";
    first = false;
    os << (m > 0 ? "+" : "-");
    if (std::abs(m) > 1) os << std::abs(m) << "*";
    os << e.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------
// FanSL3Seed

namespace {

int cyc(int x, int m) { return ((x % m) + m) % m; }

// x strictly inside the ccw arc from a to b
bool in_open_ccw_arc(int x, int a, int b, int m) {
  const int arc = cyc(b - a, m);
  const int dx = cyc(x - a, m);
  return dx > 0 && dx < arc;
}

bool adjacent_vertices(int u, int v, int m) {
  return cyc(u - v, m) == 1 || cyc(v - u, m) == 1;
}

void check_vertex(int v, int m) {
  if (v < 0 || v >= m) throw SL3Error("vertex out of range");
}

}  // namespace

bool FanSL3Seed::has_chord(int u, int v) const {
  check_vertex(u, size_);
  check_vertex(v, size_);
  if (u == v) return false;
  if (adjacent_vertices(u, v, size_)) return true;
  const std::array<int, 2> key{std::min(u, v), std::max(u, v)};
  return std::find(diagonals_.begin(), diagonals_.end(), key) != diagonals_.end();
}

bool FanSL3Seed::has_face(int p, int q, int r) const {
  std::array<int, 3> key{p, q, r};
  std::sort(key.begin(), key.end());
  return std::find(triangles_.begin(), triangles_.end(), key) != triangles_.end();
}

bool FanSL3Seed::is_initial_fan() const {
  for (const auto& d : diagonals_)
    if (d[0] != fan_vertex_ && d[1] != fan_vertex_) return false;
  return true;
}

const SL3Element& FanSL3Seed::node_label(int node) const {
  return labels_.at(static_cast<std::size_t>(node));
}

int FanSL3Seed::node_of(const SL3Element& e) const {
  auto it = node_of_.find(e);
  if (it == node_of_.end())
    throw SL3Error("no node labeled " + e.to_string());
  return it->second;
}

bool FanSL3Seed::is_frozen(int node) const {
  return frozen_.at(static_cast<std::size_t>(node));
}

const Laurent& FanSL3Seed::value(int node) const {
  return values_.at(static_cast<std::size_t>(node));
}

int FanSL3Seed::arrow_count(int from, int to) const {
  return arrows_.at(static_cast<std::size_t>(from)).at(static_cast<std::size_t>(to));
}

Laurent FanSL3Seed::diagram_weight(const SL3Diagram& d) const {
  Exponents exps(static_cast<std::size_t>(node_count()), 0);
  for (const auto& [e, m] : d.elements()) {
    // initial labels never move: variable index = node index at build time
    auto it = node_of_.find(e);
    if (it == node_of_.end() || !is_initial_fan())
      throw SL3Error("diagram_weight: element outside the initial fan: " +
                     e.to_string());
    exps[static_cast<std::size_t>(it->second)] += m;
  }
  return Laurent::monomial(std::move(exps), 1);
}

SL3Diagram FanSL3Seed::yhat_move(int node) const {
  if (is_frozen(node)) throw SL3Error("yhat_move: frozen node");
  SL3Diagram d;
  for (int j = 0; j < node_count(); ++j) {
    const int c = arrows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(node)];
    if (c != 0) d.add(labels_[static_cast<std::size_t>(j)], c);
  }
  return d;
}

void FanSL3Seed::add_triangle_cycles(const std::array<int, 3>& tri, int sign) {
  // One 3-cycle through the face node per corner: with the triangle's
  // corners read counterclockwise, the cycle at corner X runs
  // face -> (X toward next) -> (X toward previous) -> face.
  const int f = node_of(SL3Element::face(tri[0], tri[1], tri[2]));
  for (int t = 0; t < 3; ++t) {
    const int x = tri[static_cast<std::size_t>(t)];
    const int n = tri[static_cast<std::size_t>((t + 1) % 3)];
    const int p = tri[static_cast<std::size_t>((t + 2) % 3)];
    const int xn = node_of(SL3Element::edge(x, n));
    const int xp = node_of(SL3Element::edge(x, p));
    auto arrow = [&](int from, int to) {
      arrows_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)] += sign;
      arrows_[static_cast<std::size_t>(to)][static_cast<std::size_t>(from)] -= sign;
    };
    arrow(f, xn);
    arrow(xn, xp);
    arrow(xp, f);
  }
}

void FanSL3Seed::rebuild_lookup() {
  node_of_.clear();
  for (int i = 0; i < node_count(); ++i)
    node_of_[labels_[static_cast<std::size_t>(i)]] = i;
}

FanSL3Seed build_fan_sl3_seed(int polygon_size) {
  if (polygon_size < 4)
    throw SL3Error("build_fan_sl3_seed: polygon size must be at least 4");
  FanSL3Seed s;
  s.size_ = polygon_size;
  s.fan_vertex_ = polygon_size - 1;
  const int m = polygon_size;
  const int v = s.fan_vertex_;

  std::vector<std::pair<std::array<int, 2>, bool>> edges;  // ({u,w}, frozen)
  for (int i = 0; i < m; ++i)
    edges.push_back({{std::min(i, (i + 1) % m), std::max(i, (i + 1) % m)}, true});
  for (int x = 1; x <= m - 3; ++x) {
    edges.push_back({{std::min(x, v), std::max(x, v)}, false});
    s.diagonals_.push_back({std::min(x, v), std::max(x, v)});
  }
  for (int x = 0; x <= m - 3; ++x) {
    std::array<int, 3> tri{x, x + 1, v};
    std::sort(tri.begin(), tri.end());
    s.triangles_.push_back(tri);
  }
  std::sort(s.diagonals_.begin(), s.diagonals_.end());
  std::sort(s.triangles_.begin(), s.triangles_.end());

  for (const auto& [e, frozen] : edges) {
    s.labels_.push_back(SL3Element::edge(e[0], e[1]));
    s.frozen_.push_back(frozen);
    s.labels_.push_back(SL3Element::edge(e[1], e[0]));
    s.frozen_.push_back(frozen);
  }
  for (const auto& tri : s.triangles_) {
    s.labels_.push_back(SL3Element::face(tri[0], tri[1], tri[2]));
    s.frozen_.push_back(false);
  }

  const int nodes = static_cast<int>(s.labels_.size());
  s.arrows_.assign(static_cast<std::size_t>(nodes),
                   std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int i = 0; i < nodes; ++i) {
    s.values_.push_back(Laurent::variable(nodes, i));
    s.names_.push_back("x" + s.labels_[static_cast<std::size_t>(i)].to_string());
  }
  s.rebuild_lookup();
  for (const auto& tri : s.triangles_) s.add_triangle_cycles(tri, +1);
  return s;
}

void FanSL3Seed::mutate(int k) {
  if (is_frozen(k)) throw SL3Error("mutate: frozen node");
  const int n = node_count();
  Laurent in = Laurent::one(n);
  Laurent out = Laurent::one(n);
  for (int j = 0; j < n; ++j) {
    const int c = arrows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    if (c > 0) in *= values_[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(c));
    if (c < 0) out *= values_[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(-c));
  }
  values_[static_cast<std::size_t>(k)] =
      (in + out).exact_div(values_[static_cast<std::size_t>(k)]);

  const auto old = arrows_;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = 0; j < n; ++j) {
      if (j == k || i == j) continue;
      const int ik = old[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      const int kj = old[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (ik * kj > 0)
        arrows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            std::abs(ik) * kj;
    }
  }
  for (int j = 0; j < n; ++j) {
    arrows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
        -old[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    arrows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
        -old[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
}

FanSL3Seed flip(const FanSL3Seed& seed, int u, int v) {
  const int m = seed.polygon_size();
  check_vertex(u, m);
  check_vertex(v, m);
  if (u == v) throw SL3Error("flip: degenerate chord");
  if (adjacent_vertices(u, v, m))
    throw FrozenEdgeError("flip: boundary edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} is frozen");
  const std::array<int, 2> key{std::min(u, v), std::max(u, v)};
  if (std::find(seed.diagonals_.begin(), seed.diagonals_.end(), key) ==
      seed.diagonals_.end())
    throw SL3Error("flip: chord {" + std::to_string(u) + "," +
                   std::to_string(v) + "} is not a diagonal");

  // third vertices of the two flanking triangles
  std::vector<int> thirds;
  for (const auto& tri : seed.triangles_) {
    if (std::count(tri.begin(), tri.end(), u) && std::count(tri.begin(), tri.end(), v))
      for (int x : tri)
        if (x != u && x != v) thirds.push_back(x);
  }
  if (thirds.size() != 2) throw SL3Error("flip: diagonal not flanked by two triangles");
  const int w = thirds[0];
  const int z = thirds[1];

  FanSL3Seed out = seed;
  const int e1 = out.node_of(SL3Element::edge(u, v));
  const int e2 = out.node_of(SL3Element::edge(v, u));
  const int f1 = out.node_of(SL3Element::face(u, v, w));
  const int f2 = out.node_of(SL3Element::face(u, v, z));
  out.mutate(e1);
  out.mutate(e2);
  out.mutate(f1);
  out.mutate(f2);

  // Each edge slot becomes the new face through its anchor vertex; each
  // face slot becomes the new edge variable anchored at its third vertex.
  out.labels_[static_cast<std::size_t>(e1)] = SL3Element::face(u, w, z);
  out.labels_[static_cast<std::size_t>(e2)] = SL3Element::face(v, w, z);
  out.labels_[static_cast<std::size_t>(f1)] = SL3Element::edge(w, z);
  out.labels_[static_cast<std::size_t>(f2)] = SL3Element::edge(z, w);
  out.rebuild_lookup();

  const std::array<int, 2> nkey{std::min(w, z), std::max(w, z)};
  for (auto& d : out.diagonals_)
    if (d == key) d = nkey;
  std::sort(out.diagonals_.begin(), out.diagonals_.end());
  std::array<int, 3> t1{u, w, z};
  std::array<int, 3> t2{v, w, z};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  std::array<int, 3> o1{u, v, w};
  std::array<int, 3> o2{u, v, z};
  std::sort(o1.begin(), o1.end());
  std::sort(o2.begin(), o2.end());
  for (auto& tri : out.triangles_) {
    if (tri == o1) tri = t1;
    if (tri == o2) tri = t2;
  }
  std::sort(out.triangles_.begin(), out.triangles_.end());
  return out;
}

// ---------------------------------------------------------------------
// Flip-sequence oracle: breadth-first over triangulations

namespace {

std::string triangulation_key(const FanSL3Seed& s) {
  std::ostringstream os;
  for (const auto& d : s.diagonals()) os << d[0] << "-" << d[1] << ";";
  return os.str();
}

Laurent flip_oracle(const FanSL3Seed& seed, const SL3Element& target) {
  auto present = [&](const FanSL3Seed& s) {
    if (target.is_edge()) return s.has_chord(target.a, target.b);
    return s.has_face(target.a, target.b, target.c);
  };
  std::deque<FanSL3Seed> queue{seed};
  std::set<std::string> visited{triangulation_key(seed)};
  while (!queue.empty()) {
    FanSL3Seed cur = std::move(queue.front());
    queue.pop_front();
    if (present(cur)) return cur.value(cur.node_of(target));
    for (const auto& d : cur.diagonals()) {
      FanSL3Seed next = flip(cur, d[0], d[1]);
      if (visited.insert(triangulation_key(next)).second)
        queue.push_back(std::move(next));
    }
  }
  throw SL3Error("flip oracle: target unreachable: " + target.to_string());
}

}  // namespace

Laurent flip_oracle_edge(const FanSL3Seed& seed, int from, int to) {
  check_vertex(from, seed.polygon_size());
  check_vertex(to, seed.polygon_size());
  return flip_oracle(seed, SL3Element::edge(from, to));
}

Laurent flip_oracle_face(const FanSL3Seed& seed, int p, int q, int r) {
  check_vertex(p, seed.polygon_size());
  check_vertex(q, seed.polygon_size());
  check_vertex(r, seed.polygon_size());
  return flip_oracle(seed, SL3Element::face(p, q, r));
}

// ---------------------------------------------------------------------
// Crossing predicates

namespace {

bool chords_cross(int a, int b, int c, int d, int m) {
  if (a == c || a == d || b == c || b == d) return false;
  return in_open_ccw_arc(c, a, b, m) != in_open_ccw_arc(d, a, b, m);
}

// Directed arc i->j crossing a triangular face: either it starts at a face
// vertex and ends strictly inside the opposite arc, or it starts and ends
// off the face and its chord separates the face's vertices.
bool arc_crosses_face(int i, int j, const SL3Element& face, int m) {
  const std::array<int, 3> f{face.a, face.b, face.c};
  const bool i_on = std::count(f.begin(), f.end(), i) > 0;
  const bool j_on = std::count(f.begin(), f.end(), j) > 0;
  if (i_on) {
    if (j_on) return false;
    std::array<int, 2> others{};
    int t = 0;
    for (int x : f)
      if (x != i) others[static_cast<std::size_t>(t++)] = x;
    // the arc between the other two vertices that avoids i
    if (in_open_ccw_arc(i, others[0], others[1], m))
      return in_open_ccw_arc(j, others[1], others[0], m);
    return in_open_ccw_arc(j, others[0], others[1], m);
  }
  if (j_on) return false;
  int inside = 0;
  for (int x : f)
    if (in_open_ccw_arc(x, i, j, m)) ++inside;
  return inside == 1 || inside == 2;
}

// Two faces crossing: sharing one vertex with the other four interleaved,
// or disjoint with the six vertices in the (A,A,B,A,B,B) cyclic pattern.
bool faces_cross(const SL3Element& fa, const SL3Element& fb, int m) {
  const std::array<int, 3> a{fa.a, fa.b, fa.c};
  const std::array<int, 3> b{fb.a, fb.b, fb.c};
  std::vector<int> shared;
  for (int x : a)
    if (std::count(b.begin(), b.end(), x)) shared.push_back(x);
  if (shared.size() >= 2) return false;
  if (shared.size() == 1) {
    const int s = shared[0];
    std::vector<std::pair<int, bool>> rest;  // (ccw offset from s, is_fa)
    for (int x : a)
      if (x != s) rest.push_back({cyc(x - s, m), true});
    for (int x : b)
      if (x != s) rest.push_back({cyc(x - s, m), false});
    std::sort(rest.begin(), rest.end());
    for (int t = 0; t < 4; ++t)
      if (rest[static_cast<std::size_t>(t)].second ==
          rest[static_cast<std::size_t>((t + 1) % 4)].second)
        return false;
    return true;
  }
  std::vector<std::pair<int, bool>> all;
  for (int x : a) all.push_back({x, true});
  for (int x : b) all.push_back({x, false});
  std::sort(all.begin(), all.end());
  const std::array<bool, 6> want{true, true, false, true, false, false};
  for (int rot = 0; rot < 6; ++rot) {
    bool hit_a = true;
    bool hit_b = true;
    for (int t = 0; t < 6; ++t) {
      const bool tag = all[static_cast<std::size_t>((rot + t) % 6)].second;
      if (tag != want[static_cast<std::size_t>(t)]) hit_a = false;
      if (tag != !want[static_cast<std::size_t>(t)]) hit_b = false;
    }
    if (hit_a || hit_b) return true;
  }
  return false;
}

bool red_crosses_arc(const SL3Element& e, int i, int j, int m) {
  if (e.is_edge()) return chords_cross(e.a, e.b, i, j, m);
  return arc_crosses_face(i, j, e, m);
}

bool red_crosses_face(const SL3Element& e, const SL3Element& face, int m) {
  if (e.is_edge()) return arc_crosses_face(e.a, e.b, face, m);
  return faces_cross(e, face, m);
}

// ---------------------------------------------------------------------
// Fork-join reconstruction

struct Step {
  SL3Element elem = SL3Element::edge(0, 1);
  bool blue = true;
  int to = -1;
};

struct Bubble {
  SL3Element fork_face = SL3Element::edge(0, 1);
  bool fork_blue = true;
  int b1_start = -1;
  int b2_start = -1;
  std::vector<Step> steps1;
  std::vector<Step> steps2;
  SL3Element join_face = SL3Element::edge(0, 1);
  bool join_blue = true;
  int exit = -1;
};

struct Item {
  std::optional<Bubble> bubble;
  Step step;
};

struct BranchResult {
  int start = -1;
  int end = -1;
  std::vector<Item> items;
};

// One root-to-end path through the network: vertex visits annotated with
// the element (and color) whose traversal arrived there.
struct Visit {
  int vertex = -1;
  std::optional<SL3Element> arrived;
  bool blue = true;
};

using Avail = std::map<SL3Element, int>;

int remaining_count(const Avail& a) {
  int t = 0;
  for (const auto& [e, c] : a) t += std::abs(c);
  return t;
}

std::vector<std::vector<Visit>> expand_paths(int start, const std::vector<Item>& items,
                                             std::optional<SL3Element> source_face) {
  std::vector<std::vector<Visit>> paths;
  paths.push_back({Visit{start, source_face, true}});
  for (const Item& item : items) {
    if (!item.bubble) {
      for (auto& p : paths)
        p.push_back(Visit{item.step.to, item.step.elem, item.step.blue});
      continue;
    }
    const Bubble& bub = *item.bubble;
    std::vector<std::vector<Visit>> grown;
    for (const auto& p : paths) {
      auto via1 = p;
      via1.push_back(Visit{bub.b1_start, bub.fork_face, bub.fork_blue});
      for (const Step& s : bub.steps1) via1.push_back(Visit{s.to, s.elem, s.blue});
      via1.push_back(Visit{bub.exit, bub.join_face, bub.join_blue});
      auto via2 = p;
      via2.push_back(Visit{bub.b2_start, bub.fork_face, bub.fork_blue});
      for (const Step& s : bub.steps2) via2.push_back(Visit{s.to, s.elem, s.blue});
      via2.push_back(Visit{bub.exit, bub.join_face, bub.join_blue});
      grown.push_back(std::move(via1));
      grown.push_back(std::move(via2));
    }
    paths = std::move(grown);
  }
  return paths;
}

// Walk reconstruction for one diagram.  Modes: the main alternating walk
// (edge targets) or three branches out of a common source face (face
// targets); forks open a bubble paired with a later join, never nested.
class Walker {
 public:
  Walker(int polygon_size, std::vector<std::array<int, 2>> diagonals)
      : m_(polygon_size), diagonals_(std::move(diagonals)) {}

  bool reconstruct_edge(const SL3Diagram& d, int source, int sink, std::string* trace) {
    Avail avail(d.elements().begin(), d.elements().end());
    source_face_.reset();
    splitting_.clear();
    face_mode_ = false;
    std::vector<Item> items;
    if (walk(avail, source, true, false, items, [&](const Avail& left,
                                                    int at,
                                                    const std::vector<Item>& done) {
          if (remaining_count(left) != 0 || at != sink) return false;
          return paths_admissible({BranchResult{source, sink, done}});
        }))
      return true;
    if (trace)
      *trace = "no alternating fork-join walk from " + std::to_string(source) +
               " to " + std::to_string(sink) + " realizes " + d.to_string();
    return false;
  }

  bool reconstruct_face(const SL3Diagram& d, std::array<int, 3> targets,
                        std::vector<std::array<int, 2>> splitting, std::string* trace) {
    face_mode_ = true;
    splitting_ = std::move(splitting);
    Avail base(d.elements().begin(), d.elements().end());
    std::sort(targets.begin(), targets.end());
    for (const auto& [e, mult] : base) {
      if (!e.is_face() || mult <= 0) continue;
      Avail avail = base;
      auto it = avail.find(e);
      if (--it->second == 0) avail.erase(it);
      source_face_ = e;
      const std::array<int, 3> starts{e.a, e.b, e.c};
      if (face_branches(avail, starts, targets, 0, {}, {})) return true;
    }
    if (trace)
      *trace = "no branch triple out of a blue source face realizes " + d.to_string();
    return false;
  }

 private:
  using Accept = std::function<bool(const Avail&, int, const std::vector<Item>&)>;

  bool face_branches(const Avail& avail, const std::array<int, 3>& starts,
                     const std::array<int, 3>& targets, int index,
                     std::vector<int> claimed, std::vector<BranchResult> done) {
    if (index == 3)
      return remaining_count(avail) == 0 && paths_admissible(done);
    const int start = starts[static_cast<std::size_t>(index)];
    std::vector<Item> items;
    return walk(avail, start, false, false, items,
                [&](const Avail& left, int at, const std::vector<Item>& branch) {
                  if (std::count(targets.begin(), targets.end(), at) == 0) return false;
                  if (std::count(claimed.begin(), claimed.end(), at) > 0) return false;
                  int used = 0;
                  for (const Item& it : branch) used += it.bubble ? 2 + static_cast<int>(it.bubble->steps1.size()) : 1;
                  // branch parity: the tripod leg plus an even element count
                  if (used % 2 != 0) return false;
                  auto claimed2 = claimed;
                  claimed2.push_back(at);
                  auto done2 = done;
                  done2.push_back(BranchResult{start, at, branch});
                  return face_branches(left, starts, targets, index + 1,
                                       std::move(claimed2), std::move(done2));
                });
  }

  // Alternating walk with optional fork-join bubbles.  `accept` fires at
  // every prefix (so face branches may stop at their target); it receives
  // the remaining multiset, the current vertex, and the items so far.
  bool walk(const Avail& avail, int at, bool want_blue, bool arrived_blue_edge,
            const std::vector<Item>& items, const Accept& accept) {
    // a face-mode path reaching a target by a forward blue edge must end
    const bool blocked = face_mode_ && arrived_blue_edge && is_target(at);
    if (accept(avail, at, items)) return true;
    if (blocked) return false;
    for (const auto& [elem, mult] : avail) {
      if (elem.is_edge()) {
        if (want_blue && mult > 0 && elem.a == at) {
          if (try_step(avail, elem, true, elem.b, items, accept)) return true;
        }
        if (!want_blue && mult < 0 && elem.b == at) {
          if (try_step(avail, elem, false, elem.a, items, accept)) return true;
        }
        continue;
      }
      // faces occur only as forks (red, entered at the current corner)
      // or as the joins proposed inside bubble branches
      if (want_blue || mult >= 0 || !elem.contains_vertex(at)) continue;
      if (try_fork(avail, elem, at, items, accept)) return true;
    }
    return false;
  }

  bool try_step(const Avail& avail, const SL3Element& elem, bool blue, int to,
                const std::vector<Item>& items, const Accept& accept) {
    Avail next = avail;
    consume(next, elem, blue);
    auto grown = items;
    grown.push_back(Item{std::nullopt, Step{elem, blue, to}});
    return walk(next, to, !blue, blue && elem.is_edge(), grown, accept);
  }

  bool try_fork(const Avail& avail, const SL3Element& fork, int at,
                const std::vector<Item>& items, const Accept& accept) {
    std::array<int, 2> others{};
    int t = 0;
    for (int x : {fork.a, fork.b, fork.c})
      if (x != at) others[static_cast<std::size_t>(t++)] = x;
    Avail next = avail;
    consume(next, fork, false);
    // branch one runs from others[0] until it proposes a join face; branch
    // two from others[1] must reach that face when it too expects blue
    return branch_one(next, others[0], others[1], true, fork, at, {}, items, accept);
  }

  // Between a fork and its join the orientation parity is out of step with
  // the colors: blue edges are traversed head to tail and red edges tail to
  // head, the reverse of the trunk convention.
  static int bubble_step_target(const SL3Element& elem, int mult, bool want_blue,
                                int at) {
    if (want_blue && mult > 0 && elem.b == at) return elem.a;
    if (!want_blue && mult < 0 && elem.a == at) return elem.b;
    return -1;
  }

  bool branch_one(const Avail& avail, int at, int b2_start, bool want_blue,
                  const SL3Element& fork, int fork_at, std::vector<Step> steps1,
                  const std::vector<Item>& items, const Accept& accept) {
    // propose a blue join at the current vertex
    if (want_blue) {
      for (const auto& [elem, mult] : avail) {
        if (!elem.is_face() || mult <= 0 || !elem.contains_vertex(at)) continue;
        Avail next = avail;
        consume(next, elem, true);
        std::array<int, 2> rest{};
        int t = 0;
        for (int x : {elem.a, elem.b, elem.c})
          if (x != at) rest[static_cast<std::size_t>(t++)] = x;
        for (int pick = 0; pick < 2; ++pick) {
          const int b2_end = rest[static_cast<std::size_t>(pick)];
          const int exit = rest[static_cast<std::size_t>(1 - pick)];
          if (branch_two(next, b2_start, true, {}, b2_end, elem, fork, fork_at,
                         at, steps1, exit, items, accept))
            return true;
        }
      }
    }
    // or keep walking
    for (const auto& [elem, mult] : avail) {
      if (!elem.is_edge()) continue;
      const int to = bubble_step_target(elem, mult, want_blue, at);
      if (to < 0) continue;
      Avail next = avail;
      consume(next, elem, want_blue);
      auto grown = steps1;
      grown.push_back(Step{elem, want_blue, to});
      if (branch_one(next, to, b2_start, !want_blue, fork, fork_at,
                     std::move(grown), items, accept))
        return true;
    }
    return false;
  }

  bool branch_two(const Avail& avail, int at, bool want_blue, std::vector<Step> steps2,
                  int b2_end, const SL3Element& join, const SL3Element& fork,
                  int fork_at, int b1_end, const std::vector<Step>& steps1, int exit,
                  const std::vector<Item>& items, const Accept& accept) {
    if (at == b2_end && want_blue) {
      Bubble bub;
      bub.fork_face = fork;
      bub.fork_blue = false;
      bub.b1_start = branch_start(b1_end, steps1);
      bub.b2_start = branch_start(at, steps2);
      bub.steps1 = steps1;
      bub.steps2 = steps2;
      bub.join_face = join;
      bub.join_blue = true;
      bub.exit = exit;
      auto grown = items;
      grown.push_back(Item{bub, Step{}});
      if (walk(avail, exit, false, false, grown, accept)) return true;
    }
    for (const auto& [elem, mult] : avail) {
      if (!elem.is_edge()) continue;
      const int to = bubble_step_target(elem, mult, want_blue, at);
      if (to < 0) continue;
      Avail next = avail;
      consume(next, elem, want_blue);
      auto grown = steps2;
      grown.push_back(Step{elem, want_blue, to});
      if (branch_two(next, to, !want_blue, std::move(grown), b2_end, join, fork,
                     fork_at, b1_end, steps1, exit, items, accept))
        return true;
    }
    return false;
  }

  static void consume(Avail& a, const SL3Element& e, bool blue) {
    auto it = a.find(e);
    it->second += blue ? -1 : 1;
    if (it->second == 0) a.erase(it);
  }

  // Where a bubble branch starts: the vertex of the fork face the branch
  // leaves from (its end when it has no steps, else where its first step
  // departed under the in-bubble traversal convention).
  static int branch_start(int branch_end, const std::vector<Step>& steps) {
    if (steps.empty()) return branch_end;
    const Step& s = steps.front();
    return s.blue ? s.elem.b : s.elem.a;
  }

  bool is_target(int v) const {
    return std::count(targets_.begin(), targets_.end(), v) > 0;
  }

  // ---- final admissibility over realized paths ----

  bool paths_admissible(const std::vector<BranchResult>& branches) const {
    for (const BranchResult& br : branches) {
      for (const auto& path : expand_paths(br.start, br.items, source_face_)) {
        if (!path_no_reuse(path)) return false;
        for (const auto& d : diagonals_)
          if (!path_stays_crossed(path, d)) return false;
        for (const auto& d : splitting_)
          if (!path_crossing_colors(path, d)) return false;
      }
    }
    return true;
  }

  static bool path_no_reuse(const std::vector<Visit>& path) {
    std::vector<SL3Element> used;
    for (const Visit& v : path)
      if (v.arrived) used.push_back(*v.arrived);
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
  }

  // side of a vertex relative to diagonal {d0,d1}: 0 on, +1 / -1 strict
  int side_of(int x, const std::array<int, 2>& d) const {
    if (x == d[0] || x == d[1]) return 0;
    return in_open_ccw_arc(x, d[0], d[1], m_) ? 1 : -1;
  }

  std::optional<int> face_side(const SL3Element& f, const std::array<int, 2>& d) const {
    int pos = 0, neg = 0;
    for (int x : {f.a, f.b, f.c}) {
      const int s = side_of(x, d);
      if (s > 0) ++pos;
      if (s < 0) ++neg;
    }
    if (pos && neg) return std::nullopt;  // straddles: no single side
    if (pos) return 1;
    if (neg) return -1;
    return std::nullopt;
  }

  // Once a path has moved to the other side of a crossed diagonal it must
  // not return.
  bool path_stays_crossed(const std::vector<Visit>& path,
                          const std::array<int, 2>& d) const {
    int last = 0;
    int changes = 0;
    if (source_face_) {
      if (auto s = face_side(*source_face_, d)) last = *s;
    }
    for (const Visit& v : path) {
      const int s = side_of(v.vertex, d);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes <= 1;
  }

  // A crossing of a splitting edge happens at its far end after a blue
  // element or at its near end after a red element.
  bool path_crossing_colors(const std::vector<Visit>& path,
                            const std::array<int, 2>& nf) const {
    const std::array<int, 2> d{std::min(nf[0], nf[1]), std::max(nf[0], nf[1])};
    const int near = nf[0];
    int last = 0;
    if (source_face_) {
      if (auto s = face_side(*source_face_, d)) last = *s;
    }
    int last_on_index = -1;
    for (std::size_t t = 0; t < path.size(); ++t) {
      const int s = side_of(path[t].vertex, d);
      if (s == 0) {
        last_on_index = static_cast<int>(t);
        continue;
      }
      if (last != 0 && s != last) {
        if (last_on_index < 0) return false;
        const Visit& gate = path[static_cast<std::size_t>(last_on_index)];
        if (!gate.arrived) return false;
        const bool want_blue = gate.vertex != near;
        if (gate.blue != want_blue) return false;
      }
      last = s;
    }
    return true;
  }

  int m_;
  std::vector<std::array<int, 2>> diagonals_;
  bool face_mode_ = false;
  std::array<int, 3> targets_{{-1, -1, -1}};
  std::vector<std::array<int, 2>> splitting_;
  std::optional<SL3Element> source_face_;

 public:
  void set_targets(const std::array<int, 3>& t) { targets_ = t; }
};

// Splitting edges of a face target: pairs (near, far) with the near end on
// the face.
std::vector<std::array<int, 2>> splitting_edges_of_face(const FanSL3Seed& seed,
                                                        int p, int q, int r) {
  const int m = seed.polygon_size();
  const int v = seed.fan_vertex();
  const std::array<int, 3> f{p, q, r};
  std::vector<std::array<int, 2>> out;
  if (std::count(f.begin(), f.end(), v)) {
    std::array<int, 2> others{};
    int t = 0;
    for (int x : f)
      if (x != v) others[static_cast<std::size_t>(t++)] = x;
    int from = others[0], to = others[1];
    if (in_open_ccw_arc(v, from, to, m)) std::swap(from, to);
    for (int x = cyc(from + 1, m); x != to; x = cyc(x + 1, m))
      out.push_back({v, x});
    return out;
  }
  for (int a : f) {
    std::array<int, 2> others{};
    int t = 0;
    for (int x : f)
      if (x != a) others[static_cast<std::size_t>(t++)] = x;
    if (chords_cross(a, v, others[0], others[1], m)) out.push_back({a, v});
  }
  return out;
}

}  // namespace

bool verify_fork_join(const FanSL3Seed& seed, const SL3Diagram& d, int from,
                      int to, std::string* trace) {
  Walker walker(seed.polygon_size(),
                {seed.diagonals().begin(), seed.diagonals().end()});
  return walker.reconstruct_edge(d, from, to, trace);
}

bool verify_fork_join(const FanSL3Seed& seed, const SL3Diagram& d,
                      std::array<int, 3> face_targets, std::string* trace) {
  Walker walker(seed.polygon_size(),
                {seed.diagonals().begin(), seed.diagonals().end()});
  walker.set_targets(face_targets);
  return walker.reconstruct_face(
      d, face_targets,
      splitting_edges_of_face(seed, face_targets[0], face_targets[1], face_targets[2]),
      trace);
}

// ---------------------------------------------------------------------
// Recursion-lemma enumeration

namespace {

class TpathEnumerator {
 public:
  explicit TpathEnumerator(const FanSL3Seed& seed)
      : seed_(seed), m_(seed.polygon_size()), v_(seed.fan_vertex()) {}

  const std::vector<SL3Diagram>& edges(int i, int j) {
    const auto key = std::make_pair(i, j);
    if (auto it = edge_memo_.find(key); it != edge_memo_.end()) return it->second;
    std::vector<SL3Diagram> out;
    if (seed_.has_chord(i, j)) {
      SL3Diagram unit;
      unit.add(SL3Element::edge(i, j), 1);
      out.push_back(std::move(unit));
    } else {
      const int k = v_;
      const int l = in_open_ccw_arc(v_, i, j, m_) ? cyc(i - 1, m_) : cyc(i + 1, m_);
      for (const SL3Diagram& tail : edges(l, j)) {
        SL3Diagram d = tail;
        d.add(SL3Element::edge(i, k), 1);
        d.add(SL3Element::edge(l, k), -1);
        out.push_back(std::move(d));
      }
      for (const SL3Diagram& tail : edges(k, j)) {
        SL3Diagram d = tail;
        d.add(SL3Element::edge(i, l), 1);
        d.add(SL3Element::edge(k, l), -1);
        out.push_back(std::move(d));
      }
      for (const SL3Diagram& tail : faces_for(j, k, l)) {
        SL3Diagram d1 = tail;
        d1.add(SL3Element::edge(i, k), 1);
        d1.add(SL3Element::edge(l, i), 1);
        d1.add(SL3Element::edge(l, k), -1);
        d1.add(SL3Element::face(i, k, l), -1);
        out.push_back(std::move(d1));
        SL3Diagram d2 = tail;
        d2.add(SL3Element::edge(i, l), 1);
        d2.add(SL3Element::edge(k, i), 1);
        d2.add(SL3Element::edge(k, l), -1);
        d2.add(SL3Element::face(i, k, l), -1);
        out.push_back(std::move(d2));
      }
    }
    validate_edge_set(out, i, j);
    return edge_memo_.emplace(key, std::move(out)).first->second;
  }

  const std::vector<SL3Diagram>& faces_for(int p, int q, int r) {
    std::array<int, 3> key{p, q, r};
    std::sort(key.begin(), key.end());
    if (auto it = face_memo_.find(key); it != face_memo_.end()) return it->second;
    std::vector<SL3Diagram> out;
    if (seed_.has_face(key[0], key[1], key[2])) {
      SL3Diagram unit;
      unit.add(SL3Element::face(key[0], key[1], key[2]), 1);
      out.push_back(std::move(unit));
    } else {
      const auto [a, l] = splitting_edge(key);
      std::array<int, 2> others{};
      int t = 0;
      for (int x : key)
        if (x != a) others[static_cast<std::size_t>(t++)] = x;
      for (int pick = 0; pick < 2; ++pick) {
        const int to = others[static_cast<std::size_t>(pick)];       // edge target
        const int keep = others[static_cast<std::size_t>(1 - pick)]; // stays on the face
        for (const SL3Diagram& sub_face : faces_for(a, keep, l)) {
          for (const SL3Diagram& sub_edge : edges(a, to)) {
            SL3Diagram d = sub_face;
            d.add_all(sub_edge);
            d.add(SL3Element::edge(a, l), -1);
            out.push_back(std::move(d));
          }
        }
      }
    }
    validate_face_set(out, key);
    return face_memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Splitting edge (a, l): a on the face, {a,l} an internal diagonal
  // crossing the side opposite a.
  std::pair<int, int> splitting_edge(const std::array<int, 3>& f) const {
    if (std::count(f.begin(), f.end(), v_)) {
      std::array<int, 2> others{};
      int t = 0;
      for (int x : f)
        if (x != v_) others[static_cast<std::size_t>(t++)] = x;
      int from = others[0], to = others[1];
      if (in_open_ccw_arc(v_, from, to, m_)) std::swap(from, to);
      return {v_, cyc(from + 1, m_)};
    }
    for (int a : f) {
      std::array<int, 2> others{};
      int t = 0;
      for (int x : f)
        if (x != a) others[static_cast<std::size_t>(t++)] = x;
      if (chords_cross(a, v_, others[0], others[1], m_)) return {a, v_};
    }
    throw SL3Error("no splitting edge for face");
  }

  int crossed_diagonal_count(int i, int j) const {
    int c = 0;
    for (const auto& d : seed_.diagonals())
      if (chords_cross(i, j, d[0], d[1], m_)) ++c;
    return c;
  }

  void validate_edge_set(const std::vector<SL3Diagram>& out, int i, int j) const {
    const int c = crossed_diagonal_count(i, j);
    const std::size_t expect =
        seed_.has_chord(i, j) ? 1u : static_cast<std::size_t>((c + 1) * (c + 1));
    if (out.size() != expect)
      throw SL3Error("edge expansion of " + std::to_string(i) + "->" +
                     std::to_string(j) + " has " + std::to_string(out.size()) +
                     " terms, expected " + std::to_string(expect));
    std::set<SL3Diagram> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
      throw SL3Error("edge expansion produced duplicate diagrams");
    Walker walker(m_, {seed_.diagonals().begin(), seed_.diagonals().end()});
    for (const SL3Diagram& d : out) {
      if (d.element_count() % 2 != 1)
        throw SL3Error("edge diagram with even element count: " + d.to_string());
      for (const auto& [e, mult] : d.elements())
        if (mult < 0 && !red_crosses_arc(e, i, j, m_))
          throw SL3Error("red element " + e.to_string() + " does not cross " +
                         std::to_string(i) + "->" + std::to_string(j));
      std::string trace;
      if (!walker.reconstruct_edge(d, i, j, &trace)) throw SL3Error(trace);
    }
  }

  void validate_face_set(const std::vector<SL3Diagram>& out,
                         const std::array<int, 3>& f) const {
    std::set<SL3Diagram> distinct(out.begin(), out.end());
    if (distinct.size() != out.size())
      throw SL3Error("face expansion produced duplicate diagrams");
    const SL3Element face = SL3Element::face(f[0], f[1], f[2]);
    if (std::count(f.begin(), f.end(), v_)) {
      // faces through the fan vertex expand as a chain
      int crossed = 0;
      for (const auto& d : seed_.diagonals())
        if (arc_crosses_face(d[0], d[1], face, m_) ||
            arc_crosses_face(d[1], d[0], face, m_))
          ++crossed;
      if (out.size() != static_cast<std::size_t>(crossed + 1))
        throw SL3Error("face expansion of " + face.to_string() + " has " +
                       std::to_string(out.size()) + " terms, expected " +
                       std::to_string(crossed + 1));
    }
    Walker walker(m_, {seed_.diagonals().begin(), seed_.diagonals().end()});
    walker.set_targets(f);
    const auto splitting = splitting_edges_of_face(seed_, f[0], f[1], f[2]);
    for (const SL3Diagram& d : out) {
      for (const auto& [e, mult] : d.elements())
        if (mult < 0 && !red_crosses_face(e, face, m_))
          throw SL3Error("red element " + e.to_string() + " does not cross face " +
                         face.to_string());
      std::string trace;
      if (!walker.reconstruct_face(d, f, splitting, &trace)) throw SL3Error(trace);
    }
  }

  const FanSL3Seed& seed_;
  int m_;
  int v_;
  std::map<std::pair<int, int>, std::vector<SL3Diagram>> edge_memo_;
  std::map<std::array<int, 3>, std::vector<SL3Diagram>> face_memo_;
};

void require_initial_fan(const FanSL3Seed& seed, const char* who) {
  if (!seed.is_initial_fan())
    throw NotFanError(std::string(who) + ": triangulation is not the initial fan");
}

FinitePoset diagram_poset(const FanSL3Seed& seed, std::vector<SL3Diagram> diagrams) {
  std::sort(diagrams.begin(), diagrams.end());
  std::vector<std::string> payloads;
  std::vector<Laurent> weights;
  std::map<std::string, int> index;
  for (const SL3Diagram& d : diagrams) {
    index[d.to_string()] = static_cast<int>(payloads.size());
    payloads.push_back(d.to_string());
    weights.push_back(seed.diagram_weight(d));
  }
  std::vector<std::pair<int, int>> relations;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    for (int node = 0; node < seed.node_count(); ++node) {
      if (seed.is_frozen(node)) continue;
      SL3Diagram up = diagrams[i];
      up.add_all(seed.yhat_move(node));
      auto it = index.find(up.to_string());
      if (it != index.end())
        relations.emplace_back(static_cast<int>(i), it->second);
    }
  }
  FinitePoset poset(std::move(payloads), std::move(relations));
  poset.set_weights(std::move(weights));
  return poset;
}

}  // namespace

std::vector<SL3Diagram> edge_tpath_diagrams(const FanSL3Seed& seed, int from, int to) {
  require_initial_fan(seed, "edge_tpath_diagrams");
  check_vertex(from, seed.polygon_size());
  check_vertex(to, seed.polygon_size());
  if (from == to) throw SL3Error("edge_tpath_diagrams: degenerate arc");
  TpathEnumerator en(seed);
  auto out = en.edges(from, to);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SL3Diagram> face_tpath_diagrams(const FanSL3Seed& seed, int p, int q, int r) {
  require_initial_fan(seed, "face_tpath_diagrams");
  check_vertex(p, seed.polygon_size());
  check_vertex(q, seed.polygon_size());
  check_vertex(r, seed.polygon_size());
  SL3Element::face(p, q, r);  // validates distinctness
  TpathEnumerator en(seed);
  auto out = en.faces_for(p, q, r);
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset enumerate_edge_tpaths(const FanSL3Seed& seed, int from, int to) {
  return diagram_poset(seed, edge_tpath_diagrams(seed, from, to));
}

FinitePoset enumerate_face_tpaths(const FanSL3Seed& seed, int p, int q, int r) {
  return diagram_poset(seed, face_tpath_diagrams(seed, p, q, r));
}

FinitePoset staircase_grid_poset(int n) {
  if (n < 0) throw SL3Error("staircase_grid_poset: negative size");
  std::vector<std::pair<int, int>> points;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> payloads;
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= 2 * x; ++y) {
      index[{x, y}] = static_cast<int>(points.size());
      points.push_back({x, y});
      payloads.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  std::vector<std::pair<int, int>> relations;
  for (const auto& [p, i] : index) {
    auto right = index.find({p.first + 1, p.second});
    if (right != index.end()) relations.emplace_back(i, right->second);
    auto up = index.find({p.first, p.second + 1});
    if (up != index.end()) relations.emplace_back(i, up->second);
  }
  return FinitePoset(std::move(payloads), std::move(relations));
}

}  // namespace clusterforge
