#include "clusterforge/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace clusterforge {

FinitePoset::FinitePoset(std::vector<std::string> payloads,
                         std::vector<std::pair<int, int>> relations)
    : payload_(std::move(payloads)) {
  std::set<std::string> seen(payload_.begin(), payload_.end());
  if (seen.size() != payload_.size())
    throw PosetError("FinitePoset: duplicate payloads");
  build(std::move(relations));
}

void FinitePoset::build(std::vector<std::pair<int, int>> relations) {
  const int n = size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [lo, hi] : relations) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw PosetError("FinitePoset: relation endpoint out of range");
    if (lo == hi) throw PosetError("FinitePoset: reflexive relation");
    adj[static_cast<std::size_t>(lo)].push_back(hi);
  }

  // reachability closure by DFS from every node
  leq_.assign(static_cast<std::size_t>(n),
              std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int s = 0; s < n; ++s) {
    auto& row = leq_[static_cast<std::size_t>(s)];
    std::vector<int> stack{s};
    row[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!row[static_cast<std::size_t>(v)]) {
          row[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (v != s && row[static_cast<std::size_t>(v)] &&
          leq_[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)])
        throw PosetError("FinitePoset: relation has a cycle");
  }

  // transitive reduction: keep (u,v) with no strict intermediate
  std::set<std::pair<int, int>> cover_set;
  for (auto [u, v] : relations) {
    bool direct = true;
    for (int w = 0; w < n && direct; ++w) {
      if (w == u || w == v) continue;
      if (leq_[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
          leq_[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)])
        direct = false;
    }
    if (direct) cover_set.insert({u, v});
  }
  covers_.assign(cover_set.begin(), cover_set.end());

  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  for (auto [lo, hi] : covers_) {
    up_[static_cast<std::size_t>(lo)].push_back(hi);
    down_[static_cast<std::size_t>(hi)].push_back(lo);
  }
}

int FinitePoset::index_of(const std::string& payload) const {
  for (int i = 0; i < size(); ++i)
    if (payload_[static_cast<std::size_t>(i)] == payload) return i;
  return -1;
}

void FinitePoset::set_weights(std::vector<Laurent> w) {
  if (static_cast<int>(w.size()) != size())
    throw PosetError("set_weights: count mismatch");
  weights_ = std::move(w);
}

Laurent FinitePoset::weight_sum() const {
  if (!has_weights()) throw PosetError("weight_sum: poset has no weights");
  Laurent s = Laurent::zero(weights_.front().nvars());
  for (const auto& w : weights_) s += w;
  return s;
}

std::vector<int> FinitePoset::upper_covers(int i) const {
  return up_.at(static_cast<std::size_t>(i));
}
std::vector<int> FinitePoset::lower_covers(int i) const {
  return down_.at(static_cast<std::size_t>(i));
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

bool FinitePoset::leq(int i, int j) const {
  return leq_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

bool FinitePoset::is_graded() const {
  try {
    ranks();
    return true;
  } catch (const NotGraded&) {
    return false;
  }
}

std::vector<int> FinitePoset::ranks() const {
  const int n = size();
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int m : minimal_elements()) rank[static_cast<std::size_t>(m)] = 0;
  // process covers in topological order: repeatedly sweep until stable
  // (covers form a DAG; n sweeps suffice and posets here are small)
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [lo, hi] : covers_) ++indeg[static_cast<std::size_t>(hi)];
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) q.push(i);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : up_[static_cast<std::size_t>(u)]) {
      int want = rank[static_cast<std::size_t>(u)] + 1;
      int& rv = rank[static_cast<std::size_t>(v)];
      if (rv == -1)
        rv = want;
      else if (rv != want)
        throw NotGraded("ranks: chains from minimal elements disagree");
      if (--indeg[static_cast<std::size_t>(v)] == 0) q.push(v);
    }
  }
  return rank;
}

QPolynomial FinitePoset::rank_generating_function() const {
  auto rk = ranks();
  int maxr = 0;
  for (int r : rk) maxr = std::max(maxr, r);
  std::vector<BigInt> c(static_cast<std::size_t>(maxr) + 1, BigInt(0));
  for (int r : rk) ++c[static_cast<std::size_t>(r)];
  return QPolynomial(std::move(c));
}

FinitePoset FinitePoset::order_dual() const {
  std::vector<std::pair<int, int>> rel;
  rel.reserve(covers_.size());
  for (auto [lo, hi] : covers_) rel.emplace_back(hi, lo);
  FinitePoset d(payload_, std::move(rel));
  if (has_weights()) d.set_weights(weights_);
  return d;
}

FinitePoset FinitePoset::subposet(const std::vector<int>& elements) const {
  std::vector<std::string> pay;
  pay.reserve(elements.size());
  for (int e : elements) pay.push_back(payload(e));
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && leq(elements[i], elements[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
  FinitePoset s(std::move(pay), std::move(rel));
  if (has_weights()) {
    std::vector<Laurent> w;
    w.reserve(elements.size());
    for (int e : elements) w.push_back(weight(e));
    s.set_weights(std::move(w));
  }
  return s;
}

namespace {

// least element of the set marked in `in` (as bool mask), or -1
int least_of(const FinitePoset& p, const std::vector<int>& members) {
  for (int m : members) {
    bool below_all = true;
    for (int k : members)
      if (!p.leq(m, k)) {
        below_all = false;
        break;
      }
    if (below_all) return m;
  }
  return -1;
}

}  // namespace

bool FinitePoset::is_lattice() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> ub, lb;
      for (int k = 0; k < n; ++k) {
        if (leq(i, k) && leq(j, k)) ub.push_back(k);
        if (leq(k, i) && leq(k, j)) lb.push_back(k);
      }
      if (ub.empty() || least_of(*this, ub) == -1) return false;
      // greatest lower bound = least of lb in the dual order
      bool found = false;
      for (int m : lb) {
        bool above_all = true;
        for (int k : lb)
          if (!leq(k, m)) {
            above_all = false;
            break;
          }
        if (above_all) {
          found = true;
          break;
        }
      }
      if (lb.empty() || !found) return false;
    }
  }
  return true;
}

std::vector<int> FinitePoset::join_irreducible_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_[static_cast<std::size_t>(i)].size() == 1) out.push_back(i);
  return out;
}

FinitePoset FinitePoset::join_irreducibles() const {
  return subposet(join_irreducible_elements());
}

bool FinitePoset::is_distributive() const {
  if (!is_lattice()) return false;
  FinitePoset j = join_irreducibles();
  if (j.size() > 64) throw PosetError("is_distributive: too many join-irreducibles");
  FinitePoset ideals = j.order_ideals();
  if (ideals.size() != size()) return false;
  return poset_isomorphic(ideals, *this);
}

FinitePoset FinitePoset::order_ideals() const {
  const int n = size();
  if (n > 64) throw PosetError("order_ideals: poset larger than 64 elements");

  std::map<std::uint64_t, int> id;
  std::vector<std::uint64_t> masks;
  std::vector<std::pair<int, int>> rel;
  auto intern = [&](std::uint64_t m) {
    auto [it, fresh] = id.emplace(m, static_cast<int>(masks.size()));
    if (fresh) masks.push_back(m);
    return it->second;
  };
  std::queue<int> q;
  q.push(intern(0));
  std::set<int> expanded;
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    if (!expanded.insert(cur).second) continue;
    std::uint64_t m = masks[static_cast<std::size_t>(cur)];
    for (int e = 0; e < n; ++e) {
      if (m >> e & 1u) continue;
      bool closed = true;
      for (int d : down_[static_cast<std::size_t>(e)])
        if (!(m >> d & 1u)) {
          closed = false;
          break;
        }
      if (!closed) continue;
      std::uint64_t next = m | (std::uint64_t{1} << e);
      bool fresh = !id.count(next);
      int nid = intern(next);
      rel.emplace_back(cur, nid);
      if (fresh) q.push(nid);
    }
  }

  std::vector<std::string> pay;
  pay.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e = 0; e < n; ++e)
      if (m >> e & 1u) {
        if (!first) os << ",";
        os << e;
        first = false;
      }
    os << "}";
    pay.push_back(os.str());
  }
  return FinitePoset(std::move(pay), std::move(rel));
}

FinitePoset chain_poset(int m) {
  std::vector<std::string> pay;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < m; ++i) {
    pay.push_back(std::to_string(i));
    if (i) rel.emplace_back(i - 1, i);
  }
  return FinitePoset(std::move(pay), std::move(rel));
}

FinitePoset antichain_poset(int m) {
  std::vector<std::string> pay;
  for (int i = 0; i < m; ++i) pay.push_back(std::to_string(i));
  return FinitePoset(std::move(pay), {});
}

FinitePoset fence_poset(const Word& w) {
  const int n = static_cast<int>(w.size()) + 1;
  std::vector<std::string> pay;
  for (int i = 0; i < n; ++i) pay.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    int lo = static_cast<int>(i) - 1, hi = static_cast<int>(i);
    if (w.letter(i) == 'a') std::swap(lo, hi);
    rel.emplace_back(lo, hi);
  }
  return FinitePoset(std::move(pay), std::move(rel));
}

FinitePoset boolean_lattice(int u) { return antichain_poset(u).order_ideals(); }

FinitePoset fibonacci_cube(int n) {
  if (n < 1) throw PosetError("fibonacci_cube: need n >= 1");
  std::string w;
  for (int i = 0; i + 1 < n; ++i) w.push_back(i % 2 ? 'b' : 'a');
  return fence_poset(Word(w)).order_ideals();
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> pay;
  std::vector<std::pair<int, int>> rel;
  auto at = [&](int i, int j) { return i * q.size() + j; };
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j)
      pay.push_back("(" + p.payload(i) + "," + q.payload(j) + ")");
  for (int i = 0; i < p.size(); ++i)
    for (auto [lo, hi] : q.covers()) rel.emplace_back(at(i, lo), at(i, hi));
  for (auto [lo, hi] : p.covers())
    for (int j = 0; j < q.size(); ++j) rel.emplace_back(at(lo, j), at(hi, j));
  return FinitePoset(std::move(pay), std::move(rel));
}

FinitePoset grid_lattice(int m, int n) {
  return product_poset(chain_poset(m), chain_poset(n)).order_ideals();
}

namespace {

// iterated neighbor-multiset refinement; returns a color per element
std::vector<long long> wl_colors(const FinitePoset& p) {
  const int n = p.size();
  std::vector<long long> color(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    color[static_cast<std::size_t>(i)] =
        static_cast<long long>(p.lower_covers(i).size()) * 1000 +
        static_cast<long long>(p.upper_covers(i).size());
  using Key = std::pair<long long, std::pair<std::vector<long long>, std::vector<long long>>>;
  for (int round = 0; round < 4; ++round) {
    // fresh ids must be assigned by sorted key rank (not discovery order) so
    // that corresponding classes of isomorphic posets get equal ids
    std::vector<Key> keys(static_cast<std::size_t>(n));
    std::map<Key, long long> rank;
    for (int i = 0; i < n; ++i) {
      std::vector<long long> dn, up;
      for (int j : p.lower_covers(i)) dn.push_back(color[static_cast<std::size_t>(j)]);
      for (int j : p.upper_covers(i)) up.push_back(color[static_cast<std::size_t>(j)]);
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      keys[static_cast<std::size_t>(i)] =
          std::make_pair(color[static_cast<std::size_t>(i)], std::make_pair(dn, up));
      rank.emplace(keys[static_cast<std::size_t>(i)], 0);
    }
    long long next_id = 0;
    for (auto& [key, id] : rank) id = next_id++;
    for (int i = 0; i < n; ++i)
      color[static_cast<std::size_t>(i)] = rank[keys[static_cast<std::size_t>(i)]];
  }
  return color;
}

}  // namespace

std::optional<std::vector<int>> find_poset_isomorphism(const FinitePoset& p,
                                                       const FinitePoset& q,
                                                       bool match_weights) {
  if (p.size() != q.size()) return std::nullopt;
  if (p.covers().size() != q.covers().size()) return std::nullopt;
  if (match_weights && (!p.has_weights() || !q.has_weights()))
    throw PosetError("find_poset_isomorphism: weights requested but missing");
  const int n = p.size();

  auto pc = wl_colors(p), qc = wl_colors(q);
  {
    auto ps = pc, qs = qc;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return std::nullopt;
  }

  std::set<std::pair<int, int>> qcov(q.covers().begin(), q.covers().end());

  // assign p-elements in order of rarest color first
  std::map<long long, int> freq;
  for (auto c : pc) ++freq[c];
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ka = std::make_pair(freq[pc[static_cast<std::size_t>(a)]], a);
    auto kb = std::make_pair(freq[pc[static_cast<std::size_t>(b)]], b);
    return ka < kb;
  });

  std::vector<int> map(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);

  auto consistent = [&](int u, int v) {
    if (pc[static_cast<std::size_t>(u)] != qc[static_cast<std::size_t>(v)]) return false;
    if (match_weights && !(p.weight(u) == q.weight(v))) return false;
    for (int w : p.lower_covers(u)) {
      int mw = map[static_cast<std::size_t>(w)];
      if (mw != -1 && !qcov.count({mw, v})) return false;
    }
    for (int w : p.upper_covers(u)) {
      int mw = map[static_cast<std::size_t>(w)];
      if (mw != -1 && !qcov.count({v, mw})) return false;
    }
    // count check: assigned covers of v must come from assigned covers of u
    // (cover counts per node already matched through colors)
    return true;
  };

  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  int depth = 0;
  while (depth >= 0 && depth < n) {
    int u = order[static_cast<std::size_t>(depth)];
    bool advanced = false;
    std::size_t& start = pos[static_cast<std::size_t>(depth)];
    for (std::size_t v = start; v < static_cast<std::size_t>(n); ++v) {
      if (used[v]) continue;
      if (!consistent(u, static_cast<int>(v))) continue;
      map[static_cast<std::size_t>(u)] = static_cast<int>(v);
      used[v] = 1;
      start = v + 1;
      ++depth;
      advanced = true;
      break;
    }
    if (!advanced) {
      pos[static_cast<std::size_t>(depth)] = 0;
      --depth;
      if (depth >= 0) {
        int pu = order[static_cast<std::size_t>(depth)];
        int pv = map[static_cast<std::size_t>(pu)];
        used[static_cast<std::size_t>(pv)] = 0;
        map[static_cast<std::size_t>(pu)] = -1;
      }
    }
  }
  if (depth < 0) return std::nullopt;

  // final verification both directions
  std::set<std::pair<int, int>> mapped;
  for (auto [lo, hi] : p.covers())
    mapped.insert({map[static_cast<std::size_t>(lo)], map[static_cast<std::size_t>(hi)]});
  if (mapped != qcov) return std::nullopt;
  return map;
}

bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q, bool match_weights) {
  return find_poset_isomorphism(p, q, match_weights).has_value();
}

}  // namespace clusterforge
