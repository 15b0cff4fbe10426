#include "clusterforge/quiver.hpp"

#include <cstdlib>
#include <map>
#include <queue>
#include <set>

namespace clusterforge {

Quiver::Quiver(int mutable_count, int total_count)
    : mutable_count_(mutable_count),
      total_count_(total_count),
      b_(total_count, std::vector<int>(total_count, 0)) {
    if (mutable_count < 0 || total_count < mutable_count) {
        throw std::invalid_argument("bad quiver node counts");
    }
}

void Quiver::add_arrow(int from, int to, int multiplicity) {
    if (from == to) throw std::invalid_argument("quiver loop");
    b_[from][to] += multiplicity;
    b_[to][from] -= multiplicity;
}

Quiver Quiver::mutated(int k) const {
    if (!is_mutable(k)) throw FrozenVertexMutation(k);
    Quiver out = *this;
    for (int i = 0; i < total_count_; ++i) {
        for (int j = 0; j < total_count_; ++j) {
            if (i == k || j == k) {
                out.b_[i][j] = -b_[i][j];
            } else {
                out.b_[i][j] = b_[i][j] + (std::abs(b_[i][k]) * b_[k][j] + b_[i][k] * std::abs(b_[k][j])) / 2;
            }
        }
    }
    return out;
}

std::vector<int> Quiver::hat_y_exponents(int k) const {
    if (!is_mutable(k)) throw FrozenVertexMutation(k);
    std::vector<int> exps(total_count_);
    for (int i = 0; i < total_count_; ++i) exps[i] = b_[i][k];
    return exps;
}

Quiver word_quiver(const Word& w) {
    const int n = static_cast<int>(w.size()) + 1;
    const int m = 2 * n + 3;
    Quiver q(n, m);
    auto cycle = [&q](int u, int v, int t) {
        q.add_arrow(u, v);
        q.add_arrow(v, t);
        q.add_arrow(t, u);
    };
    // Node indices are labels minus one.
    cycle(2 * n, 0, 2 * n - 1);  // leftmost triangle: (2n+1) -> 1 -> 2n -> (2n+1)
    for (int i = 1; i < n; ++i) {
        if (w.letter(i) == 'a') {
            cycle(i, i - 1, n + i - 1);  // (i+1) -> i -> (n+i) -> (i+1)
        } else {
            cycle(i - 1, i, n + i - 1);  // i -> (i+1) -> (n+i) -> i
        }
    }
    const bool swap_last = w.size() % 2 == 0 && w.size() >= 2 &&
                           w.letter(w.size()) != w.letter(w.size() - 1);
    if (swap_last) {
        cycle(n - 1, 2 * n + 2, 2 * n + 1);  // n -> (2n+3) -> (2n+2) -> n
    } else {
        cycle(n - 1, 2 * n + 1, 2 * n + 2);  // n -> (2n+2) -> (2n+3) -> n
    }
    return q;
}

Seed::Seed(Quiver quiver) : quiver_(std::move(quiver)) {
    const int m = quiver_.total_count();
    attachments_.reserve(m);
    for (int i = 0; i < m; ++i) attachments_.push_back(Laurent::variable(m, i));
}

Seed::Seed(Quiver quiver, std::vector<Laurent> attachments)
    : quiver_(std::move(quiver)), attachments_(std::move(attachments)) {
    if (static_cast<int>(attachments_.size()) != quiver_.total_count()) {
        throw std::invalid_argument("seed attachment count mismatch");
    }
}

Seed Seed::mutated(int k) const {
    if (!quiver_.is_mutable(k)) throw FrozenVertexMutation(k);
    const int m = quiver_.total_count();
    Laurent in_product = Laurent::one(m);
    Laurent out_product = Laurent::one(m);
    for (int i = 0; i < m; ++i) {
        const int a = quiver_.arrows(i, k);
        if (a > 0) in_product = in_product * attachments_[i].pow(a);
        if (a < 0) out_product = out_product * attachments_[i].pow(-a);
    }
    std::vector<Laurent> next = attachments_;
    next[k] = (in_product + out_product).exact_div(attachments_[k]);
    return Seed(quiver_.mutated(k), std::move(next));
}

std::vector<Exponents> support_orbit(const Exponents& start, const Quiver& quiver) {
    const int m = quiver.total_count();
    const int n = quiver.mutable_count();
    if (static_cast<int>(start.size()) != m) {
        throw std::invalid_argument("support_orbit: exponent vector size mismatch");
    }
    auto admissible = [&](const Exponents& e) {
        for (int i = n; i < m; ++i) {
            if (e[i] < 0 || e[i] > 1) return false;
        }
        return true;
    };
    if (!admissible(start)) return {};
    std::vector<std::vector<int>> hats;
    hats.reserve(n);
    for (int k = 0; k < n; ++k) hats.push_back(quiver.hat_y_exponents(k));

    std::set<Exponents> seen{start};
    std::queue<Exponents> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
        Exponents e = frontier.front();
        frontier.pop();
        for (int k = 0; k < n; ++k) {
            for (int sign : {+1, -1}) {
                Exponents next = e;
                for (int i = 0; i < m; ++i) next[i] += sign * hats[k][i];
                if (admissible(next) && seen.insert(next).second) frontier.push(next);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace clusterforge
