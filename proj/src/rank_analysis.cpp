#include "clusterforge/rank_analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "clusterforge/expansions.hpp"
#include "clusterforge/snakegraph.hpp"

namespace clusterforge {

QPolynomial rank_recursive(const Word& shape) {
    const SnakeGraph g = SnakeGraph::from_shape(shape);

    // Paths are weighted by the number of tiles below each horizontal step;
    // accumulate over the region's lattice points column by column.
    std::map<GridPoint, QPolynomial> rho;
    std::vector<GridPoint> points;
    for (const GridEdge& e : g.edges()) {
        points.push_back(e.u);
        points.push_back(e.v);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::map<std::pair<int, int>, int> tiles_below;  // (column, y) -> tile count
    for (const GridPoint& t : g.tiles())
        for (int y = t.y + 1; y <= g.ne_corner().y; ++y) ++tiles_below[{t.x, y}];

    auto has = [&rho](const GridPoint& p) { return rho.contains(p); };
    for (const GridPoint& p : points) {  // lexicographic: left and below first
        QPolynomial value;
        if (p == GridPoint{0, 0}) value = QPolynomial::one();
        const GridPoint below{p.x, p.y - 1};
        if (has(below) && g.neighbors(p).size() > 0) {
            bool edge = false;
            for (const GridPoint& q : g.neighbors(p)) edge |= (q == below);
            if (edge) value += rho.at(below);
        }
        const GridPoint left{p.x - 1, p.y};
        if (has(left)) {
            bool edge = false;
            for (const GridPoint& q : g.neighbors(p)) edge |= (q == left);
            if (edge) {
                auto it = tiles_below.find({p.x - 1, p.y});
                const std::size_t h =
                    it == tiles_below.end() ? 0 : static_cast<std::size_t>(it->second);
                value += rho.at(left).shifted(h);
            }
        }
        rho.emplace(p, std::move(value));
    }
    return rho.at(g.ne_corner());
}

namespace {

QPolynomial reversed_coefficients(const QPolynomial& p) {
    std::vector<BigInt> c = p.coeffs();
    std::reverse(c.begin(), c.end());
    return QPolynomial(std::move(c));
}

// One summand of the hook sum for a fixed choice of interior pair slots.
// Slot t in [1, (d-1)/2] covers segment indices 2t and 2t+1.
struct HookTerm {
    std::vector<QPolynomial> factors;
    std::vector<bool> splits;  // factor is a two-summand hook 1 + q[k][k']
};

std::vector<HookTerm> hook_terms(const std::vector<int>& k) {
    const int d = static_cast<int>(k.size());
    const int u = (d - 1) / 2;
    std::vector<HookTerm> terms;
    for (unsigned mask = 0; mask < (1u << u); ++mask) {
        std::vector<bool> consumed(static_cast<std::size_t>(d) + 1, false);
        std::size_t shift = 0;
        for (int t = 1; t <= u; ++t) {
            if (!(mask & (1u << (t - 1)))) continue;
            const int lo = 2 * t, hi = 2 * t + 1;
            consumed[static_cast<std::size_t>(lo)] = true;
            consumed[static_cast<std::size_t>(hi)] = true;
            shift += static_cast<std::size_t>(k[static_cast<std::size_t>(lo - 1)] +
                                              k[static_cast<std::size_t>(hi - 1)]);
            if (hi != d) ++shift;  // interior pair keeps the +1 in its exponent
            // adjacent chosen slots share a step of the staircase
            if (t > 1 && (mask & (1u << (t - 2)))) --shift;
        }
        HookTerm term;
        term.factors.push_back(QPolynomial::power(shift));
        term.splits.push_back(false);
        int i = 1;
        while (i <= d) {
            if (consumed[static_cast<std::size_t>(i)]) {
                ++i;
                continue;
            }
            const bool pair = (i % 2 == 1) && i + 1 <= d &&
                              !consumed[static_cast<std::size_t>(i + 1)];
            if (pair) {
                QPolynomial h = QPolynomial::one() +
                                (q_number(k[static_cast<std::size_t>(i - 1)]) *
                                 q_number(k[static_cast<std::size_t>(i)]))
                                    .shifted(1);
                term.factors.push_back(std::move(h));
                term.splits.push_back(true);
                i += 2;
            } else {
                term.factors.push_back(q_number(k[static_cast<std::size_t>(i - 1)]));
                term.splits.push_back(false);
                ++i;
            }
        }
        terms.push_back(std::move(term));
    }
    return terms;
}

// Reduce any shape to an equivalent one starting with the letter a: reading
// the region upside down reverses the rank order, and swapping the two
// letters transposes the region without changing the order at all.
enum class Orientation { direct, reversed };

std::pair<Word, Orientation> a_start_form(const Word& shape) {
    if (shape.empty() || shape.letter(1) == 'a') return {shape, Orientation::direct};
    if (shape.letter(shape.size()) == 'a') return {shape.reversed(), Orientation::reversed};
    return {shape.flipped().reversed(), Orientation::direct};
}

}  // namespace

QPolynomial rank_hook(const Word& shape) {
    const auto [canon, orient] = a_start_form(shape);
    const SnakeGraph g = SnakeGraph::from_shape(canon);
    const std::vector<int> k = straight_segments(g);
    QPolynomial sum;
    if (k.size() == 1) {
        sum = q_number(g.tile_count() + 1);
    } else {
        for (const HookTerm& term : hook_terms(k)) {
            QPolynomial product = QPolynomial::one();
            for (const QPolynomial& f : term.factors) product *= f;
            sum += product;
        }
    }
    return orient == Orientation::reversed ? reversed_coefficients(sum) : sum;
}

std::vector<QPolynomial> fibonacci_rank_terms(const Word& shape) {
    const auto [canon, orient] = a_start_form(shape);
    const SnakeGraph g = SnakeGraph::from_shape(canon);
    const std::vector<int> k = straight_segments(g);
    std::vector<QPolynomial> out;
    if (k.size() == 1) {
        out.push_back(q_number(g.tile_count() + 1));
    } else {
        for (const HookTerm& term : hook_terms(k)) {
            std::vector<QPolynomial> expanded{QPolynomial::one()};
            for (std::size_t fi = 0; fi < term.factors.size(); ++fi) {
                const QPolynomial& f = term.factors[fi];
                if (term.splits[fi]) {
                    // split the two-summand hook factor 1 + q[k][k']
                    std::vector<QPolynomial> next;
                    for (const QPolynomial& partial : expanded) {
                        next.push_back(partial);
                        next.push_back(partial * (f - QPolynomial::one()));
                    }
                    expanded = std::move(next);
                } else {
                    for (QPolynomial& partial : expanded) partial *= f;
                }
            }
            for (QPolynomial& t : expanded) out.push_back(std::move(t));
        }
    }

    // F(2) = 1, F(3) = 2, ...: the expansion has F(d+1) terms.
    const std::size_t d = k.size();
    std::size_t fib_prev = 1, fib = 1;
    for (std::size_t i = 2; i <= d + 1; ++i) {
        const std::size_t next = fib_prev + fib;
        fib_prev = fib;
        fib = next;
    }
    if (out.size() != fib_prev)
        throw std::logic_error("fibonacci_rank_terms: term count is not Fibonacci");

    if (orient == Orientation::reversed) {
        // reverse each term inside the full sum's degree span
        int top = 0;
        for (const QPolynomial& t : out) top = std::max(top, t.degree());
        for (QPolynomial& t : out)
            t = reversed_coefficients(t).shifted(
                static_cast<std::size_t>(top - t.degree()));
    }
    return out;
}

QPolynomial rank_fibonacci(const Word& shape) {
    QPolynomial sum;
    for (const QPolynomial& t : fibonacci_rank_terms(shape)) sum += t;
    return sum;
}

std::pair<QPolynomial, QPolynomial> q_deformed_rational(const Word& w) {
    // rank polynomials live on the matching order, built shape-only
    const SnakeGraph g = SnakeGraph::from_shape(w.dual());
    const ContinuedFraction cf = cf_from_snake(g);
    const int drop = cf.entries.front();

    const QPolynomial whole = matching_poset(g).rank_generating_function();
    QPolynomial truncated;
    if (drop >= g.tile_count()) {
        truncated = QPolynomial::one();
    } else {
        const SnakeGraph rest = SnakeGraph::from_shape(
            Word(g.shape().str().substr(static_cast<std::size_t>(drop))));
        truncated = matching_poset(rest).rank_generating_function();
    }
    return {whole, truncated};
}

namespace {

bool weakly_trapezoidal_profile(const std::vector<BigInt>& r) {
    const int n = static_cast<int>(r.size()) - 1;
    if (n < 0) return false;
    // strictly rise to j, stay flat to j+t, strictly fall to the end
    int j = 0;
    while (j < n && r[static_cast<std::size_t>(j)] < r[static_cast<std::size_t>(j + 1)]) ++j;
    int m = j;
    while (m < n && r[static_cast<std::size_t>(m)] == r[static_cast<std::size_t>(m + 1)]) ++m;
    for (int i = m; i < n; ++i)
        if (!(r[static_cast<std::size_t>(i)] > r[static_cast<std::size_t>(i + 1)]))
            return false;
    // the maximum must sit in the middle
    const BigInt top = *std::max_element(r.begin(), r.end());
    if (n % 2 == 0) return r[static_cast<std::size_t>(n / 2)] == top;
    return r[static_cast<std::size_t>(n / 2)] == top ||
           r[static_cast<std::size_t>(n / 2 + 1)] == top;
}

}  // namespace

RankProfile analyze_rank_polynomial(const QPolynomial& p) {
    RankProfile out;
    out.coefficients = p.coeffs();
    const std::vector<BigInt>& r = out.coefficients;
    const int n = static_cast<int>(r.size()) - 1;
    if (n < 0) return out;

    out.symmetric = p.is_palindromic();

    int rise = 0;
    while (rise < n && r[static_cast<std::size_t>(rise)] <= r[static_cast<std::size_t>(rise + 1)])
        ++rise;
    out.unimodal = true;
    for (int i = rise; i < n; ++i)
        if (r[static_cast<std::size_t>(i)] < r[static_cast<std::size_t>(i + 1)])
            out.unimodal = false;

    for (int i = 0; i <= n;) {
        int j = i;
        while (j < n && r[static_cast<std::size_t>(j + 1)] == r[static_cast<std::size_t>(i)])
            ++j;
        if (j > i) out.plateaus.emplace_back(i, j - i + 1);
        i = j + 1;
    }

    out.weakly_trapezoidal = weakly_trapezoidal_profile(r);
    out.trapezoidal = out.symmetric && out.weakly_trapezoidal;

    if (n >= 2) {
        const std::vector<BigInt> interior(r.begin() + 1, r.end() - 1);
        out.almost_weakly_trapezoidal = r[0] <= r[1] &&
                                        r[static_cast<std::size_t>(n - 1)] >=
                                            r[static_cast<std::size_t>(n)] &&
                                        weakly_trapezoidal_profile(interior);
    } else {
        out.almost_weakly_trapezoidal = out.weakly_trapezoidal;
    }

    std::vector<BigInt> gaps;
    for (int i = 0; i < n; ++i)
        gaps.push_back(abs(r[static_cast<std::size_t>(i + 1)] - r[static_cast<std::size_t>(i)]));
    out.unimodal_growth = true;
    if (!gaps.empty()) {
        std::size_t fall = 0;
        while (fall + 1 < gaps.size() && gaps[fall] >= gaps[fall + 1]) ++fall;
        for (std::size_t i = fall; i + 1 < gaps.size(); ++i)
            if (gaps[i] > gaps[i + 1]) out.unimodal_growth = false;
    }
    return out;
}

bool predicted_path_rank_symmetric(const Word& shape) { return shape.is_symmetric(); }

bool predicted_matching_rank_symmetric(const Word& w) { return w.is_symmetric(); }

}  // namespace clusterforge
