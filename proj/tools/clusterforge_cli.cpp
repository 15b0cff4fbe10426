// Command-line front end: construct, expand, dualize, analyze, verify, and
// export the library's objects as JSON, DOT, or text.
//
// Exit codes: 0 success, 1 verification failure (or internal error), 2 usage.

#include "CLI11.hpp"

#include "clusterforge/cf.hpp"
#include "clusterforge/expansions.hpp"
#include "clusterforge/json_io.hpp"
#include "clusterforge/laurent.hpp"
#include "clusterforge/poset.hpp"
#include "clusterforge/ptolemy.hpp"
#include "clusterforge/qpoly.hpp"
#include "clusterforge/quiver.hpp"
#include "clusterforge/rank_analysis.hpp"
#include "clusterforge/sl3.hpp"
#include "clusterforge/snakegraph.hpp"
#include "clusterforge/triangulation.hpp"
#include "clusterforge/word.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace clusterforge;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Word parse_word(const std::string& s) {
    if (!Word::valid(s)) throw UsageError("word must match [ab]*, got \"" + s + "\"");
    return Word(s);
}

// Either --word w or --shape s selects a word; a shape is the snake graph's
// gluing word, i.e. the dual of the word whose variable the graph expands.
Word resolve_word(bool have_word, const std::string& word, bool have_shape,
                  const std::string& shape) {
    if (have_word == have_shape)
        throw UsageError("exactly one of --word and --shape is required");
    if (have_word) return parse_word(word);
    return parse_word(shape).dual();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

int worker_count(std::size_t jobs) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("CLUSTERFORGE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        cap = (end != env && v >= 1) ? std::min<long>(cap, v) : 1;
    }
    if (jobs < cap) cap = static_cast<unsigned>(jobs);
    return static_cast<int>(std::max(1u, cap));
}

constexpr ExpansionKind kAllKinds[] = {
    ExpansionKind::matchings,      ExpansionKind::angle_matchings,
    ExpansionKind::t_paths,        ExpansionKind::lattice_paths,
    ExpansionKind::angle_paths,    ExpansionKind::edge_walks,
};

ExpansionKind parse_kind(const std::string& s) {
    if (s.size() != 1) throw UsageError("--kind takes one of P,A,T,L,B,S");
    try {
        return expansion_kind_from_letter(s[0]);
    } catch (const std::exception&) {
        throw UsageError("--kind takes one of P,A,T,L,B,S");
    }
}

// ---------------------------------------------------------------------
// expand

struct ExpandOptions {
    std::string word, shape, kind = "P", format = "text", out;
    bool have_word = false, have_shape = false;
};

int run_expand(const ExpandOptions& o) {
    const Word w = resolve_word(o.have_word, o.word, o.have_shape, o.shape);
    const ExpansionKind kind = parse_kind(o.kind);
    const FinitePoset poset = expansion_poset(kind, w);
    const Laurent value = expansion_value(kind, poset, w);
    const std::vector<std::string> names = variable_names(w);

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["word"] = w.str();
        j["kind"] = std::string(1, expansion_letter(kind));
        j["model"] = expansion_kind_name(kind);
        j["poset"] = poset_json(poset, names);
        j["value"] = laurent_json(value, names);
        os << dump_json(j);
    } else if (o.format == "dot") {
        os << poset_dot(poset, names);
    } else {
        os << expansion_kind_name(kind) << " expansion of word \"" << w.str()
           << "\": " << poset.size() << " element(s)\n";
        const std::vector<int> ranks = poset.is_graded()
                                           ? poset.ranks()
                                           : std::vector<int>(static_cast<std::size_t>(poset.size()), 0);
        for (int i = 0; i < poset.size(); ++i)
            os << "  rank " << ranks[static_cast<std::size_t>(i)] << "  "
               << poset.payload(i) << "  " << poset.weight(i).to_string(names) << "\n";
        os << "x_w = " << value.to_string(names) << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// dual

struct DualOptions {
    std::string word, shape, format = "text", out;
    bool have_word = false, have_shape = false;
};

int run_dual(const DualOptions& o) {
    const Word w = resolve_word(o.have_word, o.word, o.have_shape, o.shape);
    const Word d = w.dual();
    const ContinuedFraction cf = continued_fraction(w);
    const ContinuedFraction cf_dual = cf.dual();
    const ContinuedFraction cf_of_dual = continued_fraction(d);

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["word"] = w.str();
        j["dual_word"] = d.str();
        j["snake_shape"] = d.str();
        j["cf"] = cf.entries;
        j["cf_dual"] = cf_dual.entries;
        j["cf_of_dual_word"] = cf_of_dual.entries;
        j["dual_cf_matches"] = (cf_dual == cf_of_dual);
        os << dump_json(j);
    } else {
        os << "word:        " << w.str() << "\n";
        os << "dual word:   " << d.str() << "  (= gluing shape of the word's snake graph)\n";
        os << "CF(w)  = " << cf.to_string() << " = " << cf.value().to_string() << "\n";
        os << "CF(w)* = " << cf_dual.to_string() << " = " << cf_dual.value().to_string() << "\n";
        os << "CF(w*) = " << cf_of_dual.to_string() << (cf_dual == cf_of_dual ? "  (matches CF(w)*)" : "  (DIFFERS from CF(w)*)") << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// rank

struct RankOptions {
    std::string shape, format = "text", out;
};

int run_rank(const RankOptions& o) {
    const Word shape = parse_word(o.shape);
    const QPolynomial recursive = rank_recursive(shape);
    const QPolynomial hook = rank_hook(shape);
    const QPolynomial fibonacci = rank_fibonacci(shape);
    if (recursive != hook || recursive != fibonacci)
        throw VerificationFailure("rank formulas disagree for shape \"" + shape.str() + "\"");
    // cross-check against the enumerated poset when small enough to list
    if (recursive.value_at_one() <= 200000) {
        const SnakeGraph g = SnakeGraph::from_shape(shape);
        const QPolynomial listed = lattice_path_poset(g).rank_generating_function();
        if (listed != recursive)
            throw VerificationFailure("rank formula disagrees with enumeration for shape \"" +
                                      shape.str() + "\"");
    }
    const RankProfile profile = analyze_rank_polynomial(recursive);

    std::ostringstream os;
    if (o.format == "json") {
        os << dump_json(rank_json(shape, profile));
    } else {
        os << "rank polynomial of shape \"" << shape.str() << "\": "
           << recursive.to_string() << "\n";
        os << "coefficients: [";
        for (std::size_t i = 0; i < profile.coefficients.size(); ++i)
            os << (i ? ", " : "") << profile.coefficients[i].str();
        os << "]\n";
        os << "symmetric=" << profile.symmetric << " unimodal=" << profile.unimodal
           << " trapezoidal=" << profile.trapezoidal
           << " weakly_trapezoidal=" << profile.weakly_trapezoidal
           << " almost_weakly_trapezoidal=" << profile.almost_weakly_trapezoidal
           << " unimodal_growth=" << profile.unimodal_growth << "\n";
        os << "plateaus:";
        for (const auto& [start, len] : profile.plateaus)
            os << " (" << start << "," << len << ")";
        os << "\n";
        const std::vector<int> segs = straight_segments(SnakeGraph::from_shape(shape));
        os << "straight segments: [";
        for (std::size_t i = 0; i < segs.size(); ++i) os << (i ? "," : "") << segs[i];
        os << "]\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// cf

struct CfOptions {
    std::string word, shape, format = "text", out;
    bool have_word = false, have_shape = false;
};

int run_cf(const CfOptions& o) {
    const Word w = resolve_word(o.have_word, o.word, o.have_shape, o.shape);
    const SnakeGraph g = snake_graph(w);
    const ContinuedFraction cf = cf_from_snake(g);
    const std::vector<int> signs = sign_sequence(g);

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["word"] = w.str();
        j["shape"] = g.shape().str();
        j["entries"] = cf.entries;
        j["value"] = cf.value().to_string();
        j["normalized"] = cf.normalized().entries;
        j["dual"] = cf.dual().entries;
        j["signs"] = signs;
        os << dump_json(j);
    } else {
        os << "CF(\"" << w.str() << "\") = " << cf.to_string() << " = "
           << cf.value().to_string() << "\n";
        os << "signs:";
        for (int s : signs) os << " " << (s > 0 ? "+" : "-");
        os << "\n";
        os << "normalized: " << cf.normalized().to_string() << "\n";
        os << "dual:       " << cf.dual().to_string() << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// orbit

struct OrbitOptions {
    std::string shape, format = "text", out;
};

int run_orbit(const OrbitOptions& o) {
    const Word shape = parse_word(o.shape);
    const int tiles = static_cast<int>(shape.size()) + 1;
    const int bees = static_cast<int>(std::count(shape.str().begin(), shape.str().end(), 'b'));
    const FinitePoset poset = orbit_poset(tiles, bees);
    const QPolynomial rank = poset.rank_generating_function();
    const QPolynomial expected = q_binomial(tiles - 1, bees);
    const bool match = (rank == expected);

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["shape"] = shape.str();
        j["tiles"] = tiles;
        j["b_count"] = bees;
        j["size"] = poset.size();
        Json coeffs = Json::array();
        for (const BigInt& c : rank.coeffs()) coeffs.push_back(c.convert_to<long long>());
        j["rank_polynomial"] = std::move(coeffs);
        j["q_binomial_match"] = match;
        j["poset"] = poset_json(poset);
        os << dump_json(j);
    } else if (o.format == "dot") {
        os << poset_dot(poset);
    } else {
        os << "orbit of shape \"" << shape.str() << "\": " << tiles << " tiles, "
           << bees << " b-letter(s), " << poset.size() << " shapes\n";
        os << "rank polynomial: " << rank.to_string() << "\n";
        os << "q-binomial [" << (tiles - 1) << " choose " << bees
           << "]: " << (match ? "matches" : "MISMATCH") << "\n";
    }
    write_output(o.out, os.str());
    if (!match)
        throw VerificationFailure("orbit rank polynomial is not the expected q-binomial");
    return 0;
}

// ---------------------------------------------------------------------
// snake

struct SnakeOptions {
    std::string word, shape, format = "text", out;
    bool have_word = false, have_shape = false;
};

int run_snake(const SnakeOptions& o) {
    const Word w = resolve_word(o.have_word, o.word, o.have_shape, o.shape);
    const SnakeGraph g = snake_graph(w);
    const std::vector<int> signs = sign_sequence(g);

    std::ostringstream os;
    if (o.format == "json") {
        os << dump_json(snake_json(g));
    } else {
        os << "snake graph of word \"" << w.str() << "\": shape \"" << g.shape().str()
           << "\", " << g.tile_count() << " tile(s)\n";
        os << "tiles:";
        for (const GridPoint& t : g.tiles()) os << " (" << t.x << "," << t.y << ")";
        os << "\n";
        os << "signs:";
        for (int s : signs) os << " " << (s > 0 ? "+" : "-");
        os << "\n";
        os << "CF = " << cf_from_snake(g).to_string() << "\n";
        const std::vector<int> segs = straight_segments(g);
        os << "straight segments: [";
        for (std::size_t i = 0; i < segs.size(); ++i) os << (i ? "," : "") << segs[i];
        os << "]\n";
        os << "perfect matchings: " << all_perfect_matchings(g).size() << "\n";
        os << "lattice paths:     " << all_lattice_paths(g).size() << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// poset

struct PosetOptions {
    std::string word, shape, kind, format = "text", out;
    bool have_word = false, have_shape = false;
};

int run_poset(const PosetOptions& o) {
    const Word w = resolve_word(o.have_word, o.word, o.have_shape, o.shape);
    FinitePoset poset;
    std::vector<std::string> names;
    std::string description;
    if (!o.kind.empty()) {
        const ExpansionKind kind = parse_kind(o.kind);
        poset = expansion_poset(kind, w);
        names = variable_names(w);
        description = expansion_kind_name(kind) + " expansion poset";
    } else {
        poset = fence_poset(w).order_ideals();
        description = "order-ideal lattice of the word's fence";
    }

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["word"] = w.str();
        j["description"] = description;
        j["size"] = poset.size();
        j["graded"] = poset.is_graded();
        if (poset.is_graded()) {
            Json coeffs = Json::array();
            for (const BigInt& c : poset.rank_generating_function().coeffs())
                coeffs.push_back(c.convert_to<long long>());
            j["rank_polynomial"] = std::move(coeffs);
        }
        j["lattice"] = poset.is_lattice();
        j["distributive"] = poset.is_distributive();
        j["poset"] = poset_json(poset, names);
        os << dump_json(j);
    } else if (o.format == "dot") {
        os << poset_dot(poset, names);
    } else {
        os << description << " for word \"" << w.str() << "\": " << poset.size()
           << " element(s)\n";
        os << "graded=" << poset.is_graded() << " lattice=" << poset.is_lattice()
           << " distributive=" << poset.is_distributive() << "\n";
        if (poset.is_graded())
            os << "rank polynomial: " << poset.rank_generating_function().to_string()
               << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------
// sl3

struct Sl3Options {
    int size = 0;
    std::vector<int> edge, face;
    std::string format = "text", out;
};

int run_sl3(const Sl3Options& o) {
    if (o.size < 4) throw UsageError("--size must be at least 4");
    if (!o.edge.empty() && !o.face.empty())
        throw UsageError("--edge and --face are mutually exclusive");
    const FanSL3Seed seed = build_fan_sl3_seed(o.size);

    FinitePoset poset;
    std::vector<SL3Diagram> diagrams;
    Laurent oracle = Laurent::zero(seed.node_count());
    std::string target;
    if (!o.face.empty()) {
        const auto [p, q, r] = std::tuple{o.face[0], o.face[1], o.face[2]};
        if (p == q || q == r || p == r || p < 0 || q < 0 || r < 0 || p >= o.size ||
            q >= o.size || r >= o.size)
            throw UsageError("--face needs three distinct polygon vertices");
        target = SL3Element::face(p, q, r).to_string();
        diagrams = face_tpath_diagrams(seed, p, q, r);
        poset = enumerate_face_tpaths(seed, p, q, r);
        oracle = flip_oracle_face(seed, p, q, r);
    } else {
        // default target: the longest edge of the fan polygon, source first
        const int u = o.edge.empty() ? 0 : o.edge[0];
        const int v = o.edge.empty() ? o.size - 2 : o.edge[1];
        if (u == v || u < 0 || v < 0 || u >= o.size || v >= o.size)
            throw UsageError("--edge needs two distinct polygon vertices");
        target = SL3Element::edge(u, v).to_string();
        diagrams = edge_tpath_diagrams(seed, u, v);
        poset = enumerate_edge_tpaths(seed, u, v);
        oracle = flip_oracle_edge(seed, u, v);
    }
    const Laurent sum = poset.weight_sum();
    const bool match = (sum == oracle);

    std::ostringstream os;
    if (o.format == "json") {
        Json j;
        j["size"] = o.size;
        j["target"] = target;
        j["count"] = poset.size();
        j["oracle_match"] = match;
        j["value"] = laurent_json(sum, seed.variable_names());
        Json ds = Json::array();
        for (const SL3Diagram& d : diagrams) ds.push_back(sl3_diagram_json(seed, d));
        j["diagrams"] = std::move(ds);
        j["poset"] = poset_json(poset, seed.variable_names());
        os << dump_json(j);
    } else if (o.format == "dot") {
        os << poset_dot(poset, seed.variable_names());
    } else {
        os << "SL3 expansion of " << target << " in the fan " << o.size << "-gon: "
           << poset.size() << " diagram(s)\n";
        for (const SL3Diagram& d : diagrams) os << "  " << d.to_string() << "\n";
        os << "weight sum " << (match ? "matches" : "MISMATCHES")
           << " the flip oracle\n";
    }
    write_output(o.out, os.str());
    if (!match) throw VerificationFailure("SL3 weight sum differs from the flip oracle");
    return 0;
}

// ---------------------------------------------------------------------
// verify

// Cross-formula equality suite for one word; returns failure descriptions.
std::vector<std::string> verify_word(const Word& w) {
    std::vector<std::string> bad;
    const WordTriangulation tri = WordTriangulation::from_word(w);
    ChordOracle oracle(tri);
    const Laurent& expected = oracle.word_variable();

    for (ExpansionKind kind : kAllKinds) {
        const Laurent got = expand_word(kind, w);
        if (got != expected) bad.push_back(expansion_kind_name(kind) + " expansion mismatch");
    }

    try {
        const Laurent res = resolution_sum(tri).exact_div(diagonal_product(w));
        if (res != expected) bad.push_back("skein resolution sum mismatch");
    } catch (const ExactDivisionFailed&) {
        bad.push_back("skein resolution sum not divisible by the diagonal product");
    }
    const WordTriangulation dual_tri = WordTriangulation::from_word(w.dual());
    if (dual_resolution_sum(tri) != resolution_sum(dual_tri))
        bad.push_back("dual resolution sum differs from the dual word's resolutions");

    const SnakeGraph g = snake_graph(w);
    const ContinuedFraction cf = cf_from_snake(g);
    const BigInt total(static_cast<long long>(all_perfect_matchings(g).size()));
    const BigInt truncated = matching_count_after_deleting(g, cf.entries.at(0));
    if (cf.value() != Rational(total, truncated))
        bad.push_back("continued fraction differs from the matching ratio");

    const Word shape = g.shape();
    const QPolynomial recursive = rank_recursive(shape);
    if (recursive != rank_hook(shape) || recursive != rank_fibonacci(shape) ||
        recursive != lattice_path_poset(g).rank_generating_function())
        bad.push_back("rank formulas disagree");

    const Word d = w.dual();
    const FinitePoset p_w = expansion_poset(ExpansionKind::matchings, w);
    const FinitePoset l_d = expansion_poset(ExpansionKind::lattice_paths, d);
    if (!poset_isomorphic(p_w, l_d, true))
        bad.push_back("matching poset is not weight-isomorphic to the dual path poset");
    const FinitePoset a_w = expansion_poset(ExpansionKind::angle_matchings, w);
    const FinitePoset b_d = expansion_poset(ExpansionKind::angle_paths, d);
    if (!poset_isomorphic(a_w, b_d, true))
        bad.push_back("angle matching poset is not weight-isomorphic to the dual angle path poset");
    FinitePoset t_w = expansion_poset(ExpansionKind::t_paths, w);
    const FinitePoset s_d = expansion_poset(ExpansionKind::edge_walks, d);
    {
        const Laurent scale = diagonal_product(w);
        std::vector<Laurent> scaled;
        scaled.reserve(static_cast<std::size_t>(t_w.size()));
        for (int i = 0; i < t_w.size(); ++i) scaled.push_back(t_w.weight(i) * scale);
        t_w.set_weights(std::move(scaled));
    }
    if (!poset_isomorphic(t_w, s_d, true))
        bad.push_back("t-path poset is not weight-isomorphic (up to the diagonal product) to the dual edge walk poset");
    if (!poset_isomorphic(p_w, fence_poset(w).order_ideals()))
        bad.push_back("matching poset is not the fence's ideal lattice");
    const FinitePoset l_w = expansion_poset(ExpansionKind::lattice_paths, w);
    if (!poset_isomorphic(l_w, fence_poset(d).order_ideals()))
        bad.push_back("path poset is not the dual fence's ideal lattice");

    std::set<Exponents> support;
    for (const auto& [e, c] : expected.terms()) support.insert(e);
    const std::vector<Exponents> orbit =
        support_orbit(expected.terms().begin()->first, word_quiver(w));
    if (std::set<Exponents>(orbit.begin(), orbit.end()) != support)
        bad.push_back("hat-y orbit does not reconstruct the support");

    return bad;
}

struct VerifyOptions {
    std::string word, shape, out;
    int sweep = -1;
    bool have_word = false, have_shape = false;
};

int run_verify(const VerifyOptions& o) {
    std::vector<Word> words;
    if (o.sweep >= 0) {
        if (o.have_word || o.have_shape)
            throw UsageError("--sweep excludes --word/--shape");
        words = all_words_up_to(static_cast<std::size_t>(o.sweep));
    } else {
        words.push_back(resolve_word(o.have_word, o.word, o.have_shape, o.shape));
    }

    std::vector<std::vector<std::string>> failures(words.size());
    std::atomic<std::size_t> next{0};
    const int threads = worker_count(words.size());
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < words.size(); i = next.fetch_add(1)) {
            try {
                failures[i] = verify_word(words[i]);
            } catch (const std::exception& e) {
                failures[i] = {std::string("exception: ") + e.what()};
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    std::ostringstream os;
    std::size_t bad_words = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string label = words[i].empty() ? "(empty)" : words[i].str();
        if (failures[i].empty()) {
            os << "ok   " << label << "\n";
        } else {
            ++bad_words;
            for (const std::string& why : failures[i]) os << "FAIL " << label << ": " << why << "\n";
        }
    }
    os << (bad_words == 0 ? "all checks passed" : "verification failed") << " ("
       << words.size() - bad_words << "/" << words.size() << " words)\n";
    write_output(o.out, os.str());
    return bad_words == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of word-parameterized cluster expansions"};
    app.require_subcommand(1);
    int rc = 0;

    ExpandOptions expand_opts;
    CLI::App* expand = app.add_subcommand("expand", "expansion poset and Laurent value of a word");
    expand->add_option("--word", expand_opts.word, "word over {a,b}");
    expand->add_option("--shape", expand_opts.shape, "snake-graph gluing word");
    expand->add_option("--kind", expand_opts.kind, "P, A, T, L, B, or S");
    expand->add_option("--format", expand_opts.format)->check(CLI::IsMember({"json", "dot", "text"}));
    expand->add_option("--out", expand_opts.out, "write output to a file");
    expand->callback([&] {
        expand_opts.have_word = expand->count("--word") > 0;
        expand_opts.have_shape = expand->count("--shape") > 0;
        rc = run_expand(expand_opts);
    });

    DualOptions dual_opts;
    CLI::App* dual = app.add_subcommand("dual", "dual word and continued fraction duality");
    dual->add_option("--word", dual_opts.word, "word over {a,b}");
    dual->add_option("--shape", dual_opts.shape, "snake-graph gluing word");
    dual->add_option("--format", dual_opts.format)->check(CLI::IsMember({"json", "text"}));
    dual->add_option("--out", dual_opts.out, "write output to a file");
    dual->callback([&] {
        dual_opts.have_word = dual->count("--word") > 0;
        dual_opts.have_shape = dual->count("--shape") > 0;
        rc = run_dual(dual_opts);
    });

    RankOptions rank_opts;
    CLI::App* rank = app.add_subcommand("rank", "rank generating function of a gluing shape");
    rank->add_option("--shape", rank_opts.shape, "snake-graph gluing word")->required();
    rank->add_option("--format", rank_opts.format)->check(CLI::IsMember({"json", "text"}));
    rank->add_option("--out", rank_opts.out, "write output to a file");
    rank->callback([&] { rc = run_rank(rank_opts); });

    CfOptions cf_opts;
    CLI::App* cf = app.add_subcommand("cf", "continued fraction of a word's snake graph");
    cf->add_option("--word", cf_opts.word, "word over {a,b}");
    cf->add_option("--shape", cf_opts.shape, "snake-graph gluing word");
    cf->add_option("--format", cf_opts.format)->check(CLI::IsMember({"json", "text"}));
    cf->add_option("--out", cf_opts.out, "write output to a file");
    cf->callback([&] {
        cf_opts.have_word = cf->count("--word") > 0;
        cf_opts.have_shape = cf->count("--shape") > 0;
        rc = run_cf(cf_opts);
    });

    OrbitOptions orbit_opts;
    CLI::App* orbit = app.add_subcommand("orbit", "swap orbit poset of a gluing shape");
    orbit->add_option("--shape", orbit_opts.shape, "snake-graph gluing word")->required();
    orbit->add_option("--format", orbit_opts.format)->check(CLI::IsMember({"json", "dot", "text"}));
    orbit->add_option("--out", orbit_opts.out, "write output to a file");
    orbit->callback([&] { rc = run_orbit(orbit_opts); });

    SnakeOptions snake_opts;
    CLI::App* snake = app.add_subcommand("snake", "labeled snake graph of a word");
    snake->add_option("--word", snake_opts.word, "word over {a,b}");
    snake->add_option("--shape", snake_opts.shape, "snake-graph gluing word");
    snake->add_option("--format", snake_opts.format)->check(CLI::IsMember({"json", "text"}));
    snake->add_option("--out", snake_opts.out, "write output to a file");
    snake->callback([&] {
        snake_opts.have_word = snake->count("--word") > 0;
        snake_opts.have_shape = snake->count("--shape") > 0;
        rc = run_snake(snake_opts);
    });

    PosetOptions poset_opts;
    CLI::App* poset = app.add_subcommand("poset", "poset structure report");
    poset->add_option("--word", poset_opts.word, "word over {a,b}");
    poset->add_option("--shape", poset_opts.shape, "snake-graph gluing word");
    poset->add_option("--kind", poset_opts.kind, "expansion kind; omit for the ideal lattice");
    poset->add_option("--format", poset_opts.format)->check(CLI::IsMember({"json", "dot", "text"}));
    poset->add_option("--out", poset_opts.out, "write output to a file");
    poset->callback([&] {
        poset_opts.have_word = poset->count("--word") > 0;
        poset_opts.have_shape = poset->count("--shape") > 0;
        rc = run_poset(poset_opts);
    });

    Sl3Options sl3_opts;
    CLI::App* sl3 = app.add_subcommand("sl3", "SL3 fan-polygon diagram expansion");
    sl3->add_option("--size", sl3_opts.size, "polygon size (>= 4)")->required();
    sl3->add_option("--edge", sl3_opts.edge, "directed edge target: FROM TO")->expected(2);
    sl3->add_option("--face", sl3_opts.face, "face target: P Q R")->expected(3);
    sl3->add_option("--format", sl3_opts.format)->check(CLI::IsMember({"json", "dot", "text"}));
    sl3->add_option("--out", sl3_opts.out, "write output to a file");
    sl3->callback([&] { rc = run_sl3(sl3_opts); });

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "cross-formula and oracle equality suite");
    verify->add_option("--word", verify_opts.word, "word over {a,b}");
    verify->add_option("--shape", verify_opts.shape, "snake-graph gluing word");
    verify->add_option("--sweep", verify_opts.sweep, "verify every word up to this length");
    verify->add_option("--out", verify_opts.out, "write output to a file");
    verify->callback([&] {
        verify_opts.have_word = verify->count("--word") > 0;
        verify_opts.have_shape = verify->count("--shape") > 0;
        rc = run_verify(verify_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
