#include "subpoly/graph.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace subpoly {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > max_vertices)
        throw capacity_error("graph order " + std::to_string(n) + " outside [1," +
                             std::to_string(max_vertices) + "]");
}

int Graph::edge_index(int i, int j) {
    if (i == j) throw std::invalid_argument("loops not supported");
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    edges_ |= std::uint64_t(1) << edge_index(i, j);
}

void Graph::remove_edge(int i, int j) {
    edges_ &= ~(std::uint64_t(1) << edge_index(i, j));
}

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    return (edges_ >> edge_index(i, j)) & 1;
}

int Graph::edge_count() const { return __builtin_popcountll(edges_); }

int Graph::degree(int v) const { return __builtin_popcount(neighbors(v)); }

std::uint32_t Graph::neighbors(int v) const {
    std::uint32_t m = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) m |= 1u << u;
    return m;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (neighbors(v) == 0) return true;
    return false;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    std::uint64_t all = (n * (n - 1) / 2 == 64) ? ~std::uint64_t(0)
                                                : (std::uint64_t(1) << (n * (n - 1) / 2)) - 1;
    if (mask & ~all) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
    g.edges_ = mask;
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    if (n < 2) throw std::invalid_argument("path needs >= 2 vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph Graph::complete_minus_edge(int n) {
    if (n < 2) throw std::invalid_argument("need >= 2 vertices");
    Graph g = complete(n);
    g.remove_edge(0, 1);
    return g;
}

Graph Graph::induced(std::uint32_t vertex_mask) const {
    std::array<int, max_vertices> verts{};
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1) verts[k++] = v;
    Graph h(k);
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i)
            if (has_edge(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

std::string Graph::to_graph6() const {
    std::string out;
    out.push_back(static_cast<char>(n_ + 63));
    int nbits = n_ * (n_ - 1) / 2;
    for (int start = 0; start < nbits; start += 6) {
        int chunk = 0;
        for (int b = 0; b < 6; ++b) {
            int idx = start + b;
            int bit = (idx < nbits) ? int((edges_ >> idx) & 1) : 0;
            chunk = (chunk << 1) | bit;
        }
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

Graph Graph::from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    int n = s[0] - 63;
    if (n < 1 || n > max_vertices)
        throw capacity_error("graph6 order " + std::to_string(n) + " unsupported");
    int nbits = n * (n - 1) / 2;
    int need = 1 + (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != need)
        throw std::invalid_argument("graph6 string has wrong length");
    std::uint64_t mask = 0;
    for (int idx = 0; idx < nbits; ++idx) {
        int c = s[1 + idx / 6] - 63;
        if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 character");
        int bit = (c >> (5 - idx % 6)) & 1;
        if (bit) mask |= std::uint64_t(1) << idx;
    }
    return from_edge_mask(n, mask);
}

Graph Graph::parse(const std::string& token) {
    auto all_digits = [](const std::string& t) {
        return !t.empty() &&
               std::all_of(t.begin(), t.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    if (token.size() >= 2 && (token[0] == 'K' || token[0] == 'C' || token[0] == 'P')) {
        std::string rest = token.substr(1);
        if (token[0] == 'K') {
            auto dash = rest.find("-e");
            auto comma = rest.find(',');
            if (dash != std::string::npos && dash + 2 == rest.size() &&
                all_digits(rest.substr(0, dash)))
                return complete_minus_edge(std::stoi(rest.substr(0, dash)));
            if (comma != std::string::npos && all_digits(rest.substr(0, comma)) &&
                all_digits(rest.substr(comma + 1)))
                return complete_bipartite(std::stoi(rest.substr(0, comma)),
                                          std::stoi(rest.substr(comma + 1)));
            if (all_digits(rest)) return complete(std::stoi(rest));
        } else if (all_digits(rest)) {
            return token[0] == 'C' ? cycle(std::stoi(rest)) : path(std::stoi(rest));
        }
    }
    return from_graph6(token);
}

namespace {

// Shared permutation scan: visits every bijection [n]->[n] that maps edges of
// `a` onto edges of `b`, pruned by degree compatibility.
template <typename OnHit>
void scan_edge_preserving_bijections(const Graph& a, const Graph& b, OnHit&& on_hit) {
    int n = a.n();
    std::array<int, Graph::max_vertices> map{};
    std::array<bool, Graph::max_vertices> used{};
    map.fill(-1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            on_hit();
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || b.degree(w) < a.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) && !b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            used[w] = true;
            map[v] = w;
            self(self, v + 1);
            used[w] = false;
            map[v] = -1;
        }
    };
    rec(rec, 0);
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    // Equal edge counts make any edge-preserving bijection an isomorphism.
    bool found = false;
    scan_edge_preserving_bijections(a, b, [&] { found = true; });
    return found;
}

long long automorphism_count(const Graph& f) {
    if (f.n() > 8) throw capacity_error("automorphism scan limited to 8 vertices");
    long long count = 0;
    scan_edge_preserving_bijections(f, f, [&] { ++count; });
    return count;
}

namespace {

// Injective edge-preserving embeddings of f into g, backtracking with degree
// pruning; host neighborhoods consulted through bitmasks.
long long count_injective_embeddings(const Graph& f, const Graph& g) {
    int nf = f.n(), ng = g.n();
    if (nf > ng) return 0;

    // Map f's vertices in order of decreasing degree so constrained choices
    // come first.
    std::array<int, Graph::max_vertices> order{};
    std::iota(order.begin(), order.begin() + nf, 0);
    std::sort(order.begin(), order.begin() + nf,
              [&](int x, int y) { return f.degree(x) > f.degree(y); });

    std::array<std::uint32_t, Graph::max_vertices> g_nbr{};
    for (int v = 0; v < ng; ++v) g_nbr[v] = g.neighbors(v);

    std::array<int, Graph::max_vertices> map{};
    long long hits = 0;
    std::uint32_t all = (1u << ng) - 1;

    auto rec = [&](auto&& self, int step, std::uint32_t used) -> void {
        if (step == nf) {
            ++hits;
            return;
        }
        int v = order[step];
        // Candidates: unused host vertices adjacent to every already-placed
        // neighbor of v.
        std::uint32_t cand = all & ~used;
        for (int s = 0; s < step; ++s) {
            int u = order[s];
            if (f.has_edge(u, v)) cand &= g_nbr[map[u]];
        }
        int dv = f.degree(v);
        while (cand) {
            int w = __builtin_ctz(cand);
            cand &= cand - 1;
            if (g.degree(w) < dv) continue;
            map[v] = w;
            self(self, step + 1, used | (1u << w));
        }
    };
    rec(rec, 0, 0);
    return hits;
}

}  // namespace

long long count_subgraphs(const Graph& f, const Graph& g) {
    if (f.n() > g.n()) return 0;
    long long emb = count_injective_embeddings(f, g);
    long long aut = automorphism_count(f);
    if (emb % aut != 0) throw std::logic_error("embedding count not divisible by |Aut|");
    return emb / aut;
}

Int count_in_complete(const Graph& f, int m) {
    if (f.n() > m) return 0;
    Int perms = factorial(f.n()) / automorphism_count(f);
    return perms * binomial(m, f.n());
}

Rat density(const Graph& f, const Graph& g) {
    if (f.n() > g.n()) return 0;
    Int total = count_in_complete(f, g.n());
    return Rat(Int(count_subgraphs(f, g)), total);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw capacity_error("exhaustive enumeration limited to n <= 7");
    std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) fn(Graph::from_edge_mask(n, mask));
}

Graph turan_graph(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("turan_graph needs 1 <= k <= n");
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (i % k != j % k) g.add_edge(i, j);
    return g;
}

GraphVector::GraphVector(std::vector<Graph> patterns, bool allow_isolated)
    : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw std::invalid_argument("pattern list is empty");
    for (const auto& f : patterns_) {
        if (f.edge_count() == 0)
            throw std::invalid_argument("pattern with no edges not allowed");
        if (!allow_isolated && f.has_isolated_vertex())
            throw std::invalid_argument("pattern has an isolated vertex");
    }
    for (size_t i = 0; i < patterns_.size(); ++i)
        for (size_t j = i + 1; j < patterns_.size(); ++j)
            if (isomorphic(patterns_[i], patterns_[j]))
                throw std::invalid_argument("patterns must be pairwise non-isomorphic");
    for (const auto& f : patterns_) {
        edge_counts_.push_back(f.edge_count());
        names_.push_back(f.to_graph6());
    }
}

GraphVector GraphVector::parse(const std::string& list, bool allow_isolated) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : list) {
        if (c == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    tokens.push_back(cur);
    // Re-join "K2","3" into "K2,3".
    std::vector<std::string> merged;
    for (const auto& t : tokens) {
        bool digits = !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) {
                          return std::isdigit(c);
                      });
        if (digits && !merged.empty() && merged.back().size() >= 2 &&
            merged.back()[0] == 'K')
            merged.back() += "," + t;
        else
            merged.push_back(t);
    }
    std::vector<Graph> pats;
    std::vector<std::string> given;
    for (const auto& t : merged) {
        if (t.empty()) throw std::invalid_argument("empty pattern token");
        pats.push_back(Graph::parse(t));
        given.push_back(t);
    }
    GraphVector gv(std::move(pats), allow_isolated);
    gv.names_ = given;
    return gv;
}

int GraphVector::max_order() const {
    int m = 0;
    for (const auto& f : patterns_) m = std::max(m, f.n());
    return m;
}

std::vector<long long> stat_vector_lattice(const GraphVector& fs, const Graph& g) {
    std::vector<long long> out;
    out.reserve(fs.size());
    for (const auto& f : fs.patterns()) out.push_back(count_subgraphs(f, g));
    return out;
}

std::vector<Rat> stat_vector_density(const GraphVector& fs, const Graph& g) {
    std::vector<Rat> out;
    out.reserve(fs.size());
    for (const auto& f : fs.patterns()) out.push_back(density(f, g));
    return out;
}

std::vector<long long> subgraph_count_table(const Graph& f) {
    int k = f.n();
    std::uint64_t total = std::uint64_t(1) << (k * (k - 1) / 2);
    std::vector<long long> table(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        table[mask] = count_subgraphs(f, Graph::from_edge_mask(k, mask));
    return table;
}

long long count_subgraphs_in_host(const Graph& f, const std::vector<long long>& table,
                                  const std::vector<std::uint32_t>& host_adj) {
    int m = static_cast<int>(host_adj.size());
    int k = f.n();
    if (k > m) return 0;
    if (m > 32) throw capacity_error("host limited to 32 vertices");
    // Sum of t^L(F, G[S]) over all k-subsets S; every copy of F lands in
    // exactly the subset equal to its vertex set.
    long long total = 0;
    std::vector<int> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        int bit = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((host_adj[sel[j]] >> sel[i]) & 1) mask |= std::uint64_t(1) << bit;
        total += table[mask];
        // next combination
        int pos = k - 1;
        while (pos >= 0 && sel[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++sel[pos];
        for (int q = pos + 1; q < k; ++q) sel[q] = sel[q - 1] + 1;
    }
    return total;
}

}  // namespace subpoly
