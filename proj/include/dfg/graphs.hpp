#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dfg/shapes.hpp"

namespace dfg {

using Int = boost::multiprecision::cpp_int;

// Sparse formal combination of vertices, keyed by vertex id.
using VertexVector = std::map<int, Int>;

struct TruncationError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

inline std::string key_young(const Partition& p) { return "p:" + join(p); }
inline std::string key_shifted(const StrictPartition& p) { return "s:" + join(p); }
inline std::string key_snake(const Snake& w) { return "f:" + w; }
inline std::string key_poly(int n) { return "x:" + std::to_string(n); }

// Rank-truncated pair of edge multisets on one vertex set. up[x][y] = a1(x,y)
// (loops allowed, rank jump 0 or 1); down[y][x] = a2(x,y) with rank(x) < rank(y).
struct FilteredGraph {
    std::string family;
    std::string construction = "none";
    int max_rank = 0;
    std::vector<std::string> keys;
    std::vector<int> rank;
    std::unordered_map<std::string, int> index;
    std::vector<std::map<int, Int>> up;
    std::vector<std::map<int, Int>> down;

    int size() const { return static_cast<int>(keys.size()); }

    int add_vertex(const std::string& key, int r)
    {
        auto [it, fresh] = index.emplace(key, size());
        if (!fresh) return it->second;
        keys.push_back(key);
        rank.push_back(r);
        up.emplace_back();
        down.emplace_back();
        return it->second;
    }

    int id(const std::string& key) const
    {
        auto it = index.find(key);
        if (it == index.end()) throw std::out_of_range("unknown vertex " + key);
        return it->second;
    }

    void add_up(int x, int y, const Int& m)
    {
        if (m != 0) up[x][y] += m;
    }
    void add_down(int y, int x, const Int& m)
    {
        if (m != 0) down[y][x] += m;
    }

    Int up_mult(const std::string& x, const std::string& y) const { return get(up, id(x), id(y)); }
    Int down_mult(const std::string& y, const std::string& x) const { return get(down, id(y), id(x)); }

    VertexVector unit(const std::string& key) const { return {{id(key), 1}}; }

private:
    static Int get(const std::vector<std::map<int, Int>>& e, int a, int b)
    {
        auto it = e[a].find(b);
        return it == e[a].end() ? Int(0) : it->second;
    }
};

// Empty string when all structural invariants hold, else the first problem.
inline std::string check_invariants(const FilteredGraph& g)
{
    for (int x = 0; x < g.size(); ++x) {
        if (g.rank[x] > g.max_rank) return "vertex above max rank: " + g.keys[x];
        for (const auto& [y, m] : g.up[x]) {
            if (m < 1) return "non-positive up multiplicity at " + g.keys[x];
            int d = g.rank[y] - g.rank[x];
            if (d != 0 && d != 1) return "up edge with rank jump " + std::to_string(d) + " at " + g.keys[x];
            if (d == 0 && y != x) return "up edge within a rank between distinct vertices at " + g.keys[x];
        }
        for (const auto& [y, m] : g.down[x]) {
            if (m < 1) return "non-positive down multiplicity at " + g.keys[x];
            if (g.rank[y] >= g.rank[x]) return "down edge not rank-decreasing at " + g.keys[x];
        }
    }
    return {};
}

// ---- operators -----------------------------------------------------------------

inline VertexVector apply_up(const FilteredGraph& g, const VertexVector& v)
{
    VertexVector out;
    for (const auto& [x, c] : v)
        for (const auto& [y, m] : g.up[x]) out[y] += c * m;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline VertexVector apply_down(const FilteredGraph& g, const VertexVector& v)
{
    VertexVector out;
    for (const auto& [y, c] : v)
        for (const auto& [x, m] : g.down[y]) out[x] += c * m;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline int max_rank_of(const FilteredGraph& g, const VertexVector& v)
{
    int r = 0;
    for (const auto& [x, c] : v) r = std::max(r, g.rank[x]);
    return r;
}

// Highest rank any U in expr can reach, applied right to left.
inline void guard_truncation(const FilteredGraph& g, const std::string& expr, const VertexVector& v)
{
    int ups = 0;
    for (char ch : expr) {
        if (ch == 'U')
            ++ups;
        else if (ch != 'D')
            throw std::invalid_argument(std::string("operator expressions use only U and D, got ") + ch);
    }
    if (max_rank_of(g, v) + ups > g.max_rank)
        throw TruncationError("expression " + expr + " would cross the truncation rank " +
                              std::to_string(g.max_rank));
}

inline VertexVector apply_operator(const FilteredGraph& g, const std::string& expr, VertexVector v)
{
    guard_truncation(g, expr, v);
    for (auto it = expr.rbegin(); it != expr.rend(); ++it) v = *it == 'U' ? apply_up(g, v) : apply_down(g, v);
    return v;
}

// ---- duality --------------------------------------------------------------------

struct DualityReport {
    int alpha = 1;
    int beta = 1;
    int checked_max_rank = 0;
    int checked = 0;
    // Nonzero residuals (DU - UD - beta D - alpha I) x, keyed by vertex id.
    std::map<int, VertexVector> residual;
    bool ok = true;
};

inline DualityReport verify_duality(const FilteredGraph& g, int alpha = 1, int beta = 1, int max_check = -1)
{
    DualityReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.checked_max_rank = max_check < 0 ? g.max_rank - 1 : std::min(max_check, g.max_rank - 1);
    for (int x = 0; x < g.size(); ++x) {
        if (g.rank[x] > rep.checked_max_rank) continue;
        ++rep.checked;
        VertexVector e{{x, 1}};
        VertexVector dx = apply_down(g, e);
        VertexVector r = apply_down(g, apply_up(g, e));
        for (const auto& [y, c] : apply_up(g, dx)) r[y] -= c;
        for (const auto& [y, c] : dx) r[y] -= beta * c;
        r[x] -= alpha;
        std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
        if (!r.empty()) {
            rep.ok = false;
            rep.residual[x] = std::move(r);
        }
    }
    return rep;
}

// ---- base lattices -----------------------------------------------------------------

namespace detail {
inline Int binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Fillings of the border strip mu/nu with k and k' under the usual rules:
// weak rows and columns (k' < k), at most one k' per row, at most one k per
// column, no k' on the diagonal.
inline long long count_strip_fillings(const StrictPartition& mu, const StrictPartition& nu)
{
    if (!shifted_contains(mu, nu)) return 0;
    const CellSet s = skew_cells(shifted_cells(mu), shifted_cells(nu));
    const std::vector<Cell> cells(s.begin(), s.end());
    const int n = static_cast<int>(cells.size());
    if (n > 24) throw std::length_error("strip too large to enumerate");
    long long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::map<Cell, bool> primed;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            primed[cells[i]] = (mask >> i) & 1u;
            if (primed[cells[i]] && cells[i].row == cells[i].col) ok = false;
        }
        std::map<int, int> primes_in_row, plain_in_col;
        for (int i = 0; i < n && ok; ++i) {
            const Cell c = cells[i];
            const bool p = primed[c];
            if (p) ++primes_in_row[c.row];
            else ++plain_in_col[c.col];
            // weak increase: a k' may not sit right of or below a k
            if (auto l = primed.find({c.row, c.col - 1}); l != primed.end() && p && !l->second) ok = false;
            if (auto a = primed.find({c.row - 1, c.col}); a != primed.end() && p && !a->second) ok = false;
        }
        for (const auto& [r, k] : primes_in_row)
            if (k > 1) ok = false;
        for (const auto& [c, k] : plain_in_col)
            if (k > 1) ok = false;
        if (ok) ++count;
    }
    return count;
}

// Words obtainable from wp by deleting at least one 1, with multiplicity.
inline std::map<Snake, long long> one_deletions(const Snake& wp)
{
    std::vector<int> ones;
    for (int i = 0; i < static_cast<int>(wp.size()); ++i)
        if (wp[i] == '1') ones.push_back(i);
    std::map<Snake, long long> out;
    const int m = static_cast<int>(ones.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        Snake w;
        for (int i = 0, k = 0; i < static_cast<int>(wp.size()); ++i) {
            if (k < m && ones[k] == i) {
                if ((mask >> k++) & 1u) continue;
            }
            w += wp[i];
        }
        ++out[w];
    }
    return out;
}

inline std::vector<Snake> fibonacci_up(const Snake& w)
{
    std::vector<Snake> out{w + "1"};
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == '1') {
            Snake v = w;
            v[i] = '2';
            out.push_back(v);
        }
    return out;
}
}  // namespace detail

enum class Family { young, shifted, yf, fibonacci };

inline Family parse_family(const std::string& s)
{
    if (s == "young") return Family::young;
    if (s == "shifted") return Family::shifted;
    if (s == "yf") return Family::yf;
    if (s == "fibonacci") return Family::fibonacci;
    throw std::invalid_argument("unknown family " + s);
}

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::young: return "young";
    case Family::shifted: return "shifted";
    case Family::yf: return "yf";
    case Family::fibonacci: return "fibonacci";
    }
    return "";
}

// Undeformed dual graded graphs. Up edges only leave vertices below max_rank.
inline FilteredGraph build_dual_graded(Family f, int max_rank)
{
    if (max_rank < 0) throw std::invalid_argument("max_rank must be non-negative");
    FilteredGraph g;
    g.family = family_name(f);
    g.max_rank = max_rank;
    switch (f) {
    case Family::young:
        for (int n = 0; n <= max_rank; ++n)
            for (const auto& p : partitions_of(n)) g.add_vertex(key_young(p), n);
        for (int n = 0; n < max_rank; ++n)
            for (const auto& p : partitions_of(n))
                for (const auto& q : young_up(p)) {
                    g.add_up(g.id(key_young(p)), g.id(key_young(q)), 1);
                    g.add_down(g.id(key_young(q)), g.id(key_young(p)), 1);
                }
        break;
    case Family::shifted:
        for (int n = 0; n <= max_rank; ++n)
            for (const auto& p : strict_partitions_of(n)) g.add_vertex(key_shifted(p), n);
        for (int n = 0; n < max_rank; ++n)
            for (const auto& p : strict_partitions_of(n))
                for (const auto& c : shifted_up(p)) {
                    g.add_up(g.id(key_shifted(p)), g.id(key_shifted(c.shape)), 1);
                    g.add_down(g.id(key_shifted(c.shape)), g.id(key_shifted(p)), c.diagonal ? 1 : 2);
                }
        break;
    case Family::yf:
        for (int n = 0; n <= max_rank; ++n)
            for (const auto& w : snakes_of(n)) g.add_vertex(key_snake(w), n);
        for (int n = 0; n < max_rank; ++n)
            for (const auto& w : snakes_of(n))
                for (const auto& v : snake_up(w)) {
                    g.add_up(g.id(key_snake(w)), g.id(key_snake(v)), 1);
                    g.add_down(g.id(key_snake(v)), g.id(key_snake(w)), 1);
                }
        break;
    case Family::fibonacci:
        for (int n = 0; n <= max_rank; ++n)
            for (const auto& w : snakes_of(n)) g.add_vertex(key_snake(w), n);
        for (int n = 0; n < max_rank; ++n)
            for (const auto& w : snakes_of(n))
                for (const auto& v : detail::fibonacci_up(w)) g.add_up(g.id(key_snake(w)), g.id(key_snake(v)), 1);
        for (int n = 1; n <= max_rank; ++n)
            for (const auto& wp : snakes_of(n))
                for (std::size_t i = 0; i < wp.size(); ++i)
                    if (wp[i] == '1') {
                        Snake w = wp.substr(0, i) + wp.substr(i + 1);
                        g.add_down(g.id(key_snake(wp)), g.id(key_snake(w)), 1);
                    }
        break;
    }
    return g;
}

// Exchange the roles of the two edge sets of a dual graded graph.
inline FilteredGraph swap_roles(const FilteredGraph& g)
{
    FilteredGraph s = g;
    s.construction = "swapped";
    for (auto& m : s.up) m.clear();
    for (auto& m : s.down) m.clear();
    for (int x = 0; x < g.size(); ++x)
        for (const auto& [y, m] : g.up[x]) s.add_down(y, x, m);
    for (int y = 0; y < g.size(); ++y)
        for (const auto& [x, m] : g.down[y]) s.add_up(x, y, m);
    return s;
}

// ---- Möbius function ---------------------------------------------------------------

// Möbius function of the poset generated by the non-loop up edges, memoized
// per lower element.
class MobiusTable {
public:
    explicit MobiusTable(const FilteredGraph& g) : g_(g), below_(g.size())
    {
        order_.resize(g.size());
        for (int i = 0; i < g.size(); ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.rank[a] < g.rank[b]; });
        for (int x = 0; x < g.size(); ++x)
            for (const auto& [y, m] : g.up[x])
                if (y != x) below_[y].push_back(x);
        leq_.assign(g.size(), std::vector<char>(g.size(), 0));
        for (int y : order_) {
            leq_[y][y] = 1;
            for (int z : below_[y])
                for (int x = 0; x < g.size(); ++x)
                    if (leq_[z][x]) leq_[y][x] = 1;
        }
    }

    bool less_equal(int x, int y) const { return leq_[y][x] != 0; }

    const std::vector<int>& lower_covers(int y) const { return below_[y]; }

    // mu(x, y); incomparable pairs give 0.
    Int operator()(int x, int y)
    {
        if (!less_equal(x, y)) return 0;
        const auto& row = values_for(x);
        auto it = row.find(y);
        return it == row.end() ? Int(0) : it->second;
    }

private:
    const std::map<int, Int>& values_for(int x)
    {
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        std::map<int, Int> mu;
        mu[x] = 1;
        for (int y : order_) {
            if (y == x || !less_equal(x, y)) continue;
            Int s = 0;
            for (const auto& [z, v] : mu)
                if (less_equal(z, y)) s += v;
            // only nonzero values are kept, which keeps the sums short
            if (s != 0) mu[y] = -s;
        }
        return cache_.emplace(x, std::move(mu)).first->second;
    }

    const FilteredGraph& g_;
    std::vector<std::vector<int>> below_;
    std::vector<int> order_;
    std::vector<std::vector<char>> leq_;
    std::map<int, std::map<int, Int>> cache_;
};

// ---- constructions -------------------------------------------------------------------

inline FilteredGraph trivial_construction(const FilteredGraph& g)
{
    FilteredGraph t = g;
    t.construction = "trivial";
    for (int x = 0; x < t.size(); ++x) t.add_up(x, x, t.rank[x]);
    return t;
}

// Up edges keep the covers and gain, at each y, one loop per covered element
// counted with edge multiplicity; down edges are |mu(x, y)| for all x < y.
inline FilteredGraph mobius_construction(const FilteredGraph& g)
{
    FilteredGraph m = g;
    m.construction = "mobius";
    for (auto& d : m.down) d.clear();
    std::vector<Int> covered(g.size());
    for (int x = 0; x < g.size(); ++x)
        for (const auto& [y, k] : g.up[x])
            if (y != x) covered[y] += k;
    for (int y = 0; y < g.size(); ++y) m.add_up(y, y, covered[y]);
    MobiusTable mu(g);
    for (int y = 0; y < g.size(); ++y)
        for (int x = 0; x < g.size(); ++x)
            if (x != y && mu.less_equal(x, y)) m.add_down(y, x, abs(mu(x, y)));
    return m;
}

inline FilteredGraph pieri_young(int max_rank)
{
    FilteredGraph g = build_dual_graded(Family::young, max_rank);
    g.construction = "pieri";
    for (auto& d : g.down) d.clear();
    for (int n = 1; n <= max_rank; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = 0; k < n; ++k)
                for (const auto& nu : partitions_of(k))
                    if (is_horizontal_strip(mu, nu)) g.add_down(g.id(key_young(mu)), g.id(key_young(nu)), 1);
    return g;
}

// With swapped = true this is the variant whose up edges are doubled off the
// diagonal and whose down multiplicities are halved in the P basis; it
// satisfies DU - UD = 2D + I.
inline FilteredGraph pieri_shifted(int max_rank, bool swapped = false)
{
    FilteredGraph g = build_dual_graded(Family::shifted, max_rank);
    if (swapped) g = swap_roles(g);
    g.construction = swapped ? "pieri-swapped" : "pieri";
    for (auto& d : g.down) d.clear();
    for (int n = 1; n <= max_rank; ++n)
        for (const auto& mu : strict_partitions_of(n))
            for (int k = 0; k < n; ++k)
                for (const auto& nu : strict_partitions_of(k)) {
                    if (!is_border_strip(mu, nu)) continue;
                    Int f = detail::count_strip_fillings(mu, nu);
                    if (f == 0) continue;
                    if (swapped) {
                        // coefficient of P_mu in f P_nu, halved
                        f <<= static_cast<unsigned>(mu.size() - nu.size());
                        if (f % 2 != 0) throw std::logic_error("odd multiplicity in swapped shifted Pieri graph");
                        f /= 2;
                    }
                    g.add_down(g.id(key_shifted(mu)), g.id(key_shifted(nu)), f);
                }
    return g;
}

inline FilteredGraph pieri_fibonacci(int max_rank)
{
    FilteredGraph g = build_dual_graded(Family::fibonacci, max_rank);
    g.construction = "pieri";
    for (auto& d : g.down) d.clear();
    for (int n = 1; n <= max_rank; ++n)
        for (const auto& wp : snakes_of(n))
            for (const auto& [w, k] : detail::one_deletions(wp)) g.add_down(g.id(key_snake(wp)), g.id(key_snake(w)), k);
    return g;
}

// U = multiplication by x, D = e^{d/dx} - 1 on monomials.
inline FilteredGraph polynomial_graph(int max_rank)
{
    FilteredGraph g;
    g.family = "polynomial";
    g.construction = "none";
    g.max_rank = max_rank;
    for (int n = 0; n <= max_rank; ++n) g.add_vertex(key_poly(n), n);
    for (int n = 0; n < max_rank; ++n) g.add_up(n, n + 1, 1);
    for (int n = 1; n <= max_rank; ++n)
        for (int k = 0; k < n; ++k) g.add_down(n, k, detail::binomial(n, k));
    return g;
}

// (alpha, beta) in DU - UD = beta D + alpha I for a named construction.
inline std::pair<int, int> duality_parameters(const std::string& construction)
{
    if (construction == "none") return {1, 0};
    if (construction == "pieri-swapped") return {1, 2};
    return {1, 1};
}

// Named constructions used by the CLI and the identity checks. The shifted
// Möbius deformation starts from the swapped shifted lattice.
inline FilteredGraph build_graph(const std::string& family, const std::string& construction, int max_rank)
{
    if (family == "polynomial") {
        if (construction != "none" && construction != "pieri")
            throw std::invalid_argument("the polynomial graph has no " + construction + " construction");
        return polynomial_graph(max_rank);
    }
    const Family f = parse_family(family);
    if (construction == "none") return build_dual_graded(f, max_rank);
    if (construction == "trivial") return trivial_construction(build_dual_graded(f, max_rank));
    if (construction == "mobius") {
        FilteredGraph base = build_dual_graded(f, max_rank);
        if (f == Family::shifted) base = swap_roles(base);
        return mobius_construction(base);
    }
    if (construction == "pieri") {
        if (f == Family::young) return pieri_young(max_rank);
        if (f == Family::shifted) return pieri_shifted(max_rank);
        if (f == Family::fibonacci) return pieri_fibonacci(max_rank);
        throw std::invalid_argument("no pieri construction for the yf lattice");
    }
    if (construction == "pieri-swapped" && f == Family::shifted) return pieri_shifted(max_rank, true);
    throw std::invalid_argument("unknown construction " + construction + " for " + family);
}

}  // namespace dfg
