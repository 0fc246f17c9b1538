#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfg/graphs.hpp"
#include "dfg/shapes.hpp"

namespace dfg {

// T(n, k) = k! S(n, k), surjections from [n] onto [k].
inline Int stirling_surjection(int n, int k)
{
    if (n < 0 || k < 0) throw std::invalid_argument("negative argument");
    std::vector<std::vector<Int>> t(n + 1, std::vector<Int>(k + 1, 0));
    t[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) t[i][j] = j * (t[i - 1][j - 1] + t[i - 1][j]);
    return t[n][k];
}

// Ordered set partitions of [n].
inline Int fubini(int n)
{
    Int s = 0;
    for (int k = 0; k <= n; ++k) s += stirling_surjection(n, k);
    return s;
}

// Set partitions of [n] whose blocks all have size at least 2, counted by
// walking restricted growth strings.
inline Int partitions_min_part_2(int n)
{
    if (n < 0) throw std::invalid_argument("negative argument");
    if (n > 14) throw std::length_error("n too large for exhaustive enumeration");
    Int count = 0;
    std::vector<int> block_size;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            for (int s : block_size)
                if (s < 2) return;
            ++count;
            return;
        }
        // prune: too many singletons left to fill
        int deficit = 0;
        for (int s : block_size)
            if (s < 2) deficit += 2 - s;
        if (deficit > n - i) return;
        for (std::size_t b = 0; b < block_size.size(); ++b) {
            ++block_size[b];
            rec(i + 1);
            --block_size[b];
        }
        block_size.push_back(1);
        rec(i + 1);
        block_size.pop_back();
    };
    rec(0);
    return count;
}

constexpr int kTableauCap = 8;

// Initial increasing tableaux of shape lam: strictly increasing rows and
// columns whose entries are exactly 1..m for some m.
inline Int count_increasing_tableaux(const Partition& lam)
{
    const int n = size(lam);
    if (n > kTableauCap) throw std::length_error("shape too large for exhaustive search");
    if (n == 0) return 1;
    const CellSet cell_set = young_cells(lam);
    std::vector<Cell> cells(cell_set.begin(), cell_set.end());
    std::vector<std::vector<int>> fill(lam.size());
    for (std::size_t r = 0; r < lam.size(); ++r) fill[r].assign(lam[r], 0);
    Int count = 0;
    std::vector<int> used(n + 2, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            int m = 0;
            while (m + 1 <= n && used[m + 1]) ++m;
            for (int v = m + 1; v <= n; ++v)
                if (used[v]) return;
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 1;
        if (c > 1) lo = std::max(lo, fill[r - 1][c - 2] + 1);
        if (r > 1) lo = std::max(lo, fill[r - 2][c - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[r - 1][c - 1] = v;
            ++used[v];
            rec(k + 1);
            --used[v];
        }
        fill[r - 1][c - 1] = 0;
    };
    rec(0);
    return count;
}

// Standard set-valued tableaux of shape lam with labels exactly 1..n. Labels
// are placed in increasing order; once a cell is occupied, its left and upper
// neighbours are closed to further labels.
inline Int count_set_valued(const Partition& lam, int n)
{
    const int cells_n = size(lam);
    if (n > kTableauCap || cells_n > kTableauCap) throw std::length_error("too large for exhaustive search");
    if (cells_n > n) return 0;
    const CellSet cell_set = young_cells(lam);
    std::vector<Cell> cells(cell_set.begin(), cell_set.end());
    auto idx = [&](int r, int c) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].row == r && cells[i].col == c) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> left(cells.size()), above(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        left[i] = idx(cells[i].row, cells[i].col - 1);
        above[i] = idx(cells[i].row - 1, cells[i].col);
    }
    std::vector<int> filled(cells.size(), 0), closed(cells.size(), 0);
    Int count = 0;
    int empty = cells_n;
    std::function<void(int)> rec = [&](int label) {
        if (n - label + 1 < empty) return;
        if (label > n) {
            if (empty == 0) ++count;
            return;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (closed[i]) continue;
            if (!filled[i]) {
                if (left[i] >= 0 && !filled[left[i]]) continue;
                if (above[i] >= 0 && !filled[above[i]]) continue;
                if (left[i] >= 0) ++closed[left[i]];
                if (above[i] >= 0) ++closed[above[i]];
                filled[i] = 1;
                --empty;
                rec(label + 1);
                ++empty;
                filled[i] = 0;
                if (left[i] >= 0) --closed[left[i]];
                if (above[i] >= 0) --closed[above[i]];
            } else {
                rec(label + 1);
            }
        }
    };
    rec(1);
    return count;
}

inline Int frobenius_young_sum(int n)
{
    Int s = 0;
    for (int m = 0; m <= n; ++m)
        for (const auto& lam : partitions_of(m)) s += count_increasing_tableaux(lam) * count_set_valued(lam, n);
    return s;
}

inline int empty_vertex(const FilteredGraph& g)
{
    for (int x = 0; x < g.size(); ++x)
        if (g.rank[x] == 0) return x;
    throw std::logic_error("graph has no rank-zero vertex");
}

// Coefficient of the empty vertex in D^k U^n applied to it.
inline Int coefficient_of_empty(const FilteredGraph& g, int k, int n)
{
    const int e = empty_vertex(g);
    VertexVector v = apply_operator(g, std::string(k, 'D') + std::string(n, 'U'), {{e, 1}});
    auto it = v.find(e);
    return it == v.end() ? Int(0) : it->second;
}

// Coefficient of the empty vertex in (D + U)^n applied to it.
inline Int coefficient_of_empty_sum(const FilteredGraph& g, int n)
{
    const int e = empty_vertex(g);
    if (n > g.max_rank) throw TruncationError("(D+U)^n needs max_rank >= n");
    VertexVector v{{e, 1}};
    for (int i = 0; i < n; ++i) {
        VertexVector next = apply_up(g, v);
        for (const auto& [x, c] : apply_down(g, v)) next[x] += c;
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        v = std::move(next);
    }
    auto it = v.find(e);
    return it == v.end() ? Int(0) : it->second;
}

struct IdentityRow {
    std::string parameter;
    Int graph_side;
    Int oracle;
};

struct IdentityReport {
    std::string name;
    int n_max = 0;
    std::vector<IdentityRow> rows;
    bool ok = true;
};

// Named identities: "stirling", "frobenius-young", "oscillating". The graph
// is ignored for frobenius-young.
inline IdentityReport check_identity(const std::string& name, int n_max, const FilteredGraph* g)
{
    IdentityReport rep{name, n_max, {}, true};
    auto add = [&](std::string p, Int a, Int b) {
        if (a != b) rep.ok = false;
        rep.rows.push_back({std::move(p), std::move(a), std::move(b)});
    };
    if (name == "stirling") {
        if (!g) throw std::invalid_argument("stirling needs a graph");
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k)
                add("n=" + std::to_string(n) + " k=" + std::to_string(k), coefficient_of_empty(*g, k, n),
                    stirling_surjection(n, k));
    } else if (name == "frobenius-young") {
        for (int n = 1; n <= n_max; ++n) add("n=" + std::to_string(n), frobenius_young_sum(n), fubini(n));
    } else if (name == "oscillating") {
        if (!g) throw std::invalid_argument("oscillating needs a graph");
        for (int n = 0; n <= n_max; ++n)
            add("n=" + std::to_string(n), coefficient_of_empty_sum(*g, n), partitions_min_part_2(n));
    } else {
        throw std::invalid_argument("unknown identity " + name);
    }
    return rep;
}

}  // namespace dfg
