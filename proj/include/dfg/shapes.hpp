#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dfg {

// Partitions and strict partitions share a representation: weakly (resp.
// strictly) decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;
using StrictPartition = std::vector<int>;
// Snakeshapes are words over {1,2}, leftmost column first.
using Snake = std::string;

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;

inline int size(const Partition& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline int part(const Partition& p, int i)
{
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i - 1] < p[i]) return false;
    }
    return true;
}

inline bool is_strict(const StrictPartition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i - 1] <= p[i]) return false;
    }
    return true;
}

inline bool is_snake(const Snake& w)
{
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '1' || c == '2'; });
}

inline int snake_rank(const Snake& w)
{
    int r = 0;
    for (char c : w) r += c - '0';
    return r;
}

// ---- cells ---------------------------------------------------------------

inline CellSet young_cells(const Partition& p)
{
    CellSet s;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 1; j <= p[i - 1]; ++j) s.insert({i, j});
    return s;
}

inline CellSet shifted_cells(const StrictPartition& p)
{
    CellSet s;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        for (int j = 0; j < p[i - 1]; ++j) s.insert({i, i + j});
    return s;
}

// Row lengths of a cell set, ordered by row. Works for both embeddings.
inline Partition shape_from_cells(const CellSet& cells)
{
    Partition out;
    int cur = 0;
    for (const Cell& c : cells) {
        if (c.row != cur) {
            cur = c.row;
            out.push_back(0);
        }
        ++out.back();
    }
    return out;
}

inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

// In the shifted embedding row i starts at column i in both shapes, so
// containment is the same rowwise comparison.
inline bool shifted_contains(const StrictPartition& outer, const StrictPartition& inner)
{
    return contains(outer, inner);
}

inline CellSet skew_cells(const CellSet& outer, const CellSet& inner)
{
    CellSet s;
    std::set_difference(outer.begin(), outer.end(), inner.begin(), inner.end(),
                        std::inserter(s, s.end()));
    return s;
}

inline Partition add_to_row(Partition p, int i)
{
    if (i == static_cast<int>(p.size()) + 1)
        p.push_back(1);
    else
        ++p[i - 1];
    return p;
}

inline Partition remove_from_row(Partition p, int i)
{
    --p[i - 1];
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Last row of the shifted shape meeting column j, or 0 if none.
inline int shifted_col_bottom(const StrictPartition& p, int j)
{
    int b = 0;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        if (i <= j && j <= i + p[i - 1] - 1) b = i;
    return b;
}

// ---- enumeration of vertices ----------------------------------------------

namespace detail {
inline void partitions_rec(int n, int maxp, bool strict, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, strict ? p - 1 : p, strict, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// Partitions of n in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    detail::partitions_rec(n, n, false, cur, out);
    return out;
}

inline std::vector<StrictPartition> strict_partitions_of(int n)
{
    std::vector<StrictPartition> out;
    Partition cur;
    detail::partitions_rec(n, n, true, cur, out);
    return out;
}

inline std::vector<Snake> snakes_of(int n)
{
    if (n == 0) return {""};
    std::vector<Snake> out;
    for (const Snake& w : snakes_of(n - 1)) out.push_back("1" + w);
    if (n >= 2)
        for (const Snake& w : snakes_of(n - 2)) out.push_back("2" + w);
    return out;
}

// ---- Young's lattice -------------------------------------------------------

inline std::vector<Partition> young_up(const Partition& p)
{
    std::vector<Partition> out;
    for (int i = 1; i <= static_cast<int>(p.size()) + 1; ++i)
        if (i == 1 || part(p, i - 1) > part(p, i)) out.push_back(add_to_row(p, i));
    return out;
}

inline std::vector<Partition> young_down(const Partition& p)
{
    std::vector<Partition> out;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        if (part(p, i) > part(p, i + 1)) out.push_back(remove_from_row(p, i));
    return out;
}

inline bool covers_young(const Partition& lam, const Partition& mu)
{
    auto ups = young_up(lam);
    return std::find(ups.begin(), ups.end(), mu) != ups.end();
}

inline bool is_horizontal_strip(const Partition& mu, const Partition& nu)
{
    if (!contains(mu, nu)) return false;
    // at most one box per column  <=>  nu_i >= mu_{i+1}
    for (int i = 1; i <= static_cast<int>(mu.size()); ++i)
        if (part(mu, i + 1) > part(nu, i)) return false;
    return true;
}

inline bool is_rook_strip(const Partition& lam, const Partition& nu)
{
    if (!contains(lam, nu)) return false;
    std::set<int> rows, cols;
    for (const Cell& c : skew_cells(young_cells(lam), young_cells(nu))) {
        if (!rows.insert(c.row).second || !cols.insert(c.col).second) return false;
    }
    return true;
}

// ---- shifted Young's lattice ----------------------------------------------

struct ShiftedCover {
    StrictPartition shape;
    bool diagonal = false;  // the added (or removed) cell lies on the main diagonal
};

inline std::vector<ShiftedCover> shifted_up(const StrictPartition& p)
{
    std::vector<ShiftedCover> out;
    const int n = static_cast<int>(p.size());
    for (int i = 1; i <= n + 1; ++i) {
        Partition q = add_to_row(p, i);
        if (is_strict(q)) out.push_back({q, i == n + 1});
    }
    return out;
}

inline std::vector<ShiftedCover> shifted_down(const StrictPartition& p)
{
    std::vector<ShiftedCover> out;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
        Partition q = remove_from_row(p, i);
        if (is_strict(q)) out.push_back({q, p[i - 1] == 1});
    }
    return out;
}

inline bool covers_shifted(const StrictPartition& lam, const StrictPartition& mu)
{
    for (const auto& c : shifted_up(lam))
        if (c.shape == mu) return true;
    return false;
}

inline bool is_border_strip(const StrictPartition& mu, const StrictPartition& nu)
{
    if (!shifted_contains(mu, nu)) return false;
    CellSet s = skew_cells(shifted_cells(mu), shifted_cells(nu));
    for (const Cell& c : s)
        if (s.count({c.row, c.col + 1}) && s.count({c.row + 1, c.col}) && s.count({c.row + 1, c.col + 1}))
            return false;
    return true;
}

// ---- corners ---------------------------------------------------------------

struct Corners {
    std::vector<Cell> inner;
    std::vector<Cell> outer;
};

inline Corners corners(const Partition& p)
{
    Corners c;
    const int n = static_cast<int>(p.size());
    for (int i = 1; i <= n; ++i)
        if (part(p, i) > part(p, i + 1)) c.inner.push_back({i, p[i - 1]});
    for (int i = 1; i <= n + 1; ++i)
        if (i == 1 || part(p, i - 1) > part(p, i)) c.outer.push_back({i, part(p, i) + 1});
    return c;
}

inline Corners shifted_corners(const StrictPartition& p)
{
    Corners c;
    const int n = static_cast<int>(p.size());
    for (int i = 1; i <= n; ++i)
        if (is_strict(remove_from_row(p, i))) c.inner.push_back({i, i + p[i - 1] - 1});
    for (int i = 1; i <= n + 1; ++i)
        if (is_strict(add_to_row(p, i))) c.outer.push_back({i, i + part(p, i)});
    return c;
}

// ---- Young-Fibonacci lattice -----------------------------------------------

// w' covers w iff w' = 1w, or w' = 2v with v covered by w. Equivalently the
// lower covers of w are: each word obtained by turning one 2 of the leading
// block of 2s into a 1, plus w with the first 1 deleted.
inline std::vector<Snake> snake_down(const Snake& w)
{
    std::vector<Snake> out;
    std::size_t m = 0;
    for (; m < w.size() && w[m] == '2'; ++m) {
        Snake v = w;
        v[m] = '1';
        out.push_back(v);
    }
    if (m < w.size()) out.push_back(w.substr(0, m) + w.substr(m + 1));
    return out;
}

inline std::vector<Snake> snake_up(const Snake& w)
{
    std::vector<Snake> out{"1" + w};
    for (const Snake& v : snake_down(w)) out.push_back("2" + v);
    return out;
}

// Recursive form of the definition, kept independent of snake_down.
inline bool snake_covers(const Snake& w, const Snake& wp)
{
    if (wp == "1" + w) return true;
    if (!wp.empty() && wp[0] == '2') return snake_covers(wp.substr(1), w);
    return false;
}

// Cell of w not present in its lower cover v: either a new one-box column at
// index i, or the top of column i.
struct SnakeCell {
    bool new_column = false;
    int index = 0;  // 0-based column index
    bool operator==(const SnakeCell&) const = default;
};

inline SnakeCell snake_added_cell(const Snake& v, const Snake& w)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.substr(i) == "1" + v.substr(std::min(i, v.size()))) return {true, static_cast<int>(i)};
        if (w[i] == '2' && v.substr(std::min(i, v.size())) == "1" + w.substr(i + 1))
            return {false, static_cast<int>(i)};
    }
    return {true, static_cast<int>(w.size())};
}

// ---- keys ------------------------------------------------------------------

inline std::string join(const std::vector<int>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace dfg
