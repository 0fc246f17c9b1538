#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dfg/shapes.hpp"
#include "dfg/tableaux.hpp"

namespace dfg {

using Word = std::vector<int>;

// Letters appearing are exactly 1..k for some k.
inline bool is_initial(const Word& w)
{
    std::vector<int> s(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
}

inline void check_letter(int x)
{
    if (x < 1) throw std::invalid_argument("letters must be positive integers");
}

// ---- RSK -------------------------------------------------------------------

struct RskResult {
    Rows P;
    Rows Q;
};

inline RskResult rsk_insert(const Word& w)
{
    RskResult out;
    int k = 0;
    for (int x : w) {
        check_letter(x);
        ++k;
        std::size_t r = 0;
        for (;; ++r) {
            if (r == out.P.size()) {
                out.P.push_back({x});
                out.Q.push_back({k});
                break;
            }
            auto& row = out.P[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                out.Q[r].push_back(k);
                break;
            }
            std::swap(*it, x);
        }
    }
    return out;
}

// ---- Hecke insertion -------------------------------------------------------

struct HeckeOutcome {
    IncreasingTableau tableau;
    Cell terminal;
    bool added = false;
};

namespace detail {
inline int young_col_bottom(const Rows& t, int col)
{
    int b = 0;
    while (b < static_cast<int>(t.size()) && static_cast<int>(t[b].size()) >= col) ++b;
    return b;
}
}  // namespace detail

inline HeckeOutcome hecke_insert_step(IncreasingTableau t, int x)
{
    check_letter(x);
    for (std::size_t r = 0;; ++r) {
        if (r == t.size()) t.emplace_back();
        auto& row = t[r];
        if (row.empty() || x >= row.back()) {
            const std::size_t j = row.size();
            bool fits = (row.empty() || row.back() < x) && (r == 0 || (t[r - 1].size() > j && t[r - 1][j] < x));
            if (fits) {
                row.push_back(x);
                return {std::move(t), {static_cast<int>(r) + 1, static_cast<int>(j) + 1}, true};
            }
            if (row.empty()) throw std::logic_error("hecke insertion reached an empty row without adjoining");
            const int col = static_cast<int>(row.size());
            return {t, {detail::young_col_bottom(t, col), col}, false};
        }
        auto it = std::upper_bound(row.begin(), row.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - row.begin());
        const int y = *it;
        bool fits = (j == 0 || row[j - 1] < x) && (r == 0 || t[r - 1][j] < x);
        if (fits) row[j] = x;
        x = y;
    }
}

inline std::pair<IncreasingTableau, int> hecke_reverse(IncreasingTableau t, Cell c, bool added)
{
    const int nrows = static_cast<int>(t.size());
    if (c.row < 1 || c.row > nrows || c.col < 1 || c.col > static_cast<int>(t[c.row - 1].size()))
        throw std::invalid_argument("reverse cell outside the tableau");
    if (c.col != static_cast<int>(t[c.row - 1].size()) ||
        (c.row < nrows && static_cast<int>(t[c.row].size()) >= c.col))
        throw std::invalid_argument("reverse cell is not an inner corner");
    int y = t[c.row - 1][c.col - 1];
    if (added) {
        t[c.row - 1].pop_back();
        if (t[c.row - 1].empty()) t.pop_back();
    }
    for (int r = c.row - 2; r >= 0; --r) {
        auto& row = t[r];
        auto it = std::lower_bound(row.begin(), row.end(), y);
        if (it == row.begin()) throw std::invalid_argument("reverse insertion found no smaller entry");
        const std::size_t j = static_cast<std::size_t>(it - row.begin()) - 1;
        const int x = row[j];
        bool right_ok = j + 1 >= row.size() || row[j + 1] > y;
        bool below_ok = r + 1 >= static_cast<int>(t.size()) || t[r + 1].size() <= j || t[r + 1][j] > y;
        if (right_ok && below_ok) row[j] = y;
        y = x;
    }
    return {std::move(t), y};
}

struct HeckeResult {
    IncreasingTableau P;
    SetValuedTableau Q;
};

inline HeckeResult hecke_insert_word(const Word& w)
{
    HeckeResult out;
    int k = 0;
    for (int x : w) {
        ++k;
        HeckeOutcome o = hecke_insert_step(std::move(out.P), x);
        out.P = std::move(o.tableau);
        auto [r, c] = o.terminal;
        if (o.added) {
            if (r == static_cast<int>(out.Q.size()) + 1) out.Q.emplace_back();
            out.Q[r - 1].push_back({k});
        } else {
            out.Q[r - 1][c - 1].push_back(k);
        }
    }
    return out;
}

inline Word hecke_reverse_word(IncreasingTableau P, SetValuedTableau Q)
{
    if (shape_of(P) != shape_of(Q)) throw std::invalid_argument("P and Q have different shapes");
    int n = 0;
    for (const auto& row : Q)
        for (const auto& s : row) n += static_cast<int>(s.size());
    Word out(n);
    for (int k = n; k >= 1; --k) {
        Cell hit{0, 0};
        for (int r = 0; r < static_cast<int>(Q.size()) && !hit.row; ++r)
            for (int c = 0; c < static_cast<int>(Q[r].size()); ++c)
                if (!Q[r][c].empty() && Q[r][c].back() == k) hit = {r + 1, c + 1};
        if (!hit.row) throw std::invalid_argument("recording tableau is not standard");
        auto& cell = Q[hit.row - 1][hit.col - 1];
        const bool alone = cell.size() == 1;
        cell.pop_back();
        if (alone) {
            Q[hit.row - 1].pop_back();
            if (Q[hit.row - 1].empty()) Q.pop_back();
        }
        auto [Y, x] = hecke_reverse(std::move(P), hit, alone);
        P = std::move(Y);
        out[k - 1] = x;
    }
    return out;
}

// ---- shifted Hecke insertion ----------------------------------------------

// How the insertion ended: adjoined/stopped during row insertion, during
// column insertion, or by reaching an empty row.
enum class ShiftedMode { row, column, empty_row };

struct ShiftedOutcome {
    ShiftedTableau tableau;
    Cell terminal;
    bool added = false;
    ShiftedMode mode = ShiftedMode::row;
};

namespace detail {
inline const int* sget(const Rows& t, int r, int c)
{
    if (r < 1 || r > static_cast<int>(t.size())) return nullptr;
    int k = c - r;
    if (k < 0 || k >= static_cast<int>(t[r - 1].size())) return nullptr;
    return &t[r - 1][k];
}
inline void sset(Rows& t, int r, int c, int v) { t[r - 1][c - r] = v; }
inline int srow_end(const Rows& t, int r) { return r + static_cast<int>(t[r - 1].size()) - 1; }
inline std::vector<int> scol_rows(const Rows& t, int c)
{
    std::vector<int> rows;
    for (int r = 1; r <= static_cast<int>(t.size()); ++r)
        if (sget(t, r, c)) rows.push_back(r);
    return rows;
}
inline bool sless(const int* p, int x) { return p == nullptr || *p < x; }
inline bool sgreater(const int* p, int y) { return p == nullptr || *p > y; }
inline bool scan_add(const Rows& t, int r, int c, int x)
{
    const int n = static_cast<int>(t.size());
    if (r == n + 1) {
        if (c != r) return false;
    } else if (r > n + 1 || c != srow_end(t, r) + 1) {
        return false;
    }
    if (r > 1) {
        const int* above = sget(t, r - 1, c);
        if (!above || *above >= x) return false;
    }
    return sless(sget(t, r, c - 1), x);
}
inline void sadd(Rows& t, int r, int x)
{
    if (r == static_cast<int>(t.size()) + 1)
        t.push_back({x});
    else
        t[r - 1].push_back(x);
}
}  // namespace detail

inline ShiftedOutcome shifted_insert_step(ShiftedTableau t, int x)
{
    using namespace detail;
    check_letter(x);
    bool column_mode = false;
    int idx = 1;
    for (;;) {
        if (!column_mode) {
            const int r = idx;
            const bool empty = r > static_cast<int>(t.size());
            if (empty || x >= t[r - 1].back()) {
                const int c = empty ? r : srow_end(t, r) + 1;
                if (scan_add(t, r, c, x)) {
                    sadd(t, r, x);
                    return {std::move(t), {r, c}, true, ShiftedMode::row};
                }
                if (empty) {
                    const int pr = r - 1;
                    return {t, {pr, srow_end(t, pr)}, false, ShiftedMode::empty_row};
                }
                const int cc = srow_end(t, r);
                return {t, {scol_rows(t, cc).back(), cc}, false, ShiftedMode::row};
            }
            auto& row = t[r - 1];
            const std::size_t k = static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), x) - row.begin());
            const int c = r + static_cast<int>(k);
            const int y = row[k];
            if (sless(sget(t, r, c - 1), x) && sless(sget(t, r - 1, c), x)) sset(t, r, c, x);
            if (c == r) {
                column_mode = true;
                idx = c + 1;
            } else {
                idx = r + 1;
            }
            x = y;
        } else {
            const int c = idx;
            const std::vector<int> rows = scol_rows(t, c);
            if (rows.empty() || x >= *sget(t, rows.back(), c)) {
                const int r = rows.empty() ? 1 : rows.back() + 1;
                if (scan_add(t, r, c, x)) {
                    sadd(t, r, x);
                    return {std::move(t), {r, c}, true, ShiftedMode::column};
                }
                if (rows.empty()) throw std::logic_error("shifted insertion reached an empty column");
                const int b = rows.back();
                return {t, {b, srow_end(t, b)}, false, ShiftedMode::column};
            }
            int r = 0, y = 0;
            for (int q : rows)
                if (*sget(t, q, c) > x) {
                    r = q;
                    y = *sget(t, q, c);
                    break;
                }
            if (sless(sget(t, r, c - 1), x) && sless(sget(t, r - 1, c), x)) sset(t, r, c, x);
            idx = c + 1;
            x = y;
        }
    }
}

// Inverse of one step. The prime flag of the removed recording label selects
// the starting direction: primed labels resume in column mode.
inline std::pair<ShiftedTableau, int> shifted_reverse(ShiftedTableau t, Cell cell, bool added, bool primed)
{
    using namespace detail;
    auto [r, c] = cell;
    const int* start = sget(t, r, c);
    if (!start) throw std::invalid_argument("reverse cell outside the tableau");
    int y = *start;
    if (added) {
        if (c != srow_end(t, r) || sget(t, r + 1, c)) throw std::invalid_argument("reverse cell is not an inner corner");
        t[r - 1].pop_back();
        if (t[r - 1].empty()) t.pop_back();
    }
    bool column_mode = primed;
    int idx = column_mode ? c - 1 : r - 1;
    while (idx >= 1) {
        int rr = 0, cc = 0, x = 0;
        if (!column_mode) {
            rr = idx;
            const auto& row = t[rr - 1];
            auto it = std::lower_bound(row.begin(), row.end(), y);
            if (it == row.begin()) throw std::invalid_argument("reverse insertion found no smaller entry");
            const int k = static_cast<int>(it - row.begin()) - 1;
            cc = rr + k;
            x = row[k];
        } else {
            cc = idx;
            for (int q : scol_rows(t, cc))
                if (*sget(t, q, cc) < y) {
                    rr = q;
                    x = *sget(t, q, cc);
                }
            if (!rr) throw std::invalid_argument("reverse insertion found no smaller entry");
        }
        if (sgreater(sget(t, rr, cc + 1), y) && sgreater(sget(t, rr + 1, cc), y)) sset(t, rr, cc, y);
        if (column_mode && cc != rr) {
            idx = cc - 1;
        } else {
            column_mode = false;
            idx = rr - 1;
        }
        y = x;
    }
    return {std::move(t), y};
}

struct ShiftedResult {
    ShiftedTableau P;
    ShiftedSetValuedTableau Q;
};

inline ShiftedResult shifted_insert_word(const Word& w)
{
    ShiftedResult out;
    int k = 0;
    for (int x : w) {
        ++k;
        ShiftedOutcome o = shifted_insert_step(std::move(out.P), x);
        out.P = std::move(o.tableau);
        auto [r, c] = o.terminal;
        Entry label{k, o.mode != ShiftedMode::row};
        if (o.added) {
            if (r == static_cast<int>(out.Q.size()) + 1) out.Q.emplace_back();
            out.Q[r - 1].push_back({label});
        } else {
            out.Q[r - 1][c - r].push_back(label);
        }
    }
    return out;
}

inline Word shifted_reverse_word(ShiftedTableau P, ShiftedSetValuedTableau Q)
{
    if (shape_of(P) != shape_of(Q)) throw std::invalid_argument("P and Q have different shapes");
    int n = 0;
    for (const auto& row : Q)
        for (const auto& s : row) n += static_cast<int>(s.size());
    Word out(n);
    for (int k = n; k >= 1; --k) {
        int hr = 0, hk = 0;
        for (int r = 0; r < static_cast<int>(Q.size()) && !hr; ++r)
            for (int j = 0; j < static_cast<int>(Q[r].size()); ++j)
                if (!Q[r][j].empty() && Q[r][j].back().value == k) {
                    hr = r + 1;
                    hk = j;
                }
        if (!hr) throw std::invalid_argument("recording tableau is not standard");
        auto& cell = Q[hr - 1][hk];
        const bool primed = cell.back().primed;
        const bool alone = cell.size() == 1;
        cell.pop_back();
        if (alone) {
            Q[hr - 1].pop_back();
            if (Q[hr - 1].empty()) Q.pop_back();
        }
        auto [Y, x] = shifted_reverse(std::move(P), {hr, hr + hk}, alone, primed);
        P = std::move(Y);
        out[k - 1] = x;
    }
    return out;
}

// ---- K-Young-Fibonacci insertion ------------------------------------------

struct KyfOutcome {
    KyfTableau tableau;
    bool added = false;
    SnakeCell cell;            // the new box when added
    int terminal_column = 0;   // 0-based, when nothing was added
    // (row, col) with row 1 = bottom, 2 = top; col 1-based.
    Cell terminal;
};

namespace detail {
constexpr int kyf_star = -1;
constexpr int kyf_hole = 0;

struct KyfPos {
    int value;
    int col;
    int row;  // 0 = bottom, 1 = top
};

inline std::vector<KyfPos> kyf_entries(const KyfTableau& t)
{
    std::vector<KyfPos> out;
    for (int i = 0; i < static_cast<int>(t.size()); ++i)
        for (int r = 0; r < static_cast<int>(t[i].size()); ++r) out.push_back({t[i][r], i, r});
    return out;
}

// Value order with the upper A of an A/A pair counted as the larger one.
inline bool kyf_less(const KyfPos& a, const KyfPos& b)
{
    return a.value != b.value ? a.value < b.value : a.row < b.row;
}

inline int kyf_min(const KyfTableau& t)
{
    int m = t[0][0];
    for (const auto& c : t)
        for (int v : c) m = std::min(m, v);
    return m;
}

inline void kyf_place(std::vector<std::vector<int>>& t, SnakeCell cell, int v)
{
    if (cell.new_column)
        t.insert(t.begin() + cell.index, std::vector<int>{v});
    else
        t[cell.index].push_back(v);
}

inline void kyf_place(KyfSetTableau& t, SnakeCell cell, const LabelSet& s)
{
    if (cell.new_column)
        t.insert(t.begin() + cell.index, std::vector<LabelSet>{s});
    else
        t[cell.index].push_back(s);
}

inline bool snake_is_lower_cover(const Snake& v, const Snake& w)
{
    auto d = snake_down(w);
    return std::find(d.begin(), d.end(), v) != d.end();
}
}  // namespace detail

inline KyfOutcome kyf_insert_step(KyfTableau y, int x)
{
    using namespace detail;
    check_letter(x);
    if (y.empty()) return {{{x}}, true, {true, 0}, 0, {1, 1}};
    if (x == kyf_min(y)) {
        const int h = static_cast<int>(y[0].size());
        return {std::move(y), false, {}, 0, {h, 1}};
    }
    const Snake before = snake_of(y);
    KyfTableau t;
    t.push_back({x});
    t.insert(t.end(), y.begin(), y.end());
    std::vector<KyfPos> a;
    for (const KyfPos& e : kyf_entries(t))
        if (e.col > 0 && e.value >= x) a.push_back(e);
    std::stable_sort(a.begin(), a.end(), kyf_less);
    if (!a.empty()) {
        std::vector<int> vals;
        for (std::size_t i = 0; i < a.size(); ++i)
            vals.push_back(i > 0 && a[i].value == a[i - 1].value ? kyf_star : a[i].value);
        t[0].push_back(kyf_hole);
        std::vector<std::pair<int, int>> pos{{0, 1}};
        for (const KyfPos& e : a) pos.push_back({e.col, e.row});
        for (std::size_t i = 0; i < vals.size(); ++i) t[pos[i].first][pos[i].second] = vals[i];
        t[pos.back().first][pos.back().second] = kyf_hole;
    }
    KyfTableau packed;
    for (const auto& col : t) {
        if (col.size() == 2 && col[0] == kyf_hole && col[1] != kyf_hole)
            throw std::logic_error("kyf insertion vacated a bottom box under a top box");
        std::vector<int> kept;
        for (int v : col)
            if (v != kyf_hole) kept.push_back(v);
        if (!kept.empty()) packed.push_back(std::move(kept));
    }
    int terminal = -1;
    for (int i = 0; i < static_cast<int>(packed.size()); ++i)
        if (packed[i].size() == 1 && packed[i][0] == kyf_star) {
            packed.erase(packed.begin() + i);
            terminal = i;
            break;
        }
    for (auto& col : packed) {
        if (col.size() == 2 && col[0] == kyf_star) col[0] = col[1];
        for (int v : col)
            if (v == kyf_star) throw std::logic_error("kyf insertion left a stray star");
    }
    if (terminal >= 0) {
        if (snake_of(packed) != before) throw std::logic_error("kyf insertion changed shape without adding a box");
        const int h = static_cast<int>(packed[terminal].size());
        return {std::move(packed), false, {}, terminal, {h, terminal + 1}};
    }
    const Snake after = snake_of(packed);
    if (!snake_is_lower_cover(before, after)) throw std::logic_error("kyf insertion did not add a single box");
    SnakeCell cell = snake_added_cell(before, after);
    Cell term = cell.new_column ? Cell{1, cell.index + 1} : Cell{2, cell.index + 1};
    return {std::move(packed), true, cell, 0, term};
}

struct KyfResult {
    KyfTableau P;
    KyfSetTableau Q;
};

inline KyfResult kyf_insert_word(const Word& w)
{
    KyfResult out;
    int k = 0;
    for (int x : w) {
        ++k;
        KyfOutcome o = kyf_insert_step(std::move(out.P), x);
        out.P = std::move(o.tableau);
        if (o.added)
            detail::kyf_place(out.Q, o.cell, LabelSet{k});
        else
            out.Q[o.terminal_column].back().push_back(k);
    }
    return out;
}

// Undo the step that recorded label n (the largest label of Q). Returns the
// removed letter and shrinks P and Q in place.
inline int kyf_reverse_step(KyfTableau& p, KyfSetTableau& q, int n)
{
    using namespace detail;
    int c = -1, r = -1;
    for (int i = 0; i < static_cast<int>(q.size()) && c < 0; ++i)
        for (int j = 0; j < static_cast<int>(q[i].size()); ++j)
            if (!q[i][j].empty() && q[i][j].back() == n) {
                c = i;
                r = j;
            }
    if (c < 0) throw std::invalid_argument("recording tableau is not standard");
    const bool alone = q[c][r].size() == 1;
    q[c][r].pop_back();
    if (alone) {
        if (r != static_cast<int>(q[c].size()) - 1) throw std::invalid_argument("label sits under another box");
        q[c].pop_back();
        if (q[c].empty()) q.erase(q.begin() + c);
    }
    if (p.empty()) throw std::invalid_argument("insertion tableau exhausted early");
    if (!alone && c == 0) return kyf_min(p);

    const int x = p[0][0];
    auto fix_stars = [](KyfTableau& t) {
        for (auto& col : t) {
            if (col.size() == 2 && col[1] == kyf_star) col[1] = col[0];
            if (col.size() == 2 && col[0] == kyf_star) col[0] = col[1];
            for (int v : col)
                if (v == kyf_star) throw std::invalid_argument("reverse insertion left a stray star");
        }
    };

    if (alone) {
        std::vector<KyfPos> b;
        for (const KyfPos& e : kyf_entries(p))
            if (e.value >= x && !(e.col == 0 && e.row == 0)) b.push_back(e);
        std::stable_sort(b.begin(), b.end(), kyf_less);
        if (b.empty()) {
            if (p[0].size() != 1) throw std::invalid_argument("inconsistent first column");
            p.erase(p.begin());
            return x;
        }
        if (b[0].col != 0 || b[0].row != 1) throw std::invalid_argument("reverse chain does not start above the first box");
        std::vector<int> vals;
        for (const KyfPos& e : b) vals.push_back(e.value);
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i].value == b[i + 1].value) vals[i] = kyf_star;
        KyfTableau t = p;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) t[b[i + 1].col][b[i + 1].row] = vals[i];
        t.erase(t.begin());
        const Snake lower = snake_of(t);
        const Snake target = snake_of(q);
        if (!snake_is_lower_cover(lower, target)) throw std::invalid_argument("shapes of P and Q disagree");
        kyf_place(t, snake_added_cell(lower, target), b.back().value);
        fix_stars(t);
        p = std::move(t);
        return x;
    }

    int k = kyf_min(p);
    for (const auto& col : p)
        for (int v : col) k = std::max(k, v);
    KyfTableau t = p;
    t.insert(t.begin() + c, std::vector<int>{k, kyf_hole});
    std::vector<KyfPos> rest;
    for (const KyfPos& e : kyf_entries(t))
        if (e.value != kyf_hole && e.value >= x && !(e.col == 0 && e.row == 0) && !(e.col == c && e.row == 0))
            rest.push_back(e);
    std::stable_sort(rest.begin(), rest.end(), [](const KyfPos& a, const KyfPos& b) { return kyf_less(b, a); });
    std::vector<KyfPos> b{{k, c, 0}};
    b.insert(b.end(), rest.begin(), rest.end());
    std::vector<int> vals;
    for (const KyfPos& e : b) vals.push_back(e.value);
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (b[i].value == b[i + 1].value) vals[i + 1] = kyf_star;
    t[c][1] = vals[0];
    for (std::size_t i = 1; i < b.size(); ++i) t[b[i - 1].col][b[i - 1].row] = vals[i];
    if (b.back().col != 0 || b.back().row != 1) throw std::invalid_argument("reverse chain does not end above the first box");
    t.erase(t.begin());
    fix_stars(t);
    p = std::move(t);
    return x;
}

inline Word kyf_reverse(KyfTableau P, KyfSetTableau Q)
{
    if (snake_of(P) != snake_of(Q)) throw std::invalid_argument("P and Q have different shapes");
    int n = 0;
    for (const auto& col : Q)
        for (const auto& s : col) n += static_cast<int>(s.size());
    Word out(n);
    for (int k = n; k >= 1; --k) out[k - 1] = kyf_reverse_step(P, Q, k);
    if (!P.empty() || !Q.empty()) throw std::invalid_argument("tableaux not exhausted by reverse insertion");
    return out;
}

}  // namespace dfg
