#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dfg/shapes.hpp"

namespace dfg {

// Row-major integer fillings. For shifted tableaux row r (1-based) starts in
// column r; rows[r-1][k] sits at cell (r, r+k).
using Rows = std::vector<std::vector<int>>;
using IncreasingTableau = Rows;
using ShiftedTableau = Rows;

// Cells hold sorted label sets.
using LabelSet = std::vector<int>;
using SetValuedTableau = std::vector<std::vector<LabelSet>>;

// Primed entries order as k' < k.
struct Entry {
    int value = 0;
    bool primed = false;
    auto operator<=>(const Entry& o) const
    {
        if (value != o.value) return value <=> o.value;
        return o.primed <=> primed;
    }
    bool operator==(const Entry&) const = default;
};
using EntrySet = std::vector<Entry>;
using ShiftedSetValuedTableau = std::vector<std::vector<EntrySet>>;

// KYF tableaux are stored per snake column, leftmost first. A column holds
// {bottom} or {bottom, top}.
using KyfTableau = std::vector<std::vector<int>>;
using KyfSetTableau = std::vector<std::vector<LabelSet>>;

struct Violation {
    std::string condition;
    std::vector<Cell> cells;
};
using Violations = std::vector<Violation>;

template <class T>
Partition shape_of(const std::vector<std::vector<T>>& rows)
{
    Partition p;
    for (const auto& r : rows)
        if (!r.empty()) p.push_back(static_cast<int>(r.size()));
    return p;
}

template <class T>
Snake snake_of(const std::vector<std::vector<T>>& cols)
{
    Snake s;
    for (const auto& c : cols) s += static_cast<char>('0' + c.size());
    return s;
}

namespace detail {
template <class T>
const T* at(const std::vector<std::vector<T>>& rows, int r, int c, bool shifted)
{
    if (r < 1 || r > static_cast<int>(rows.size())) return nullptr;
    int k = shifted ? c - r : c - 1;
    if (k < 0 || k >= static_cast<int>(rows[r - 1].size())) return nullptr;
    return &rows[r - 1][k];
}

inline Violations check_increasing(const Rows& t, bool shifted)
{
    Violations out;
    Partition sh;
    for (const auto& r : t) sh.push_back(static_cast<int>(r.size()));
    if (shifted ? !is_strict(sh) : !is_partition(sh)) out.push_back({"shape", {}});
    for (int r = 1; r <= static_cast<int>(t.size()); ++r) {
        int first = shifted ? r : 1;
        for (int c = first; c < first + static_cast<int>(t[r - 1].size()); ++c) {
            int v = *at(t, r, c, shifted);
            if (v < 1) out.push_back({"positive", {{r, c}}});
            if (const int* l = at(t, r, c - 1, shifted); l && *l >= v)
                out.push_back({"row", {{r, c - 1}, {r, c}}});
            if (const int* a = at(t, r - 1, c, shifted); a && *a >= v)
                out.push_back({"column", {{r - 1, c}, {r, c}}});
        }
    }
    return out;
}
}  // namespace detail

inline Violations validate_increasing(const IncreasingTableau& t)
{
    return detail::check_increasing(t, false);
}

inline Violations validate_shifted_increasing(const ShiftedTableau& t)
{
    return detail::check_increasing(t, true);
}

// Set-valued tableau: weak rows, strict columns. When standard is requested
// the labels must be exactly 1..n.
inline Violations validate_set_valued(const SetValuedTableau& t, bool standard = true)
{
    Violations out;
    if (!is_partition(shape_of(t)) || shape_of(t).size() != t.size()) out.push_back({"shape", {}});
    std::vector<int> all;
    for (int r = 1; r <= static_cast<int>(t.size()); ++r) {
        for (int c = 1; c <= static_cast<int>(t[r - 1].size()); ++c) {
            const LabelSet& s = t[r - 1][c - 1];
            if (s.empty() || !std::is_sorted(s.begin(), s.end())) {
                out.push_back({"cell", {{r, c}}});
                continue;
            }
            all.insert(all.end(), s.begin(), s.end());
            if (c > 1 && !t[r - 1][c - 2].empty() && s.front() < t[r - 1][c - 2].back())
                out.push_back({"row", {{r, c - 1}, {r, c}}});
            if (r > 1 && static_cast<int>(t[r - 2].size()) >= c && !t[r - 2][c - 1].empty() &&
                s.front() <= t[r - 2][c - 1].back())
                out.push_back({"column", {{r - 1, c}, {r, c}}});
        }
    }
    if (standard) {
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i] != static_cast<int>(i) + 1) {
                out.push_back({"standard", {}});
                break;
            }
    }
    return out;
}

inline Violations validate_shifted_set_valued(const ShiftedSetValuedTableau& t, bool standard = true)
{
    Violations out;
    Partition sh = shape_of(t);
    if (!is_strict(sh) || sh.size() != t.size()) out.push_back({"shape", {}});
    std::vector<int> values;
    for (int r = 1; r <= static_cast<int>(t.size()); ++r) {
        for (int c = r; c < r + static_cast<int>(t[r - 1].size()); ++c) {
            const EntrySet& s = *detail::at(t, r, c, true);
            if (s.empty() || !std::is_sorted(s.begin(), s.end())) {
                out.push_back({"cell", {{r, c}}});
                continue;
            }
            for (const Entry& e : s) {
                values.push_back(e.value);
                if (e.primed && r == c) out.push_back({"diagonal prime", {{r, c}}});
            }
            if (const EntrySet* l = detail::at(t, r, c - 1, true); l && !l->empty() && s.front() < l->back())
                out.push_back({"row", {{r, c - 1}, {r, c}}});
            if (const EntrySet* a = detail::at(t, r - 1, c, true); a && !a->empty() && s.front() < a->back())
                out.push_back({"column", {{r - 1, c}, {r, c}}});
        }
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        out.push_back({"repeated value", {}});
    if (standard)
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] != static_cast<int>(i) + 1) {
                out.push_back({"standard", {}});
                break;
            }
    return out;
}

// KYF cells are addressed as (row, col) with row 1 = bottom, row 2 = top and
// col the 1-based snake column.
inline Violations validate_kyf(const KyfTableau& t)
{
    Violations out;
    if (t.empty()) return out;
    int lo = t[0][0];
    for (const auto& col : t) {
        if (col.empty() || col.size() > 2) {
            out.push_back({"column height", {}});
            return out;
        }
        for (int v : col) lo = std::min(lo, v);
    }
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        const auto& col = t[i];
        const int A = col[0];
        std::vector<std::pair<int, Cell>> right;
        for (int k = i + 1; k < n; ++k)
            for (int r = 0; r < static_cast<int>(t[k].size()); ++r) right.push_back({t[k][r], {r + 1, k + 1}});
        if (col.size() == 2) {
            const int B = col[1];
            if (A > B) out.push_back({"(i)", {{1, i + 1}, {2, i + 1}}});
            for (const auto& [v, c] : right)
                if (A <= v && v <= B) out.push_back({"(ii)", {{1, i + 1}, c}});
            if (A == B) {
                // A pair may not follow a single box with a smaller entry.
                for (int k = 0; k < i; ++k)
                    if (t[k].size() == 1 && t[k][0] < A) out.push_back({"(iv) order", {{1, k + 1}, {1, i + 1}}});
                if (i == n - 1) out.push_back({"(iv) rightmost", {{1, i + 1}}});
                if (A == lo) out.push_back({"(iv) minimum", {{1, i + 1}}});
            }
        } else {
            for (const auto& [v, c] : right)
                if (v >= A) out.push_back({"(iii)", {{1, i + 1}, c}});
        }
    }
    return out;
}

inline Violations validate_kyf_set_valued(const KyfSetTableau& t, bool standard = true)
{
    Violations out;
    std::vector<int> all;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        const auto& col = t[i];
        if (col.empty() || col.size() > 2) {
            out.push_back({"column height", {}});
            return out;
        }
        for (const auto& s : col) {
            if (s.empty() || !std::is_sorted(s.begin(), s.end())) {
                out.push_back({"cell", {{1, i + 1}}});
                return out;
            }
            all.insert(all.end(), s.begin(), s.end());
        }
        std::vector<std::pair<int, Cell>> right;
        for (int k = i + 1; k < n; ++k)
            for (int r = 0; r < static_cast<int>(t[k].size()); ++r)
                for (int v : t[k][r]) right.push_back({v, {r + 1, k + 1}});
        const LabelSet& A = col[0];
        if (col.size() == 2) {
            const LabelSet& B = col[1];
            if (!(A.back() < B.front())) out.push_back({"(i)", {{1, i + 1}, {2, i + 1}}});
            for (const auto& [v, c] : right)
                if (A.back() <= v && v <= B.front()) out.push_back({"(ii)", {{1, i + 1}, c}});
        } else {
            for (const auto& [v, c] : right)
                if (v > A.front()) out.push_back({"(iii)", {{1, i + 1}, c}});
        }
    }
    if (standard) {
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i] != static_cast<int>(i) + 1) {
                out.push_back({"standard", {}});
                break;
            }
    }
    return out;
}

// Rows bottom to top, each read left to right.
inline std::vector<int> row_word(const IncreasingTableau& t)
{
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline IncreasingTableau superstandard(const Partition& mu)
{
    IncreasingTableau t;
    int next = 1;
    for (int len : mu) {
        t.emplace_back();
        for (int j = 0; j < len; ++j) t.back().push_back(next++);
    }
    return t;
}

}  // namespace dfg
