#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dfg/insertion.hpp"
#include "dfg/shapes.hpp"
#include "dfg/tableaux.hpp"

namespace dfg {

// Square (t, s) has corners lam = grid[t-1][s-1] (bottom left),
// nu = grid[t-1][s] (bottom right), mu = grid[t][s-1] (top left) and
// gamma = grid[t][s]. Row t corresponds to letter value t, column s to the
// s-th position of the word. Horizontal labels sit on the top edge of a
// square, vertical labels on its right edge.
using EdgeKey = std::pair<int, int>;

template <class Shape, class Label>
struct GrowthDiagram {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Shape>> grid;
    Word word;
    std::map<EdgeKey, Label> h;
    std::map<EdgeKey, int> v;
    // Name of the rule that produced each square, rule[t-1][s-1].
    std::vector<std::vector<std::string>> rule;

    bool has_x(int t, int s) const { return word[s - 1] == t; }
};

// Boundary data consumed by the decay rules: top row with its labels and
// right column with its vertical labels.
template <class Shape, class Label>
struct GrowthBoundary {
    int rows = 0;
    int cols = 0;
    std::vector<Shape> top;    // grid[rows][s], s = 0..cols
    std::vector<Shape> right;  // grid[t][cols], t = 0..rows
    std::map<int, Label> top_labels;
    std::map<int, int> right_labels;
};

struct RuleConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShiftedLabel {
    int index = 0;  // 0 when the label is a bare column flag
    bool column = false;
    bool operator==(const ShiftedLabel&) const = default;
    auto operator<=>(const ShiftedLabel&) const = default;
};

inline std::string to_string(const ShiftedLabel& l)
{
    return (l.index ? std::to_string(l.index) : std::string()) + (l.column ? "c" : "");
}

using RskGrowth = GrowthDiagram<Partition, int>;
using HeckeGrowth = GrowthDiagram<Partition, int>;
using ShiftedGrowth = GrowthDiagram<StrictPartition, ShiftedLabel>;
using KyfGrowth = GrowthDiagram<Snake, int>;

template <class Shape, class Label>
GrowthBoundary<Shape, Label> boundary(const GrowthDiagram<Shape, Label>& g)
{
    GrowthBoundary<Shape, Label> b{g.rows, g.cols, {}, {}, {}, {}};
    for (int s = 0; s <= g.cols; ++s) b.top.push_back(g.grid[g.rows][s]);
    for (int t = 0; t <= g.rows; ++t) b.right.push_back(g.grid[t][g.cols]);
    for (int s = 1; s <= g.cols; ++s)
        if (auto it = g.h.find({g.rows, s}); it != g.h.end()) b.top_labels[s] = it->second;
    for (int t = 1; t <= g.rows; ++t)
        if (auto it = g.v.find({t, g.cols}); it != g.v.end()) b.right_labels[t] = it->second;
    return b;
}

namespace detail {

template <class Outcome>
struct Match {
    std::string rule;
    Outcome out;
};

// Several rules may fire on one square; that is only an error when they
// prescribe different outcomes.
template <class Outcome>
const Match<Outcome>& resolve(const std::vector<Match<Outcome>>& ms, const std::string& where)
{
    if (ms.empty()) throw RuleConflict("no rule applies at " + where);
    for (const auto& m : ms)
        if (!(m.out == ms.front().out)) {
            std::string names;
            for (const auto& k : ms) names += " (" + k.rule + ")";
            throw RuleConflict("rules disagree at " + where + ":" + names);
        }
    return ms.front();
}

inline std::string square_name(int t, int s)
{
    return "square (" + std::to_string(t) + "," + std::to_string(s) + ")";
}

template <class Shape, class Label>
GrowthDiagram<Shape, Label> empty_diagram(const Word& w)
{
    GrowthDiagram<Shape, Label> g;
    for (int x : w) check_letter(x);
    g.word = w;
    g.cols = static_cast<int>(w.size());
    g.rows = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
    g.grid.assign(g.rows + 1, std::vector<Shape>(g.cols + 1));
    g.rule.assign(g.rows, std::vector<std::string>(g.cols));
    return g;
}

template <class L>
std::optional<L> lookup(const std::map<EdgeKey, L>& m, int t, int s)
{
    auto it = m.find({t, s});
    if (it == m.end()) return std::nullopt;
    return it->second;
}

}  // namespace detail

// ---- RSK ---------------------------------------------------------------------

inline bool is_permutation(const Word& w)
{
    std::vector<int> s(w);
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
}

inline Partition rsk_rule(const Partition& lam, const Partition& mu, const Partition& nu, bool x, std::string& name)
{
    if (x) {
        name = "L4";
        return add_to_row(lam, 1);
    }
    if (mu != nu) {
        name = "L3";
        Partition out(std::max(mu.size(), nu.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(part(mu, i + 1), part(nu, i + 1));
        return out;
    }
    if (mu == lam) {
        name = "L1";
        return lam;
    }
    // lam < mu = nu: the box of mu/lam is in row i, so add a box in row i+1.
    name = "L2";
    int i = 1;
    while (part(mu, i) == part(lam, i)) ++i;
    return add_to_row(mu, i + 1);
}

inline RskGrowth rsk_growth(const Word& w)
{
    if (!is_permutation(w)) throw std::invalid_argument("rsk growth needs a permutation");
    auto g = detail::empty_diagram<Partition, int>(w);
    for (int t = 1; t <= g.rows; ++t)
        for (int s = 1; s <= g.cols; ++s)
            g.grid[t][s] = rsk_rule(g.grid[t - 1][s - 1], g.grid[t][s - 1], g.grid[t - 1][s], g.has_x(t, s),
                                    g.rule[t - 1][s - 1]);
    return g;
}

// ---- Hecke growth -------------------------------------------------------------

struct HeckeOut {
    Partition gamma;
    std::optional<int> label;
    bool operator==(const HeckeOut&) const = default;
};

inline std::vector<detail::Match<HeckeOut>> hecke_rules(const Partition& lam, const Partition& mu,
                                                         const Partition& nu, bool x, std::optional<int> bl)
{
    std::vector<detail::Match<HeckeOut>> m;
    if (x) {
        if (part(mu, 1) == part(nu, 1)) {
            m.push_back({"1", {add_to_row(mu, 1), std::nullopt}});
        } else {
            int r = 1;
            while (part(mu, r + 1) == part(mu, 1)) ++r;
            m.push_back({"2", {mu, r}});
        }
        return m;
    }
    if (mu == lam) m.push_back({"3", {nu, bl}});
    if (nu == lam && !bl) m.push_back({"3", {mu, std::nullopt}});
    if (!m.empty()) return m;
    if (!contains(mu, nu)) {
        Partition u(std::max(mu.size(), nu.size()));
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::max(part(mu, i + 1), part(nu, i + 1));
        m.push_back({"4", {u, std::nullopt}});
        return m;
    }
    const CellSet skew = skew_cells(young_cells(mu), young_cells(lam));
    auto row_has = [&](int r) {
        return std::any_of(skew.begin(), skew.end(), [r](const Cell& c) { return c.row == r; });
    };
    if (nu != lam) {
        const Cell box = *skew_cells(young_cells(nu), young_cells(lam)).begin();
        const int i = box.row;
        if (!row_has(i + 1))
            m.push_back({"5", {add_to_row(mu, i + 1), std::nullopt}});
        else
            m.push_back({"6", {mu, i + 1}});
        return m;
    }
    if (!bl) return m;
    const int i = *bl;
    const int j = part(nu, i);
    const bool right = skew.count({i, j + 1}) > 0;
    const bool below = skew.count({i + 1, j}) > 0;
    const bool in_next = row_has(i + 1);
    if (!right && !below) m.push_back({"7", {mu, i}});
    if (below) m.push_back({"8", {mu, i + 1}});
    if (right && !in_next) m.push_back({"9", {add_to_row(mu, i + 1), std::nullopt}});
    if (right && in_next) m.push_back({"10", {mu, i + 1}});
    return m;
}

inline HeckeGrowth hecke_growth(const Word& w)
{
    auto g = detail::empty_diagram<Partition, int>(w);
    for (int t = 1; t <= g.rows; ++t)
        for (int s = 1; s <= g.cols; ++s) {
            auto ms = hecke_rules(g.grid[t - 1][s - 1], g.grid[t][s - 1], g.grid[t - 1][s], g.has_x(t, s),
                                  detail::lookup(g.h, t - 1, s));
            const auto& r = detail::resolve(ms, detail::square_name(t, s));
            g.grid[t][s] = r.out.gamma;
            if (r.out.label) g.h[{t, s}] = *r.out.label;
            g.rule[t - 1][s - 1] = r.rule;
        }
    return g;
}

// ---- shifted growth -----------------------------------------------------------

struct ShiftedOut {
    StrictPartition gamma;
    std::optional<ShiftedLabel> label;
    bool operator==(const ShiftedOut&) const = default;
};

namespace detail {
// Add a cell at the bottom of column j.
inline StrictPartition shifted_add_to_col(const StrictPartition& p, int j)
{
    CellSet c = shifted_cells(p);
    c.insert({shifted_col_bottom(p, j) + 1, j});
    return shape_from_cells(c);
}
inline StrictPartition shifted_union(const StrictPartition& a, const StrictPartition& b)
{
    StrictPartition u(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::max(part(a, i + 1), part(b, i + 1));
    return u;
}
}  // namespace detail

inline std::vector<detail::Match<ShiftedOut>> shifted_rules(const StrictPartition& lam, const StrictPartition& mu,
                                                             const StrictPartition& nu, bool x,
                                                             std::optional<ShiftedLabel> bl)
{
    using detail::shifted_add_to_col;
    std::vector<detail::Match<ShiftedOut>> m;
    if (x) {
        if (part(lam, 1) == part(mu, 1)) m.push_back({"1", {add_to_row(mu, 1), std::nullopt}});
        if (part(lam, 1) + 1 == part(mu, 1)) m.push_back({"2", {mu, ShiftedLabel{1, false}}});
        return m;
    }
    if (mu == lam) m.push_back({"3", {nu, bl}});
    if (nu == lam && !bl) m.push_back({"3", {mu, std::nullopt}});
    if (!m.empty()) return m;
    if (!shifted_contains(mu, nu)) {
        m.push_back({"4", {detail::shifted_union(mu, nu), bl}});
        return m;
    }
    const CellSet skew = skew_cells(shifted_cells(mu), shifted_cells(lam));
    auto row_has = [&](int r) {
        return std::any_of(skew.begin(), skew.end(), [r](const Cell& c) { return c.row == r; });
    };
    auto col_has = [&](int j) {
        return std::any_of(skew.begin(), skew.end(), [j](const Cell& c) { return c.col == j; });
    };
    if (nu != lam) {
        const Cell box = *skew_cells(shifted_cells(nu), shifted_cells(lam)).begin();
        const int i = box.row, j = box.col;
        const bool cflag = bl && bl->column;
        if (i != j && !cflag) {
            if (!row_has(i + 1))
                m.push_back({"5", {add_to_row(mu, i + 1), std::nullopt}});
            else
                m.push_back({"6", {mu, ShiftedLabel{i + 1, false}}});
        } else {
            if (!col_has(j + 1))
                m.push_back({"7", {shifted_add_to_col(mu, j + 1), ShiftedLabel{0, true}}});
            else
                m.push_back({"8", {mu, ShiftedLabel{j + 1, true}}});
        }
        return m;
    }
    if (!bl || !bl->index) return m;
    if (!bl->column) {
        const int i = bl->index;
        const int j = i + part(nu, i) - 1;
        const bool right = skew.count({i, j + 1}) > 0;
        const bool below = skew.count({i + 1, j}) > 0;
        const bool in_next = row_has(i + 1);
        // column of the outer corner of row i+1 in mu
        const int outer = i + 1 + part(mu, i + 1);
        if (!right && !below) m.push_back({"9", {mu, ShiftedLabel{i, false}}});
        if (below) m.push_back({"10", {mu, ShiftedLabel{i + 1, false}}});
        if (right && !in_next && outer != j + 1) m.push_back({"11", {add_to_row(mu, i + 1), std::nullopt}});
        if (right && !in_next && outer == j + 1) m.push_back({"12", {mu, ShiftedLabel{j + 1, true}}});
        if (right && in_next) m.push_back({"10x", {mu, ShiftedLabel{i + 1, false}}});
    } else {
        const int j = bl->index;
        const int r = shifted_col_bottom(nu, j);
        const bool right = skew.count({r, j + 1}) > 0;
        const bool below = skew.count({r + 1, j}) > 0;
        const bool in_next = col_has(j + 1);
        if (!right && !below) m.push_back({"13", {mu, ShiftedLabel{j, true}}});
        if (right) m.push_back({"14", {mu, ShiftedLabel{j + 1, true}}});
        if (below && !in_next) m.push_back({"15", {shifted_add_to_col(mu, j + 1), ShiftedLabel{0, true}}});
        if (below && in_next) m.push_back({"14", {mu, ShiftedLabel{j + 1, true}}});
    }
    return m;
}

inline ShiftedGrowth shifted_growth(const Word& w)
{
    auto g = detail::empty_diagram<StrictPartition, ShiftedLabel>(w);
    for (int t = 1; t <= g.rows; ++t)
        for (int s = 1; s <= g.cols; ++s) {
            auto ms = shifted_rules(g.grid[t - 1][s - 1], g.grid[t][s - 1], g.grid[t - 1][s], g.has_x(t, s),
                                    detail::lookup(g.h, t - 1, s));
            const auto& r = detail::resolve(ms, detail::square_name(t, s));
            g.grid[t][s] = r.out.gamma;
            if (r.out.label) g.h[{t, s}] = *r.out.label;
            g.rule[t - 1][s - 1] = r.rule;
        }
    return g;
}

struct ShiftedDecayOut {
    StrictPartition lam;
    bool x = false;
    std::optional<ShiftedLabel> label;
    bool operator==(const ShiftedDecayOut&) const = default;
};

inline std::vector<detail::Match<ShiftedDecayOut>> shifted_decay_rules(const StrictPartition& gam,
                                                                       const StrictPartition& mu,
                                                                       const StrictPartition& nu,
                                                                       std::optional<ShiftedLabel> tl)
{
    std::vector<detail::Match<ShiftedDecayOut>> m;
    const CellSet G = shifted_cells(gam), M = shifted_cells(mu), N = shifted_cells(nu);
    const bool mu_in_gam = std::includes(G.begin(), G.end(), M.begin(), M.end());
    const bool nu_in_mu = std::includes(M.begin(), M.end(), N.begin(), N.end());
    const CellSet gm = skew_cells(G, M);
    auto remove_col = [](const StrictPartition& p, int j, Cell& removed) {
        CellSet c = shifted_cells(p);
        removed = {shifted_col_bottom(p, j), j};
        c.erase(removed);
        return shape_from_cells(c);
    };
    const std::optional<ShiftedLabel> none;

    if (gm.size() == 1 && gm.begin()->row == 1 && mu_in_gam && !tl && nu_in_mu && gam != nu)
        m.push_back({"R1", {nu, true, none}});
    if (gam == mu && tl == ShiftedLabel{1, false} && part(mu, 1) == part(nu, 1) + 1)
        m.push_back({"R2", {nu, true, none}});
    if (gam == mu && !tl) m.push_back({"R3", {nu, false, none}});
    if (gam == nu) m.push_back({"R3", {mu, false, tl}});
    if (!nu_in_mu) {
        CellSet both;
        std::set_intersection(M.begin(), M.end(), N.begin(), N.end(), std::inserter(both, both.end()));
        m.push_back({"R4", {shape_from_cells(both), false, tl}});
    }
    if (!m.empty()) return m;

    const CellSet skew = skew_cells(M, N);
    auto row_has = [&](int r) {
        return std::any_of(skew.begin(), skew.end(), [r](const Cell& c) { return c.row == r; });
    };
    auto col_has = [&](int j) {
        return std::any_of(skew.begin(), skew.end(), [j](const Cell& c) { return c.col == j; });
    };
    if (gm.size() == 1 && mu_in_gam) {
        const Cell box = *gm.begin();
        if (!tl && box.row > 1) {
            const int i = box.row - 1;
            if (!row_has(i))
                m.push_back({"R5", {remove_from_row(nu, i), false, none}});
            else
                m.push_back({"R11", {nu, false, ShiftedLabel{i, false}}});
        }
        if (tl == ShiftedLabel{0, true} && box.col > 1) {
            const int j = box.col - 1;
            if (!col_has(j)) {
                Cell removed;
                StrictPartition lam = remove_col(nu, j, removed);
                std::optional<ShiftedLabel> bl;
                if (removed.row != removed.col) bl = ShiftedLabel{0, true};
                m.push_back({"R7", {lam, false, bl}});
            } else {
                m.push_back({"R15", {nu, false, ShiftedLabel{j, true}}});
            }
        }
        return m;
    }
    if (gam == mu && tl && !tl->column && tl->index >= 1) {
        const int i = tl->index - 1;
        if (!row_has(i + 1)) {
            m.push_back({"R9", {nu, false, ShiftedLabel{i + 1, false}}});
        } else {
            const int j = i + part(nu, i) - 1;
            if (skew.count({i + 1, j}) || skew.count({i, j + 1}))
                m.push_back({"R10", {nu, false, ShiftedLabel{i, false}}});
            else
                m.push_back({"R6", {remove_from_row(nu, i), false, none}});
        }
        return m;
    }
    if (gam == mu && tl && tl->column && tl->index > 1) {
        const int j = tl->index - 1;
        const bool has = col_has(j + 1);
        const int r0 = shifted_col_bottom(nu, j);
        const bool r12 = shifted_col_bottom(mu, j + 1) == static_cast<int>(mu.size()) &&
                         static_cast<int>(mu.size()) == j && skew.count({j, j + 1});
        const bool r14 = has && r0 != j && (skew.count({r0, j + 1}) || skew.count({r0 + 1, j}));
        if (r12) m.push_back({"R12", {nu, false, ShiftedLabel{static_cast<int>(nu.size()), false}}});
        if (!has) m.push_back({"R13", {nu, false, ShiftedLabel{j + 1, true}}});
        if (r14) m.push_back({"R14", {nu, false, ShiftedLabel{j, true}}});
        if (has && !r12 && !r14) {
            Cell removed;
            StrictPartition lam = remove_col(nu, j, removed);
            std::optional<ShiftedLabel> bl;
            if (removed.row != removed.col) bl = ShiftedLabel{0, true};
            m.push_back({"R8", {lam, false, bl}});
        }
    }
    return m;
}

// ---- KYF growth ----------------------------------------------------------------

struct KyfOut {
    Snake gamma;
    std::optional<int> top;
    std::optional<int> right;
    bool operator==(const KyfOut&) const = default;
};

inline std::vector<detail::Match<KyfOut>> kyf_rules(const Snake& lam, const Snake& mu, const Snake& nu, bool x,
                                                     std::optional<int> bl, std::optional<int> ll)
{
    std::vector<detail::Match<KyfOut>> m;
    if (x) {
        if (lam.empty() && nu.empty() && mu == "1") m.push_back({"1", {"1", 1, std::nullopt}});
        if (lam == mu && mu == nu) m.push_back({"2", {"1" + lam, std::nullopt, std::nullopt}});
        if (mu == "2" + lam && ll) m.push_back({"3", {"2" + lam, *ll + 1, 1}});
        if (mu != lam && mu != "2" + lam && mu != "1") m.push_back({"4", {"2" + lam, std::nullopt, 1}});
        if (mu == "2" + lam && !ll) m.push_back({"4", {"2" + lam, std::nullopt, 1}});
        return m;
    }
    if (mu == lam) m.push_back({"5", {nu, bl, std::nullopt}});
    if (nu == lam && !bl) m.push_back({"5", {mu, std::nullopt, ll}});
    if (!m.empty()) return m;
    if (nu == lam && bl == 1) {
        m.push_back({"6", {mu, 1, ll}});
        return m;
    }
    m.push_back({"7", {"2" + lam, ll ? std::optional<int>(*ll + 1) : std::nullopt, bl}});
    return m;
}

inline KyfGrowth kyf_growth(const Word& w)
{
    auto g = detail::empty_diagram<Snake, int>(w);
    for (int t = 1; t <= g.rows; ++t)
        for (int s = 1; s <= g.cols; ++s) {
            auto ms = kyf_rules(g.grid[t - 1][s - 1], g.grid[t][s - 1], g.grid[t - 1][s], g.has_x(t, s),
                                detail::lookup(g.h, t - 1, s), detail::lookup(g.v, t, s - 1));
            const auto& r = detail::resolve(ms, detail::square_name(t, s));
            g.grid[t][s] = r.out.gamma;
            if (r.out.top) g.h[{t, s}] = *r.out.top;
            if (r.out.right) g.v[{t, s}] = *r.out.right;
            g.rule[t - 1][s - 1] = r.rule;
        }
    return g;
}

struct KyfDecayOut {
    Snake lam;
    bool x = false;
    std::optional<int> bottom;
    std::optional<int> left;
    bool operator==(const KyfDecayOut&) const = default;
};

// The last rule is a fallback and is used only when no other rule fires.
inline std::vector<detail::Match<KyfDecayOut>> kyf_decay_rules(const Snake& gam, const Snake& mu, const Snake& nu,
                                                               std::optional<int> tl, std::optional<int> rl)
{
    std::vector<detail::Match<KyfDecayOut>> m;
    const std::optional<int> none;
    if (mu == "1" && gam == "1" && nu.empty() && tl == 1) m.push_back({"R1", {"", true, none, none}});
    if (mu == nu && gam == "1" + mu) m.push_back({"R2", {mu, true, none, none}});
    if (mu == gam && gam == "2" + nu && tl && *tl >= 2 && rl == 1) m.push_back({"R3", {nu, true, none, *tl - 1}});
    if (gam == "2" + nu && rl == 1 && gam != mu) m.push_back({"R4", {nu, true, none, none}});
    if (gam == nu) m.push_back({"R5", {mu, false, tl, none}});
    if (gam == mu && tl == 1 && !nu.empty()) m.push_back({"R6", {nu, false, 1, rl}});
    if (gam == mu && !tl) m.push_back({"R5", {nu, false, none, rl}});
    if (!m.empty()) return m;
    if (gam.empty() || gam[0] != '2') return m;
    m.push_back({"R7", {gam.substr(1), false, rl, tl ? std::optional<int>(*tl - 1) : none}});
    return m;
}

// ---- decoding -------------------------------------------------------------------

struct HeckeDecoded {
    IncreasingTableau P;
    SetValuedTableau Q;
};

inline HeckeDecoded decode_hecke(const HeckeGrowth& g)
{
    HeckeDecoded d;
    for (int t = 1; t <= g.rows; ++t) {
        const Partition& sh = g.grid[t][g.cols];
        d.P.resize(sh.size());
        for (std::size_t r = 0; r < sh.size(); ++r) d.P[r].resize(sh[r], t);
    }
    for (int s = 1; s <= g.cols; ++s) {
        const Partition &a = g.grid[g.rows][s - 1], &b = g.grid[g.rows][s];
        if (a != b) {
            const Cell c = *skew_cells(young_cells(b), young_cells(a)).begin();
            if (c.row > static_cast<int>(d.Q.size())) d.Q.emplace_back();
            d.Q[c.row - 1].push_back({s});
        } else {
            const int r = g.h.at({g.rows, s});
            d.Q[r - 1].back().push_back(s);
        }
    }
    return d;
}

inline RskResult decode_rsk(const RskGrowth& g)
{
    RskResult d;
    for (int t = 1; t <= g.rows; ++t) {
        const Cell c = *skew_cells(young_cells(g.grid[t][g.cols]), young_cells(g.grid[t - 1][g.cols])).begin();
        if (c.row > static_cast<int>(d.P.size())) d.P.emplace_back();
        d.P[c.row - 1].push_back(t);
    }
    for (int s = 1; s <= g.cols; ++s) {
        const Cell c = *skew_cells(young_cells(g.grid[g.rows][s]), young_cells(g.grid[g.rows][s - 1])).begin();
        if (c.row > static_cast<int>(d.Q.size())) d.Q.emplace_back();
        d.Q[c.row - 1].push_back(s);
    }
    return d;
}

inline ShiftedResult decode_shifted(const ShiftedGrowth& g)
{
    ShiftedResult d;
    for (int t = 1; t <= g.rows; ++t) {
        const StrictPartition& sh = g.grid[t][g.cols];
        d.P.resize(sh.size());
        for (std::size_t r = 0; r < sh.size(); ++r) d.P[r].resize(sh[r], t);
    }
    for (int s = 1; s <= g.cols; ++s) {
        const StrictPartition &a = g.grid[g.rows][s - 1], &b = g.grid[g.rows][s];
        auto lab = detail::lookup(g.h, g.rows, s);
        if (a != b) {
            const Cell c = *skew_cells(shifted_cells(b), shifted_cells(a)).begin();
            if (c.row > static_cast<int>(d.Q.size())) d.Q.emplace_back();
            d.Q[c.row - 1].push_back({Entry{s, lab && lab->column}});
        } else {
            if (!lab || !lab->index) throw std::invalid_argument("missing recording label");
            int r = lab->index;
            if (lab->column) r = shifted_col_bottom(b, lab->index);
            d.Q[r - 1].back().push_back(Entry{s, lab->column});
        }
    }
    return d;
}

inline KyfResult decode_kyf(const KyfGrowth& g)
{
    KyfResult d;
    for (int t = 1; t <= g.rows; ++t) {
        const Snake &a = g.grid[t - 1][g.cols], &b = g.grid[t][g.cols];
        if (a == b) continue;
        if (snake_rank(b) == snake_rank(a) + 2) {
            const int col = g.v.at({t, g.cols});
            d.P.insert(d.P.begin() + (col - 1), std::vector<int>{t, t});
        } else {
            detail::kyf_place(d.P, snake_added_cell(a, b), t);
        }
    }
    for (int s = 1; s <= g.cols; ++s) {
        const Snake &a = g.grid[g.rows][s - 1], &b = g.grid[g.rows][s];
        if (a != b)
            detail::kyf_place(d.Q, snake_added_cell(a, b), LabelSet{s});
        else
            d.Q[g.h.at({g.rows, s}) - 1].back().push_back(s);
    }
    return d;
}

// ---- decay ---------------------------------------------------------------------

namespace detail {
template <class Shape, class Label, class RuleFn>
GrowthDiagram<Shape, Label> run_decay(const GrowthBoundary<Shape, Label>& b, RuleFn rules)
{
    if (static_cast<int>(b.top.size()) != b.cols + 1 || static_cast<int>(b.right.size()) != b.rows + 1)
        throw std::invalid_argument("boundary lengths do not match its dimensions");
    if (b.top.back() != b.right.back()) throw std::invalid_argument("top and right boundaries disagree at the corner");
    GrowthDiagram<Shape, Label> g;
    g.rows = b.rows;
    g.cols = b.cols;
    g.word.assign(b.cols, 0);
    std::vector<std::vector<std::optional<Shape>>> grid(b.rows + 1, std::vector<std::optional<Shape>>(b.cols + 1));
    for (int s = 0; s <= b.cols; ++s) {
        grid[b.rows][s] = b.top.at(s);
        grid[0][s] = Shape{};
    }
    for (int t = 0; t <= b.rows; ++t) {
        grid[t][b.cols] = b.right.at(t);
        grid[t][0] = Shape{};
    }
    for (const auto& [s, l] : b.top_labels) g.h[{b.rows, s}] = l;
    for (const auto& [t, l] : b.right_labels) g.v[{t, b.cols}] = l;
    g.rule.assign(b.rows, std::vector<std::string>(b.cols));
    for (int t = b.rows; t >= 1; --t)
        for (int s = b.cols; s >= 1; --s) {
            const std::string where = square_name(t, s);
            const auto& out = rules(*grid[t][s], *grid[t][s - 1], *grid[t - 1][s], lookup(g.h, t, s),
                                    lookup(g.v, t, s), where, g.rule[t - 1][s - 1]);
            if (grid[t - 1][s - 1] && *grid[t - 1][s - 1] != out.lam)
                throw std::invalid_argument("boundary is not realizable at " + where);
            grid[t - 1][s - 1] = out.lam;
            if (out.x) {
                if (g.word[s - 1]) throw std::invalid_argument("two crosses in one column");
                g.word[s - 1] = t;
            }
            out.store(g, t, s);
        }
    for (int s = 0; s < b.cols; ++s)
        if (!g.word[s]) throw std::invalid_argument("column without a cross");
    g.grid.assign(b.rows + 1, std::vector<Shape>(b.cols + 1));
    for (int t = 0; t <= b.rows; ++t)
        for (int s = 0; s <= b.cols; ++s) g.grid[t][s] = *grid[t][s];
    return g;
}

struct ShiftedDecayStep {
    StrictPartition lam;
    bool x;
    std::optional<ShiftedLabel> label;
    void store(ShiftedGrowth& g, int t, int s) const
    {
        if (label) g.h[{t - 1, s}] = *label;
    }
};

struct KyfDecayStep {
    Snake lam;
    bool x;
    std::optional<int> bottom, left;
    void store(KyfGrowth& g, int t, int s) const
    {
        if (bottom) g.h[{t - 1, s}] = *bottom;
        if (left) g.v[{t, s - 1}] = *left;
    }
};
}  // namespace detail

// Rebuilds the whole diagram, and hence the word, from the boundary.
namespace detail {
// The local rules only see one square at a time, so a boundary that passes
// them can still disagree with the diagram its word grows.
template <class Shape, class Label>
void check_regrowth(const GrowthDiagram<Shape, Label>& grown, const GrowthBoundary<Shape, Label>& b)
{
    const GrowthBoundary<Shape, Label> again = boundary(grown);
    if (again.top != b.top || again.right != b.right || again.top_labels != b.top_labels ||
        again.right_labels != b.right_labels)
        throw std::invalid_argument("boundary is not realizable by any word");
}
}  // namespace detail

inline ShiftedGrowth shifted_decay(const GrowthBoundary<StrictPartition, ShiftedLabel>& b)
{
    ShiftedGrowth g = detail::run_decay(b, [](const StrictPartition& gam, const StrictPartition& mu, const StrictPartition& nu,
                                   std::optional<ShiftedLabel> tl, std::optional<int>, const std::string& where,
                                   std::string& name) {
        auto ms = shifted_decay_rules(gam, mu, nu, tl);
        const auto& r = detail::resolve(ms, where);
        name = r.rule;
        return detail::ShiftedDecayStep{r.out.lam, r.out.x, r.out.label};
    });
    detail::check_regrowth(shifted_growth(g.word), b);
    return g;
}

inline KyfGrowth kyf_decay(const GrowthBoundary<Snake, int>& b)
{
    KyfGrowth g = detail::run_decay(b, [](const Snake& gam, const Snake& mu, const Snake& nu, std::optional<int> tl,
                                   std::optional<int> rl, const std::string& where, std::string& name) {
        auto ms = kyf_decay_rules(gam, mu, nu, tl, rl);
        const auto& r = detail::resolve(ms, where);
        name = r.rule;
        return detail::KyfDecayStep{r.out.lam, r.out.x, r.out.bottom, r.out.left};
    });
    detail::check_regrowth(kyf_growth(g.word), b);
    return g;
}

// Hecke decay goes through reverse insertion on the decoded pair.
inline Word hecke_decay(const HeckeGrowth& g)
{
    HeckeDecoded d = decode_hecke(g);
    return hecke_reverse_word(d.P, d.Q);
}

}  // namespace dfg
