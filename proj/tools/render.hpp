#pragma once

// Text, JSON and DOT renderings for the dfg command line tool. The library
// itself returns structured values only.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfg/enumeration.hpp"
#include "dfg/graphs.hpp"
#include "dfg/growth.hpp"
#include "dfg/insertion.hpp"
#include "dfg/tableaux.hpp"

namespace dfg::render {

using json = nlohmann::ordered_json;

// ---- cells ------------------------------------------------------------------

inline std::string cell_text(int v) { return std::to_string(v); }
inline std::string cell_text(const Entry& e) { return std::to_string(e.value) + (e.primed ? "'" : ""); }
inline std::string cell_text(const LabelSet& s) { return "{" + join(s) + "}"; }
inline std::string cell_text(const EntrySet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + cell_text(s[i]);
    return out + "}";
}

inline json cell_json(int v) { return v; }
inline json cell_json(const LabelSet& s) { return s; }
inline json cell_json(const EntrySet& s)
{
    json a = json::array();
    for (const Entry& e : s) a.push_back(std::to_string(e.value) + (e.primed ? "p" : ""));
    return a;
}

// ---- tableaux -----------------------------------------------------------------

template <class T>
std::string ascii_rows(const std::vector<std::vector<T>>& t, bool shifted)
{
    if (t.empty()) return "()\n";
    std::size_t w = 1;
    for (const auto& r : t)
        for (const auto& c : r) w = std::max(w, cell_text(c).size());
    std::string out;
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::string line = shifted ? std::string(r * (w + 1), ' ') : std::string();
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            std::string s = cell_text(t[r][c]);
            line += (c ? " " : "") + s + std::string(w - s.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

// Snake columns drawn as two text rows, top row first.
template <class T>
std::string ascii_kyf(const std::vector<std::vector<T>>& cols)
{
    if (cols.empty()) return "()\n";
    std::size_t w = 1;
    for (const auto& c : cols)
        for (const auto& x : c) w = std::max(w, cell_text(x).size());
    std::string top, bottom;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string b = cell_text(cols[i][0]);
        const std::string a = cols[i].size() > 1 ? cell_text(cols[i][1]) : std::string(".");
        top += (i ? " " : "") + a + std::string(w - a.size(), ' ');
        bottom += (i ? " " : "") + b + std::string(w - b.size(), ' ');
    }
    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    return trim(top) + "\n" + trim(bottom) + "\n";
}

template <class T>
json rows_json(const std::vector<std::vector<T>>& t)
{
    json a = json::array();
    for (const auto& r : t) {
        json row = json::array();
        for (const auto& c : r) row.push_back(cell_json(c));
        a.push_back(row);
    }
    return a;
}

// ---- shapes -----------------------------------------------------------------------

inline std::string shape_text(const Partition& p) { return "(" + join(p) + ")"; }
inline std::string shape_text(const Snake& w) { return w.empty() ? "()" : w; }
inline json shape_json(const Partition& p) { return p; }
inline json shape_json(const Snake& w) { return w; }

inline std::string label_text(int l) { return std::to_string(l); }
inline std::string label_text(const ShiftedLabel& l) { return to_string(l); }
inline json label_json(int l) { return l; }
inline json label_json(const ShiftedLabel& l) { return to_string(l); }

// ---- growth diagrams ------------------------------------------------------------

template <class Shape, class Label>
std::string ascii_growth(const GrowthDiagram<Shape, Label>& g)
{
    std::size_t w = 2, e = 3;
    for (const auto& row : g.grid)
        for (const auto& sh : row) w = std::max(w, shape_text(sh).size());
    for (const auto& [k, l] : g.h) e = std::max(e, label_text(l).size() + 2);
    for (const auto& [k, l] : g.v) w = std::max(w, std::to_string(l).size());
    auto pad = [](std::string s, std::size_t n) { return s + std::string(n > s.size() ? n - s.size() : 0, ' '); };
    auto trim = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };
    std::string out;
    for (int t = g.rows; t >= 0; --t) {
        std::string line;
        for (int s = 0; s <= g.cols; ++s) {
            line += pad(shape_text(g.grid[t][s]), w);
            if (s == g.cols) break;
            std::string edge(e, '-');
            if (auto it = g.h.find({t, s + 1}); it != g.h.end()) {
                const std::string l = label_text(it->second);
                edge.replace(1, l.size(), l);
            }
            line += " " + edge + " ";
        }
        out += trim(line) + "\n";
        if (t == 0) break;
        line.clear();
        for (int s = 0; s <= g.cols; ++s) {
            std::string bar = "|";
            if (auto it = g.v.find({t, s}); it != g.v.end()) bar = std::to_string(it->second);
            line += pad(bar, w);
            if (s == g.cols) break;
            std::string inside(e, ' ');
            if (g.has_x(t, s + 1)) inside[e / 2] = 'X';
            line += " " + inside + " ";
        }
        out += trim(line) + "\n";
    }
    return out;
}

template <class Shape, class Label>
json growth_json(const GrowthDiagram<Shape, Label>& g)
{
    json j;
    j["rows"] = g.rows;
    j["cols"] = g.cols;
    json grid = json::array();
    for (const auto& row : g.grid) {
        json r = json::array();
        for (const auto& sh : row) r.push_back(shape_json(sh));
        grid.push_back(r);
    }
    j["grid"] = grid;
    j["x"] = g.word;
    json h = json::object(), v = json::object();
    for (const auto& [k, l] : g.h) h[std::to_string(k.first) + "," + std::to_string(k.second)] = label_json(l);
    for (const auto& [k, l] : g.v) v[std::to_string(k.first) + "," + std::to_string(k.second)] = l;
    j["h"] = h;
    j["v"] = v;
    json rules = json::array();
    for (const auto& row : g.rule) rules.push_back(row);
    j["rules"] = rules;
    return j;
}

// ---- graphs ----------------------------------------------------------------------

inline std::string int_text(const Int& m) { return m.str(); }

inline json graph_json(const FilteredGraph& g)
{
    json j;
    j["family"] = g.family;
    if (g.family == "shifted") j["shifted"] = true;
    j["construction"] = g.construction;
    j["max_rank"] = g.max_rank;
    json verts = json::array();
    for (int x = 0; x < g.size(); ++x) verts.push_back({{"key", g.keys[x]}, {"rank", g.rank[x]}});
    j["vertices"] = verts;
    json up = json::array(), down = json::array();
    // Multiplicities are emitted as strings when they exceed 64 bits.
    auto mult = [](const Int& m) -> json {
        if (m <= Int(INT64_MAX)) return static_cast<long long>(m);
        return m.str();
    };
    for (int x = 0; x < g.size(); ++x)
        for (const auto& [y, m] : g.up[x]) up.push_back({g.keys[x], g.keys[y], mult(m)});
    for (int y = 0; y < g.size(); ++y)
        for (const auto& [x, m] : g.down[y]) down.push_back({g.keys[y], g.keys[x], mult(m)});
    j["up"] = up;
    j["down"] = down;
    return j;
}

inline std::string graph_ascii(const FilteredGraph& g)
{
    std::ostringstream os;
    os << "family " << g.family << ", construction " << g.construction << ", ranks <= " << g.max_rank << ", "
       << g.size() << " vertices\n";
    for (int x = 0; x < g.size(); ++x) {
        os << g.keys[x] << " [rank " << g.rank[x] << "]\n";
        if (!g.up[x].empty()) {
            os << "  up:";
            for (const auto& [y, m] : g.up[x]) os << " " << g.keys[y] << (m == 1 ? "" : "*" + int_text(m));
            os << "\n";
        }
        if (!g.down[x].empty()) {
            os << "  down:";
            for (const auto& [y, m] : g.down[x]) os << " " << g.keys[y] << (m == 1 ? "" : "*" + int_text(m));
            os << "\n";
        }
    }
    return os.str();
}

// One DOT edge per unit of multiplicity, each carrying label=m.
inline std::string graph_dot(const FilteredGraph& g)
{
    std::ostringstream os;
    os << "digraph dfg {\n  rankdir=BT;\n";
    for (int x = 0; x < g.size(); ++x) os << "  \"" << g.keys[x] << "\" [rank_level=" << g.rank[x] << "];\n";
    auto emit = [&](int a, int b, const Int& m, const char* style) {
        if (m > 10000) throw std::length_error("multiplicity too large for DOT output");
        const long long n = static_cast<long long>(m);
        for (long long i = 0; i < n; ++i)
            os << "  \"" << g.keys[a] << "\" -> \"" << g.keys[b] << "\" [" << style << ",label=" << n << "];\n";
    };
    for (int x = 0; x < g.size(); ++x)
        for (const auto& [y, m] : g.up[x]) emit(x, y, m, "color=blue");
    for (int y = 0; y < g.size(); ++y)
        for (const auto& [x, m] : g.down[y]) emit(y, x, m, "color=red,style=dashed");
    os << "}\n";
    return os.str();
}

inline std::string duality_text(const FilteredGraph& g, const DualityReport& r)
{
    std::ostringstream os;
    os << "duality DU - UD = " << r.beta << "D + " << r.alpha << "I on ranks <= " << r.checked_max_rank << " ("
       << r.checked << " vertices): " << (r.ok ? "ok" : "FAILED") << "\n";
    for (const auto& [x, vec] : r.residual) {
        os << "  residual at " << g.keys[x] << ":";
        for (const auto& [y, c] : vec) os << " " << int_text(c) << "*" << g.keys[y];
        os << "\n";
    }
    return os.str();
}

inline std::string identity_table(const IdentityReport& r)
{
    std::size_t w = 9, a = 10;
    for (const auto& row : r.rows) {
        w = std::max(w, row.parameter.size());
        a = std::max(a, int_text(row.graph_side).size());
    }
    auto pad = [](std::string s, std::size_t n) { return s + std::string(n > s.size() ? n - s.size() : 0, ' '); };
    std::ostringstream os;
    os << "identity " << r.name << ", n <= " << r.n_max << "\n";
    os << pad("parameter", w) << "  " << pad("graph", a) << "  oracle\n";
    for (const auto& row : r.rows)
        os << pad(row.parameter, w) << "  " << pad(int_text(row.graph_side), a) << "  " << int_text(row.oracle)
           << (row.graph_side == row.oracle ? "" : "  MISMATCH") << "\n";
    os << (r.ok ? "ok" : "FAILED") << "\n";
    return os.str();
}

}  // namespace dfg::render
