#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "dfg/graphs.hpp"

using namespace dfg;

namespace {

std::string P(const Partition& p) { return key_young(p); }
std::string S(const StrictPartition& p) { return key_shifted(p); }
std::string F(const Snake& w) { return key_snake(w); }

VertexVector vec(const FilteredGraph& g, std::initializer_list<std::pair<std::string, int>> terms)
{
    VertexVector v;
    for (const auto& [k, c] : terms) v[g.id(k)] += c;
    return v;
}

Partition parse_parts(const std::string& key)
{
    Partition p;
    std::stringstream ss(key.substr(2));
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) p.push_back(std::stoi(tok));
    return p;
}

// Order ideal comparison computed without the graph: containment of cells,
// or for snakes the transitive closure of the recursive cover relation.
using Leq = std::function<bool(int, int)>;

Leq containment_order(const FilteredGraph& g, bool shifted)
{
    std::vector<CellSet> cells;
    for (const auto& key : g.keys) {
        const Partition p = parse_parts(key);
        cells.push_back(shifted ? shifted_cells(p) : young_cells(p));
    }
    return [cells](int x, int y) {
        return std::includes(cells[y].begin(), cells[y].end(), cells[x].begin(), cells[x].end());
    };
}

Leq snake_order(const FilteredGraph& g)
{
    const int n = g.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.rank[a] < g.rank[b]; });
    for (int y : order) {
        leq[y][y] = 1;
        for (int z = 0; z < n; ++z)
            if (g.rank[z] + 1 == g.rank[y] && snake_covers(g.keys[z].substr(2), g.keys[y].substr(2)))
                for (int x = 0; x < n; ++x)
                    if (leq[x][z]) leq[x][y] = 1;
    }
    return [leq](int x, int y) { return leq[x][y] != 0; };
}

// Philip Hall: mu(x, y) = sum over chains x = z0 < ... < zk = y of (-1)^k,
// enumerated one chain at a time.
Int hall_mobius(const FilteredGraph& g, const Leq& leq, int x, int y)
{
    Int total = 0;
    std::function<void(int, int)> walk = [&](int z, int len) {
        if (z == y) {
            total += (len % 2 ? -1 : 1);
            return;
        }
        for (int w = 0; w < g.size(); ++w)
            if (w != z && g.rank[w] > g.rank[z] && leq(z, w) && leq(w, y)) walk(w, len + 1);
    };
    walk(x, 0);
    return total;
}

Int down_or_zero(const FilteredGraph& g, int y, int x)
{
    auto it = g.down[y].find(x);
    return it == g.down[y].end() ? Int(0) : it->second;
}

Int loops(const FilteredGraph& g, int x)
{
    auto it = g.up[x].find(x);
    return it == g.up[x].end() ? Int(0) : it->second;
}

}  // namespace

// ---- base lattices --------------------------------------------------------------

TEST(Graphs, YoungBase)
{
    const FilteredGraph g = build_dual_graded(Family::young, 3);
    std::set<std::string> keys(g.keys.begin(), g.keys.end());
    EXPECT_EQ(keys, (std::set<std::string>{"p:", "p:1", "p:2", "p:1,1", "p:3", "p:2,1", "p:1,1,1"}));
    int edges = 0, brute = 0;
    for (int x = 0; x < g.size(); ++x)
        if (g.rank[x] <= 2) edges += static_cast<int>(g.up[x].size());
    for (int n = 0; n <= 2; ++n)
        for (const auto& p : partitions_of(n))
            for (const auto& q : partitions_of(n + 1)) brute += covers_young(p, q);
    EXPECT_EQ(edges, brute);
    EXPECT_EQ(edges, 7);
    EXPECT_TRUE(check_invariants(g).empty());
}

TEST(Graphs, ShiftedBase)
{
    const FilteredGraph g = build_dual_graded(Family::shifted, 5);
    EXPECT_EQ(g.down_mult(S({2}), S({1})), 2);
    EXPECT_EQ(g.down_mult(S({2, 1}), S({2})), 1);
    EXPECT_EQ(g.down_mult(S({3, 1}), S({2, 1})), 2);
    EXPECT_EQ(g.down_mult(S({3, 1}), S({3})), 1);
    EXPECT_EQ(g.down_mult(S({1}), S({})), 1);
    EXPECT_EQ(g.up_mult(S({2}), S({2, 1})), 1);
}

TEST(Graphs, YoungFibonacciBase)
{
    const FilteredGraph g = build_dual_graded(Family::yf, 3);
    std::set<std::string> keys(g.keys.begin(), g.keys.end());
    EXPECT_EQ(keys, (std::set<std::string>{"f:", "f:1", "f:2", "f:11", "f:12", "f:21", "f:111"}));
}

TEST(Graphs, BasesAreDualGraded)
{
    for (Family f : {Family::young, Family::shifted, Family::yf, Family::fibonacci}) {
        const FilteredGraph g = build_dual_graded(f, 8);
        EXPECT_TRUE(check_invariants(g).empty()) << family_name(f);
        EXPECT_TRUE(verify_duality(g, 1, 0).ok) << family_name(f);
    }
}

TEST(Graphs, ApplyOperator)
{
    const FilteredGraph g = build_dual_graded(Family::young, 5);
    EXPECT_EQ(apply_operator(g, "U", g.unit(P({2, 1}))), vec(g, {{"p:3,1", 1}, {"p:2,2", 1}, {"p:2,1,1", 1}}));
    EXPECT_EQ(apply_operator(g, "D", g.unit(P({2, 1}))), vec(g, {{"p:2", 1}, {"p:1,1", 1}}));
    EXPECT_TRUE(apply_operator(g, "D", g.unit(P({}))).empty());
    EXPECT_EQ(apply_operator(g, "DU", g.unit(P({}))), vec(g, {{"p:", 1}}));
    EXPECT_THROW(apply_operator(g, "UU", g.unit(P({2, 1, 1}))), TruncationError);
    EXPECT_THROW(apply_operator(g, "X", g.unit(P({}))), std::invalid_argument);
}

// ---- Möbius function -------------------------------------------------------------------

TEST(Graphs, MobiusMatchesHallChainCount)
{
    const FilteredGraph young = build_dual_graded(Family::young, 7);
    const FilteredGraph shifted = build_dual_graded(Family::shifted, 7);
    const FilteredGraph yf = build_dual_graded(Family::yf, 7);
    const std::vector<std::pair<const FilteredGraph*, Leq>> cases{
        {&young, containment_order(young, false)},
        {&shifted, containment_order(shifted, true)},
        {&yf, snake_order(yf)}};
    for (const auto& [g, leq] : cases) {
        MobiusTable mu(*g);
        const FilteredGraph m = mobius_construction(*g);
        int intervals = 0;
        for (int x = 0; x < g->size(); ++x)
            for (int y = 0; y < g->size(); ++y) {
                ASSERT_EQ(mu.less_equal(x, y), leq(x, y)) << g->keys[x] << " " << g->keys[y];
                if (!leq(x, y)) continue;
                const Int h = hall_mobius(*g, leq, x, y);
                ASSERT_EQ(mu(x, y), h) << g->keys[x] << " " << g->keys[y];
                if (x != y) {
                    ASSERT_EQ(down_or_zero(m, y, x), abs(h)) << g->keys[x] << " " << g->keys[y];
                }
                ++intervals;
            }
        EXPECT_GT(intervals, 100);
    }
}

TEST(Graphs, YoungMobiusIsRookStrip)
{
    const FilteredGraph g = build_dual_graded(Family::young, 8);
    MobiusTable mu(g);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& nu : partitions_of(k)) {
                    const Int expect = is_rook_strip(lam, nu) ? ((n - k) % 2 ? -1 : 1) : 0;
                    ASSERT_EQ(mu(g.id(P(nu)), g.id(P(lam))), expect) << join(lam) << "/" << join(nu);
                }
}

TEST(Graphs, ShiftedMobiusIsDisjointBoxes)
{
    const FilteredGraph g = build_dual_graded(Family::shifted, 8);
    MobiusTable mu(g);
    for (int n = 0; n <= 8; ++n)
        for (const auto& q : strict_partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& p : strict_partitions_of(k)) {
                    Int expect = 0;
                    if (shifted_contains(q, p)) {
                        const CellSet skew = skew_cells(shifted_cells(q), shifted_cells(p));
                        bool disjoint = true;
                        for (const Cell& c : skew)
                            if (skew.count({c.row, c.col + 1}) || skew.count({c.row + 1, c.col})) disjoint = false;
                        if (disjoint) expect = (n - k) % 2 ? -1 : 1;
                    }
                    ASSERT_EQ(mu(g.id(S(p)), g.id(S(q))), expect) << join(q) << "/" << join(p);
                }
}

TEST(Graphs, YoungFibonacciMobiusClosedForm)
{
    const FilteredGraph g = build_dual_graded(Family::yf, 8);
    MobiusTable mu(g);
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
            if (x == y || !mu.less_equal(y, x)) continue;
            const Snake X = g.keys[x].substr(2), Y = g.keys[y].substr(2);
            const Int n = static_cast<int>(snake_down(X).size());
            Int expect = 0;
            if (X == "2" + Y)
                expect = n - 1;
            else if (snake_covers(Y, X))
                expect = -1;
            ASSERT_EQ(mu(y, x), expect) << Y << " " << X;
        }
    EXPECT_EQ(mu(g.id(F("21")), g.id(F("221"))), 2);
}

// ---- constructions --------------------------------------------------------------------

TEST(Graphs, TrivialConstruction)
{
    const FilteredGraph g = trivial_construction(build_dual_graded(Family::young, 4));
    EXPECT_EQ(loops(g, g.id(P({2, 1}))), 3);
    EXPECT_EQ(loops(g, g.id(P({}))), 0);
    for (int x = 0; x < g.size(); ++x) EXPECT_EQ(loops(g, x), g.rank[x]);
    EXPECT_TRUE(verify_duality(g).ok);
}

TEST(Graphs, MobiusConstructionExamples)
{
    const FilteredGraph young = mobius_construction(build_dual_graded(Family::young, 5));
    EXPECT_EQ(loops(young, young.id(P({2, 1}))), 2);
    EXPECT_EQ(young.down_mult(P({2, 1}), P({1})), 1);
    // one loop per removable corner
    for (int y = 0; y < young.size(); ++y)
        EXPECT_EQ(loops(young, y), static_cast<int>(corners(parse_parts(young.keys[y])).inner.size())) << young.keys[y];

    const FilteredGraph yf = build_graph("yf", "mobius", 5);
    EXPECT_EQ(yf.down_mult(F("221"), F("21")), 2);
    EXPECT_EQ(loops(yf, yf.id(F("221"))), 3);

    const FilteredGraph sh = build_graph("shifted", "mobius", 5);
    EXPECT_EQ(sh.down_mult(S({3, 1}), S({2})), 1);
    const std::map<StrictPartition, int> known_loops{{{1}, 1}, {{2}, 2}, {{2, 1}, 1}, {{3}, 2},
                                                      {{3, 1}, 3}, {{3, 2}, 2}, {{4, 1}, 3}};
    for (const auto& [p, l] : known_loops) EXPECT_EQ(loops(sh, sh.id(S(p))), l) << join(p);
}

TEST(Graphs, PieriYoung)
{
    const FilteredGraph g = pieri_young(6);
    std::set<std::string> from21;
    for (const auto& [x, m] : g.down[g.id(P({2, 1}))]) {
        from21.insert(g.keys[x]);
        EXPECT_EQ(m, 1);
    }
    EXPECT_EQ(from21, (std::set<std::string>{"p:2", "p:1,1", "p:1"}));
    EXPECT_EQ(g.down_mult(P({3}), P({})), 1);
    // every down edge is a nonempty horizontal strip, checked column by column
    for (int y = 0; y < g.size(); ++y) {
        int strips = 0;
        const int n = g.rank[y];
        const Partition lam = parse_parts(g.keys[y]);
        for (int k = 0; k < n; ++k)
            for (const auto& nu : partitions_of(k)) {
                if (!contains(lam, nu)) continue;
                std::set<int> cols;
                bool ok = true;
                for (const Cell& c : skew_cells(young_cells(lam), young_cells(nu))) ok = ok && cols.insert(c.col).second;
                if (ok) ++strips;
            }
        EXPECT_EQ(static_cast<int>(g.down[y].size()), strips) << g.keys[y];
    }
}

TEST(Graphs, PieriShifted)
{
    const FilteredGraph g = pieri_shifted(6);
    EXPECT_EQ(g.down_mult(S({4, 1}), S({2})), 2);
    EXPECT_EQ(g.down_mult(S({1}), S({})), 1);
    // multiplicities on the first six ranks
    const std::vector<std::tuple<StrictPartition, StrictPartition, int>> known{
        {{1}, {}, 1},        {{2}, {1}, 2},       {{3}, {2}, 2},       {{2, 1}, {2}, 1},   {{3, 1}, {2, 1}, 2},
        {{4}, {3}, 2},       {{3, 1}, {3}, 1},    {{4, 1}, {3, 1}, 2}, {{3, 2}, {3, 1}, 2}, {{5}, {4}, 2},
        {{2}, {}, 1},        {{3}, {1}, 2},       {{3}, {}, 1},        {{4}, {2}, 2},      {{4}, {1}, 2},
        {{4}, {}, 1},        {{5}, {3}, 2},       {{5}, {2}, 2},       {{5}, {1}, 2},      {{5}, {}, 1},
        {{3, 1}, {2}, 2},    {{3, 1}, {1}, 1},    {{2, 1}, {1}, 1},    {{3, 2}, {3}, 1},   {{4, 1}, {3}, 2},
        {{4, 1}, {2, 1}, 2}, {{3, 2}, {2}, 1},    {{4, 1}, {4}, 1}};
    for (const auto& [mu, nu, m] : known) EXPECT_EQ(g.down_mult(S(mu), S(nu)), m) << join(mu) << "->" << join(nu);
    // (3,2) -> (2,1) is easy to overlook: the two fillings k'/k' and k'/k of the
    // vertical domino are both legal and duality needs them.
    EXPECT_EQ(g.down_mult(S({3, 2}), S({2, 1})), 2);
    FilteredGraph cut = g;
    cut.down[cut.id(S({3, 2}))].erase(cut.id(S({2, 1})));
    EXPECT_FALSE(verify_duality(cut).ok);
}

TEST(Graphs, PieriShiftedSwapped)
{
    const FilteredGraph g = pieri_shifted(6, true);
    EXPECT_EQ(g.up_mult(S({1}), S({2})), 2);
    EXPECT_EQ(g.up_mult(S({2}), S({2, 1})), 1);
    EXPECT_EQ(g.down_mult(S({2}), S({1})), 1);
    EXPECT_EQ(g.down_mult(S({4, 1}), S({2, 1})), 1);
    const auto rep = verify_duality(g, 1, 2);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(verify_duality(g, 1, 1).ok);
}

TEST(Graphs, PieriFibonacci)
{
    const FilteredGraph g = pieri_fibonacci(6);
    EXPECT_EQ(g.down_mult(F("1111"), F("11")), 6);
    EXPECT_EQ(g.down_mult(F("11"), F("1")), 2);
    EXPECT_EQ(g.down_mult(F("1"), F("")), 1);
    std::set<std::string> up1;
    for (const auto& [y, m] : g.up[g.id(F("1"))]) up1.insert(g.keys[y]);
    EXPECT_EQ(up1, (std::set<std::string>{"f:11", "f:2"}));
}

TEST(Graphs, Polynomial)
{
    const FilteredGraph g = polynomial_graph(12);
    EXPECT_EQ(g.down_mult("x:2", "x:1"), 2);
    EXPECT_EQ(g.down_mult("x:2", "x:0"), 1);
    EXPECT_EQ(g.down_mult("x:5", "x:3"), 10);
    EXPECT_TRUE(verify_duality(g).ok);
    EXPECT_EQ(verify_duality(g).checked_max_rank, 11);
}

TEST(Graphs, DualityOfAllConstructions)
{
    const std::vector<std::pair<std::string, std::string>> named{
        {"young", "trivial"}, {"shifted", "trivial"}, {"yf", "trivial"},   {"young", "mobius"},
        {"shifted", "mobius"}, {"yf", "mobius"},      {"young", "pieri"},   {"shifted", "pieri"},
        {"fibonacci", "pieri"}};
    for (const auto& [f, c] : named) {
        const FilteredGraph g = build_graph(f, c, 8);
        EXPECT_TRUE(check_invariants(g).empty()) << f << " " << c;
        const DualityReport rep = verify_duality(g, 1, 1, 7);
        EXPECT_TRUE(rep.ok) << f << " " << c;
        EXPECT_EQ(rep.checked_max_rank, 7);
    }
}

TEST(Graphs, CorruptedGraphFails)
{
    FilteredGraph g = build_graph("young", "mobius", 5);
    const int one = g.id(P({1}));
    g.up[one][one] -= 1;
    if (g.up[one][one] == 0) g.up[one].erase(one);
    const DualityReport rep = verify_duality(g);
    EXPECT_FALSE(rep.ok);
    EXPECT_TRUE(rep.residual.count(one));
}

TEST(Graphs, BuildGraphErrors)
{
    EXPECT_THROW(build_graph("young", "bogus", 3), std::invalid_argument);
    EXPECT_THROW(build_graph("cubes", "none", 3), std::invalid_argument);
    EXPECT_THROW(build_graph("polynomial", "mobius", 3), std::invalid_argument);
}
