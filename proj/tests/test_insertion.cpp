#include <gtest/gtest.h>

#include <map>
#include <set>

#include "common.hpp"
#include "dfg/insertion.hpp"
#include "dfg/tableaux.hpp"

using namespace dfg;
using dfg::testing::all_words;
using dfg::testing::fillings;

namespace {

ShiftedSetValuedTableau primed_rows(std::vector<std::vector<std::vector<std::pair<int, bool>>>> rows)
{
    ShiftedSetValuedTableau t;
    for (auto& r : rows) {
        t.emplace_back();
        for (auto& c : r) {
            EntrySet s;
            for (auto [v, p] : c) s.push_back({v, p});
            t.back().push_back(s);
        }
    }
    return t;
}

}  // namespace

// ---- RSK ------------------------------------------------------------------------

TEST(Rsk, WorkedExamples)
{
    auto a = rsk_insert({1, 4, 2, 5, 2});
    EXPECT_EQ(a.P, (Rows{{1, 2, 2}, {4, 5}}));
    EXPECT_EQ(a.Q, (Rows{{1, 2, 4}, {3, 5}}));
    auto b = rsk_insert({1, 4, 2, 5, 3});
    EXPECT_EQ(b.P, (Rows{{1, 2, 3}, {4, 5}}));
    EXPECT_EQ(b.Q, (Rows{{1, 2, 4}, {3, 5}}));
    auto c = rsk_insert({1});
    EXPECT_EQ(c.P, (Rows{{1}}));
    EXPECT_EQ(c.Q, (Rows{{1}}));
}

TEST(Rsk, InjectiveOnShortWords)
{
    std::set<std::pair<Rows, Rows>> seen;
    const auto words = all_words(6, 4);
    for (const Word& w : words) ASSERT_TRUE(seen.insert({rsk_insert(w).P, rsk_insert(w).Q}).second);
    EXPECT_EQ(seen.size(), words.size());
}

// ---- Hecke --------------------------------------------------------------------------

TEST(Hecke, StepExamples)
{
    const IncreasingTableau y{{1, 2, 3, 5}, {2, 3, 4, 6}, {6}, {7}};
    auto a = hecke_insert_step(y, 3);
    EXPECT_EQ(a.tableau, y);
    EXPECT_EQ(a.terminal, (Cell{4, 1}));
    EXPECT_FALSE(a.added);

    auto b = hecke_insert_step({{2, 4, 6}, {3, 6, 8}, {7}}, 5);
    EXPECT_EQ(b.tableau, (Rows{{2, 4, 5}, {3, 6, 8}, {7, 8}}));
    EXPECT_EQ(b.terminal, (Cell{3, 2}));
    EXPECT_TRUE(b.added);

    auto c = hecke_insert_step({}, 7);
    EXPECT_EQ(c.tableau, (Rows{{7}}));
    EXPECT_EQ(c.terminal, (Cell{1, 1}));
    EXPECT_TRUE(c.added);

    EXPECT_THROW(hecke_insert_step({}, 0), std::invalid_argument);
}

TEST(Hecke, WordExamples)
{
    auto a = hecke_insert_word({1, 5, 1, 3, 3});
    EXPECT_EQ(a.P, (Rows{{1, 3}, {5}}));
    EXPECT_EQ(a.Q, (SetValuedTableau{{{1}, {2, 5}}, {{3, 4}}}));
    auto b = hecke_insert_word({1, 2, 1, 3, 3, 1});
    EXPECT_EQ(b.P, (Rows{{1, 2, 3}, {2}}));
    EXPECT_EQ(b.Q, (SetValuedTableau{{{1}, {2}, {4, 5}}, {{3, 6}}}));
    auto c = hecke_insert_word({1});
    EXPECT_EQ(c.P, (Rows{{1}}));
    EXPECT_EQ(c.Q, (SetValuedTableau{{{1}}}));
}

TEST(Hecke, ReverseExamples)
{
    auto [y, x] = hecke_reverse({{2, 4, 5}, {3, 6, 8}, {7, 8}}, {3, 2}, true);
    EXPECT_EQ(y, (Rows{{2, 4, 6}, {3, 6, 8}, {7}}));
    EXPECT_EQ(x, 5);
    auto [e, z] = hecke_reverse({{7}}, {1, 1}, true);
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(z, 7);
    EXPECT_THROW(hecke_reverse({{1, 2}, {3}}, {1, 1}, true), std::invalid_argument);
    EXPECT_EQ(hecke_reverse_word({{1, 3}, {5}}, {{{1}, {2, 5}}, {{3, 4}}}), (Word{1, 5, 1, 3, 3}));
}

TEST(Hecke, StepRoundTripOverSmallTableaux)
{
    int checked = 0;
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : partitions_of(n))
            for (const Rows& y : fillings(lam, 4, [](const Rows& t) { return validate_increasing(t).empty(); }))
                for (int x = 1; x <= 5; ++x) {
                    const HeckeOutcome o = hecke_insert_step(y, x);
                    ASSERT_TRUE(validate_increasing(o.tableau).empty());
                    auto [back, letter] = hecke_reverse(o.tableau, o.terminal, o.added);
                    ASSERT_EQ(back, y);
                    ASSERT_EQ(letter, x);
                    ++checked;
                }
    EXPECT_GT(checked, 300);
}

TEST(Hecke, WordBijection)
{
    std::map<std::pair<Rows, SetValuedTableau>, Word> seen;
    for (const Word& w : all_words(6, 4)) {
        const HeckeResult r = hecke_insert_word(w);
        ASSERT_TRUE(validate_increasing(r.P).empty());
        ASSERT_TRUE(validate_set_valued(r.Q).empty());
        ASSERT_EQ(shape_of(r.P), shape_of(r.Q));
        ASSERT_EQ(hecke_reverse_word(r.P, r.Q), w);
        ASSERT_TRUE(seen.emplace(std::make_pair(r.P, r.Q), w).second);
    }
}

TEST(Hecke, InitialWordsGiveInitialTableaux)
{
    for (const Word& w : all_words(6, 4)) {
        if (w.empty() || !is_initial(w)) continue;
        const auto r = hecke_insert_word(w);
        std::set<int> entries;
        for (const auto& row : r.P) entries.insert(row.begin(), row.end());
        ASSERT_EQ(static_cast<int>(entries.size()), *entries.rbegin());
    }
}

TEST(Hecke, IdempotentLetters)
{
    for (const Word& w : all_words(4, 3))
        for (int x = 1; x <= 4; ++x) {
            const auto r = hecke_insert_word(w);
            const auto o = hecke_insert_step(r.P, x);
            if (o.added || o.tableau != r.P) continue;
            Word wx = w;
            wx.push_back(x);
            ASSERT_EQ(hecke_insert_word(wx).P, r.P);
        }
}

// ---- shifted Hecke -----------------------------------------------------------------

TEST(Shifted, StepExamples)
{
    auto a = shifted_insert_step({{1, 2}, {4}}, 4);
    EXPECT_EQ(a.tableau, (Rows{{1, 2, 4}, {4}}));
    EXPECT_EQ(a.terminal, (Cell{1, 3}));
    EXPECT_TRUE(a.added);

    auto b = shifted_insert_step({{1, 2, 4}, {3, 5}}, 4);
    EXPECT_EQ(b.tableau, (Rows{{1, 2, 4}, {3, 5}}));
    EXPECT_EQ(b.terminal, (Cell{2, 3}));
    EXPECT_FALSE(b.added);

    // 1 bumps 2 into the empty second row, where it cannot sit below 2.
    auto c = shifted_insert_step({{1, 2}}, 1);
    EXPECT_EQ(c.tableau, (Rows{{1, 2}}));
    EXPECT_EQ(c.terminal, (Cell{1, 2}));
    EXPECT_EQ(c.mode, ShiftedMode::empty_row);

    auto d = shifted_insert_step({{1, 2}}, 4);
    EXPECT_EQ(d.tableau, (Rows{{1, 2, 4}}));
    EXPECT_EQ(d.terminal, (Cell{1, 3}));
    EXPECT_TRUE(d.added);
}

TEST(Shifted, WordExamples)
{
    auto a = shifted_insert_word({4, 2, 1, 1, 2, 3, 2});
    EXPECT_EQ(a.P, (Rows{{1, 2, 3}, {3, 4}}));
    EXPECT_EQ(a.Q, primed_rows({{{{1, false}}, {{2, true}}, {{3, true}, {4, true}}}, {{{5, false}, {6, false}}, {{7, true}}}}));
    auto b = shifted_insert_word({4, 5});
    EXPECT_EQ(b.P, (Rows{{4, 5}}));
    EXPECT_EQ(b.Q, primed_rows({{{{1, false}}, {{2, false}}}}));
    auto c = shifted_insert_word({1});
    EXPECT_EQ(c.P, (Rows{{1}}));
    EXPECT_EQ(c.Q, primed_rows({{{{1, false}}}}));
}

TEST(Shifted, ReverseExamples)
{
    const auto full = shifted_insert_word({4, 2, 1, 1, 2, 3, 2});
    const auto prefix = shifted_insert_word({4, 2, 1, 1, 2, 3});
    auto [y, x] = shifted_reverse(full.P, {2, 3}, true, true);
    EXPECT_EQ(y, prefix.P);
    EXPECT_EQ(x, 2);
    auto [e, one] = shifted_reverse({{1}}, {1, 1}, true, false);
    EXPECT_TRUE(e.empty());
    EXPECT_EQ(one, 1);
}

TEST(Shifted, StepRoundTripOverSmallTableaux)
{
    int checked = 0;
    for (int n = 0; n <= 4; ++n)
        for (const auto& lam : strict_partitions_of(n))
            for (const Rows& y : fillings(lam, 4, [](const Rows& t) { return validate_shifted_increasing(t).empty(); }))
                for (int x = 1; x <= 5; ++x) {
                    const ShiftedOutcome o = shifted_insert_step(y, x);
                    ASSERT_TRUE(validate_shifted_increasing(o.tableau).empty());
                    auto [back, letter] = shifted_reverse(o.tableau, o.terminal, o.added, o.mode != ShiftedMode::row);
                    ASSERT_EQ(back, y);
                    ASSERT_EQ(letter, x);
                    ++checked;
                }
    EXPECT_GT(checked, 100);
}

TEST(Shifted, WordBijection)
{
    std::map<std::pair<Rows, ShiftedSetValuedTableau>, Word> seen;
    for (const Word& w : all_words(6, 4)) {
        const ShiftedResult r = shifted_insert_word(w);
        ASSERT_TRUE(validate_shifted_increasing(r.P).empty());
        ASSERT_TRUE(validate_shifted_set_valued(r.Q).empty());
        ASSERT_EQ(shape_of(r.P), shape_of(r.Q));
        ASSERT_EQ(shifted_reverse_word(r.P, r.Q), w);
        ASSERT_TRUE(seen.emplace(std::make_pair(r.P, r.Q), w).second);
    }
}

// ---- K-Young-Fibonacci ---------------------------------------------------------------

TEST(Kyf, StepExamples)
{
    auto a = kyf_insert_step({{2, 3}, {4, 4}, {1}}, 3);
    EXPECT_EQ(a.tableau, (KyfTableau{{3, 3}, {2, 4}, {1}}));
    EXPECT_FALSE(a.added);
    EXPECT_EQ(a.terminal_column, 2);
    // the third column has a single box, which receives the label
    EXPECT_EQ(a.terminal, (Cell{1, 3}));

    auto b = kyf_insert_step({{2, 3}, {4, 4}, {1}}, 1);
    EXPECT_EQ(b.tableau, (KyfTableau{{2, 3}, {4, 4}, {1}}));
    EXPECT_EQ(b.terminal, (Cell{2, 1}));

    auto c = kyf_insert_step({}, 1);
    EXPECT_EQ(c.tableau, (KyfTableau{{1}}));
    EXPECT_TRUE(c.added);
}

TEST(Kyf, WordExamples)
{
    auto a = kyf_insert_word({1, 3, 3, 4, 2, 4, 1});
    EXPECT_EQ(a.P, (KyfTableau{{4, 4}, {2, 3}, {1}}));
    EXPECT_EQ(snake_of(a.P), "221");
    EXPECT_EQ(a.Q, (KyfSetTableau{{{4}, {5, 7}}, {{2}, {3}}, {{1, 6}}}));
    EXPECT_EQ(kyf_reverse(a.P, a.Q), (Word{1, 3, 3, 4, 2, 4, 1}));
    auto b = kyf_insert_word({1});
    EXPECT_EQ(b.P, (KyfTableau{{1}}));
    EXPECT_EQ(kyf_reverse(b.P, b.Q), (Word{1}));
}

TEST(Kyf, IntermediateTableaux)
{
    const Word w{1, 3, 3, 4, 2, 4, 1};
    const std::vector<KyfTableau> expect{{{1}},
                                         {{3}, {1}},
                                         {{3, 3}, {1}},
                                         {{4}, {3, 3}, {1}},
                                         {{2, 3}, {4, 4}, {1}},
                                         {{4, 4}, {2, 3}, {1}},
                                         {{4, 4}, {2, 3}, {1}}};
    for (std::size_t k = 1; k <= w.size(); ++k)
        EXPECT_EQ(kyf_insert_word(Word(w.begin(), w.begin() + k)).P, expect[k - 1]) << k;
}

TEST(Kyf, WordBijection)
{
    std::map<std::pair<KyfTableau, KyfSetTableau>, Word> seen;
    for (const Word& w : all_words(6, 4)) {
        const KyfResult r = kyf_insert_word(w);
        ASSERT_TRUE(validate_kyf(r.P).empty()) << w.size();
        ASSERT_TRUE(validate_kyf_set_valued(r.Q).empty());
        ASSERT_EQ(snake_of(r.P), snake_of(r.Q));
        ASSERT_EQ(kyf_reverse(r.P, r.Q), w);
        ASSERT_TRUE(seen.emplace(std::make_pair(r.P, r.Q), w).second);
    }
}

TEST(Kyf, ReverseRejectsMismatchedShapes)
{
    EXPECT_THROW(kyf_reverse({{1}}, {{{1}, {2}}}), std::invalid_argument);
}
