#pragma once

#include <functional>
#include <vector>

#include "dfg/insertion.hpp"

namespace dfg::testing {

// Every word of length 0..max_len over the alphabet 1..alphabet.
inline std::vector<Word> all_words(int max_len, int alphabet)
{
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int x = 1; x <= alphabet; ++x) {
                Word v = w;
                v.push_back(x);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

// All fillings of the rows given by lengths with entries in 1..m that pass
// the predicate.
template <class Pred>
std::vector<Rows> fillings(const std::vector<int>& lengths, int m, Pred ok)
{
    std::vector<Rows> out;
    Rows t;
    for (int len : lengths) t.emplace_back(len, 1);
    std::vector<int*> cells;
    for (auto& r : t)
        for (int& v : r) cells.push_back(&v);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cells.size()) {
            if (ok(t)) out.push_back(t);
            return;
        }
        for (int v = 1; v <= m; ++v) {
            *cells[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace dfg::testing
