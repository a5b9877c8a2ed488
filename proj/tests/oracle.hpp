#pragma once

// Brute-force helpers backing the test suite: exhaustive S_n enumeration,
// Cayley-graph BFS distances, and direct one-line-notation statistics that do
// not go through any formula under test.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "ogs/permutation.hpp"

namespace oracle {

inline std::vector<ogs::Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    std::vector<ogs::Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// BFS over the Cayley graph of S_n with the adjacent transpositions as
// generators: the distance from the identity is the Coxeter length.
inline std::map<std::vector<int>, int> cayley_lengths(int n) {
    std::map<std::vector<int>, int> dist;
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
    dist[id] = 0;
    std::queue<std::vector<int>> queue;
    queue.push(id);
    while (!queue.empty()) {
        const std::vector<int> cur = queue.front();
        queue.pop();
        const int d = dist[cur];
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> next = cur;
            std::swap(next[static_cast<std::size_t>(i)], next[static_cast<std::size_t>(i + 1)]);
            if (!dist.count(next)) {
                dist[next] = d + 1;
                queue.push(next);
            }
        }
    }
    return dist;
}

inline long long inversion_count(const ogs::Permutation& p) {
    long long count = 0;
    for (int i = 1; i <= p.degree(); ++i)
        for (int j = i + 1; j <= p.degree(); ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

inline std::set<int> descent_set(const ogs::Permutation& p) {
    std::set<int> des;
    for (int i = 1; i < p.degree(); ++i)
        if (p(i) > p(i + 1)) des.insert(i);
    return des;
}

inline long long major_index(const ogs::Permutation& p) {
    long long maj = 0;
    for (int i : descent_set(p)) maj += i;
    return maj;
}

inline ogs::Permutation brute_inverse(const ogs::Permutation& p) {
    std::vector<int> img(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) img[static_cast<std::size_t>(p(i) - 1)] = i;
    return ogs::Permutation(std::move(img));
}

}  // namespace oracle
