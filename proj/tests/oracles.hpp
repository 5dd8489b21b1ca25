#pragma once

// Independent brute-force enumerators used as oracles against the layered
// generators in dt4/partitions.hpp.  Deliberately different structure:
// grow one box at a time from the empty partition, deduplicating each
// level through a set of dense height keys.

#include <set>
#include <vector>

namespace dt4::oracle {

// dense n*n*n height array, row-major
using SolidKey = std::vector<int>;
using PlaneKey = std::vector<int>;

inline std::set<SolidKey> dfs_solid(int n) {
    const int N = n > 0 ? n : 1;
    auto at = [N](const SolidKey& k, int i, int j, int kk) -> int {
        if (i < 0 || j < 0 || kk < 0) return 1 << 20; // boundary acts as +infinity
        if (i >= N || j >= N || kk >= N) return 0;
        return k[static_cast<std::size_t>((i * N + j) * N + kk)];
    };
    std::set<SolidKey> level;
    level.insert(SolidKey(static_cast<std::size_t>(N) * N * N, 0));
    for (int step = 0; step < n; ++step) {
        std::set<SolidKey> next;
        for (const auto& key : level) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k) {
                        const int h = at(key, i, j, k);
                        const int cap = std::min({at(key, i - 1, j, k), at(key, i, j - 1, k),
                                                  at(key, i, j, k - 1)});
                        if (h + 1 <= cap) {
                            SolidKey nk = key;
                            nk[static_cast<std::size_t>((i * N + j) * N + k)] = h + 1;
                            next.insert(std::move(nk));
                        }
                    }
        }
        level = std::move(next);
    }
    return level;
}

inline std::set<PlaneKey> dfs_plane(int n) {
    const int N = n > 0 ? n : 1;
    auto at = [N](const PlaneKey& k, int i, int j) -> int {
        if (i < 0 || j < 0) return 1 << 20;
        if (i >= N || j >= N) return 0;
        return k[static_cast<std::size_t>(i * N + j)];
    };
    std::set<PlaneKey> level;
    level.insert(PlaneKey(static_cast<std::size_t>(N) * N, 0));
    for (int step = 0; step < n; ++step) {
        std::set<PlaneKey> next;
        for (const auto& key : level) {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const int h = at(key, i, j);
                    if (h + 1 <= std::min(at(key, i - 1, j), at(key, i, j - 1))) {
                        PlaneKey nk = key;
                        nk[static_cast<std::size_t>(i * N + j)] = h + 1;
                        next.insert(std::move(nk));
                    }
                }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace dt4::oracle
