#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dt4/error.hpp"

namespace dt4 {

// Largest partition size the engine supports (1464 solid partitions at
// n = 9 would still be fine; the cap mirrors the desk-scale contract).
inline constexpr int kMaxPartitionSize = 8;

// 2d monotone height array: lambda_{ij} >= lambda_{i+1,j}, lambda_{i,j+1}.
// Indexes Hilb^n(C^3) torus fixed points; boxes are (i,j,k), k <= lambda_{ij}.
class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        normalize();
        if (!valid()) throw std::invalid_argument("not a plane partition");
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int height(int i, int j) const { // 1-based
        if (i < 1 || j < 1) return 0;
        const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
        if (ii >= rows_.size() || jj >= rows_[ii].size()) return 0;
        return rows_[ii][jj];
    }

    int size() const {
        int s = 0;
        for (const auto& r : rows_)
            for (int h : r) s += h;
        return s;
    }

    struct Box { int i, j, k; };
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                for (int k = 1; k <= rows_[i][j]; ++k)
                    out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, k});
        return out;
    }

    bool valid() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].empty()) return false;
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[i][j] < 1) return false;
                if (j + 1 < rows_[i].size() && rows_[i][j] < rows_[i][j + 1]) return false;
                if (i + 1 < rows_.size() && j < rows_[i + 1].size() && rows_[i][j] < rows_[i + 1][j]) return false;
            }
            if (i + 1 < rows_.size() && rows_[i + 1].size() > rows_[i].size()) return false;
        }
        return true;
    }

    // Row-major flattened height list; ties the enumeration order down.
    std::vector<int> canonical_key(int extent) const {
        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(extent) * extent);
        for (int i = 1; i <= extent; ++i)
            for (int j = 1; j <= extent; ++j) key.push_back(height(i, j));
        return key;
    }

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) { return a.rows_ == b.rows_; }

    std::string str() const;

private:
    void normalize() {
        for (auto& r : rows_)
            while (!r.empty() && r.back() == 0) r.pop_back();
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    }
    std::vector<std::vector<int>> rows_;
};

// 3d monotone height array pi_{ijk}; boxes (i,j,k,l) with l <= pi_{ijk}
// index the monomial ideals of colength n in four variables.
class SolidPartition {
public:
    SolidPartition() = default;
    explicit SolidPartition(std::vector<std::vector<std::vector<int>>> heights)
        : h_(std::move(heights)) {
        normalize();
        if (!valid()) throw std::invalid_argument("not a solid partition");
    }

    // Builds from k-slabs: slab[k] is the 2d array (i,j) -> pi_{i,j,k+1}.
    static SolidPartition from_slabs(const std::vector<PlanePartition>& slabs);

    int height(int i, int j, int k) const { // 1-based
        if (i < 1 || j < 1 || k < 1) return 0;
        const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1),
                   kk = static_cast<std::size_t>(k - 1);
        if (ii >= h_.size() || jj >= h_[ii].size() || kk >= h_[ii][jj].size()) return 0;
        return h_[ii][jj][kk];
    }

    const std::vector<std::vector<std::vector<int>>>& heights() const { return h_; }

    int size() const {
        int s = 0;
        for (const auto& plane : h_)
            for (const auto& row : plane)
                for (int v : row) s += v;
        return s;
    }

    struct Box { int i, j, k, l; };
    std::vector<Box> boxes() const {
        std::vector<Box> out;
        for (std::size_t i = 0; i < h_.size(); ++i)
            for (std::size_t j = 0; j < h_[i].size(); ++j)
                for (std::size_t k = 0; k < h_[i][j].size(); ++k)
                    for (int l = 1; l <= h_[i][j][k]; ++l)
                        out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                       static_cast<int>(k) + 1, l});
        return out;
    }

    bool valid() const {
        const int I = static_cast<int>(h_.size());
        for (int i = 1; i <= I; ++i) {
            const auto& plane = h_[static_cast<std::size_t>(i - 1)];
            for (int j = 1; j <= static_cast<int>(plane.size()); ++j) {
                const auto& row = plane[static_cast<std::size_t>(j - 1)];
                for (int k = 1; k <= static_cast<int>(row.size()); ++k) {
                    const int v = height(i, j, k);
                    if (v < 1) return false;
                    if (height(i + 1, j, k) > v || height(i, j + 1, k) > v || height(i, j, k + 1) > v)
                        return false;
                }
            }
        }
        // monotone supports imply no ragged gaps; double-check shape
        for (const auto& plane : h_)
            for (const auto& row : plane)
                if (row.empty()) return false;
        return true;
    }

    std::vector<int> canonical_key(int extent) const {
        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(extent) * extent * extent);
        for (int i = 1; i <= extent; ++i)
            for (int j = 1; j <= extent; ++j)
                for (int k = 1; k <= extent; ++k) key.push_back(height(i, j, k));
        return key;
    }

    friend bool operator==(const SolidPartition& a, const SolidPartition& b) { return a.h_ == b.h_; }

    std::string str() const;

private:
    void normalize() {
        for (auto& plane : h_) {
            for (auto& row : plane)
                while (!row.empty() && row.back() == 0) row.pop_back();
            while (!plane.empty() && plane.back().empty()) plane.pop_back();
        }
        while (!h_.empty() && h_.back().empty()) h_.pop_back();
    }
    std::vector<std::vector<std::vector<int>>> h_;
};

namespace detail {

// All weakly decreasing rows of total s bounded componentwise by `bound`.
inline void bounded_rows(int s, const std::vector<int>& bound, std::size_t pos, int cap,
                         std::vector<int>& acc, const std::function<void(const std::vector<int>&)>& emit) {
    if (s == 0) {
        emit(acc);
        return;
    }
    if (pos >= bound.size()) return;
    const int hi = std::min({s, bound[pos], cap});
    for (int v = hi; v >= 1; --v) {
        acc.push_back(v);
        bounded_rows(s - v, bound, pos + 1, v, acc, emit);
        acc.pop_back();
    }
}

// All 2d monotone arrays of total s bounded componentwise by `bound`
// (bound given as rows; missing entries are 0).
inline void bounded_planes(int s, const std::vector<std::vector<int>>& bound, std::size_t row,
                           const std::vector<int>* row_cap, std::vector<std::vector<int>>& acc,
                           const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (s == 0) {
        emit(acc);
        return;
    }
    if (row >= bound.size()) return;
    // effective bound for this row: componentwise min of the shape bound
    // and the previously chosen row
    std::vector<int> eff = bound[row];
    if (row_cap) {
        eff.resize(std::min(eff.size(), row_cap->size()));
        for (std::size_t j = 0; j < eff.size(); ++j) eff[j] = std::min(eff[j], (*row_cap)[j]);
    }
    for (int t = s; t >= 1; --t) {
        std::vector<int> r;
        bounded_rows(t, eff, 0, s, r, [&](const std::vector<int>& chosen) {
            acc.push_back(chosen);
            bounded_planes(s - t, bound, row + 1, &acc.back(), acc, emit);
            acc.pop_back();
        });
    }
}

} // namespace detail

// Every plane partition of size n, once, in the canonical row-major order.
inline std::vector<PlanePartition> enumerate_plane(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<PlanePartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    const std::vector<std::vector<int>> bound(static_cast<std::size_t>(n),
                                              std::vector<int>(static_cast<std::size_t>(n), n));
    std::vector<std::vector<int>> acc;
    detail::bounded_planes(n, bound, 0, nullptr, acc,
                           [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(PlanePartition(rows)); });
    std::sort(out.begin(), out.end(), [n](const PlanePartition& a, const PlanePartition& b) {
        return a.canonical_key(n) < b.canonical_key(n);
    });
    return out;
}

inline SolidPartition SolidPartition::from_slabs(const std::vector<PlanePartition>& slabs) {
    std::vector<std::vector<std::vector<int>>> h;
    for (std::size_t s = 0; s < slabs.size(); ++s) {
        const auto& rows = slabs[s].rows();
        if (h.size() < rows.size()) h.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (h[i].size() < rows[i].size()) h[i].resize(rows[i].size());
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                h[i][j].resize(s + 1, 0);
                h[i][j][s] = rows[i][j];
            }
        }
    }
    return SolidPartition(std::move(h));
}

// Every solid partition of size n, once: the k = 1 slab is generated as a
// plane partition and further slabs are stacked under componentwise
// domination.  Output is sorted by the canonical row-major key.
inline std::vector<SolidPartition> enumerate_solid(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<SolidPartition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }

    std::vector<PlanePartition> chain;
    chain.reserve(static_cast<std::size_t>(n) + 1); // references into the chain stay valid
    std::function<void(int, const PlanePartition&)> stack = [&](int remaining, const PlanePartition& top) {
        if (remaining == 0) {
            out.push_back(SolidPartition::from_slabs(chain));
            return;
        }
        std::vector<std::vector<int>> acc;
        for (int t = std::min(remaining, top.size()); t >= 1; --t) {
            detail::bounded_planes(t, top.rows(), 0, nullptr, acc,
                                   [&](const std::vector<std::vector<int>>& rows) {
                                       chain.emplace_back(PlanePartition(rows));
                                       stack(remaining - t, chain.back());
                                       chain.pop_back();
                                   });
        }
    };

    const std::vector<std::vector<int>> full(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), n));
    std::vector<std::vector<int>> acc;
    for (int t = n; t >= 1; --t) {
        detail::bounded_planes(t, full, 0, nullptr, acc, [&](const std::vector<std::vector<int>>& rows) {
            chain.emplace_back(PlanePartition(rows));
            stack(n - t, chain.back());
            chain.pop_back();
        });
    }
    std::sort(out.begin(), out.end(), [n](const SolidPartition& a, const SolidPartition& b) {
        return a.canonical_key(n) < b.canonical_key(n);
    });
    return out;
}

// If every box of pi has l = 1 the partition is scheme-theoretically a
// plane partition (pi_{ijk} = 1 on its support); returns it, else nothing.
inline std::optional<PlanePartition> divisor_support(const SolidPartition& pi) {
    std::vector<std::vector<int>> rows;
    const auto& h = pi.heights();
    for (std::size_t i = 0; i < h.size(); ++i) {
        rows.emplace_back();
        for (std::size_t j = 0; j < h[i].size(); ++j) {
            for (int v : h[i][j])
                if (v != 1) return std::nullopt;
            rows.back().push_back(static_cast<int>(h[i][j].size()));
        }
    }
    return PlanePartition(rows);
}

inline std::string PlanePartition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(rows_[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

inline std::string SolidPartition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < h_.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < h_[i].size(); ++j) {
            if (j) s += ",";
            s += "[";
            for (std::size_t k = 0; k < h_[i][j].size(); ++k) {
                if (k) s += ",";
                s += std::to_string(h_[i][j][k]);
            }
            s += "]";
        }
        s += "]";
    }
    return s + "]";
}

} // namespace dt4
