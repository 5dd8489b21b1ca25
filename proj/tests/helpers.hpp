#pragma once

#include <utility>
#include <vector>

#include "dt4/partitions.hpp"

namespace dt4::testutil {

inline SolidPartition sp(std::vector<std::vector<std::vector<int>>> h) {
    return SolidPartition(std::move(h));
}

inline PlanePartition pp(std::vector<std::vector<int>> rows) {
    return PlanePartition(std::move(rows));
}

} // namespace dt4::testutil
