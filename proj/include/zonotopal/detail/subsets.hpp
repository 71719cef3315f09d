#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace zonotopal::detail {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
// Stops early and returns false as soon as f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        if (!f(idx)) return false;
        if (k == 0) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace zonotopal::detail
