#ifndef CPT_SRC_COMBINATIONS_HPP
#define CPT_SRC_COMBINATIONS_HPP

#include <numeric>
#include <vector>

namespace cpt::detail {

/**
 * Calls visit(c) for every q-subset c of {0..n-1} in lexicographic order
 * until visit returns true. Returns whether the walk was stopped.
 */
template <typename Visit>
bool for_each_combination(int n, int q, Visit&& visit)
{
    if (q < 0 || q > n)
        return false;
    std::vector<int> c(q);
    std::iota(c.begin(), c.end(), 0);
    while (true)
    {
        if (visit(static_cast<const std::vector<int>&>(c)))
            return true;
        int i = q - 1;
        while (i >= 0 && c[i] == n - q + i)
            --i;
        if (i < 0)
            return false;
        ++c[i];
        for (int j = i + 1; j < q; ++j)
            c[j] = c[j - 1] + 1;
    }
}

}   // namespace cpt::detail

#endif
