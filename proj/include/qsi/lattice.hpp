#ifndef QSI_LATTICE_HPP
#define QSI_LATTICE_HPP

#include <cstdint>
#include <vector>

namespace qsi {

using IntMatrix = std::vector<std::vector<long long>>; // row major
using IntVector = std::vector<long long>;

namespace detail {

inline void lattice_dfs(const IntMatrix& a, const IntVector& b, long long bound,
                        const std::vector<IntVector>& lo_tail,
                        const std::vector<IntVector>& hi_tail,
                        IntVector& partial, IntVector& acc,
                        std::vector<IntVector>& out) {
    std::size_t rows = b.size();
    std::size_t k = partial.size();
    std::size_t n = a.empty() ? 0 : a[0].size();
    if (k == n) {
        for (std::size_t r = 0; r < rows; ++r)
            if (acc[r] != b[r]) return;
        out.push_back(partial);
        return;
    }
    for (long long v = 0; v <= bound; ++v) {
        bool feasible = true;
        for (std::size_t r = 0; r < rows && feasible; ++r) {
            long long cur = acc[r] + a[r][k] * v;
            long long rem = b[r] - cur;
            // remaining columns k+1..n-1 can contribute [lo, hi]
            if (rem < lo_tail[r][k + 1] || rem > hi_tail[r][k + 1]) feasible = false;
        }
        if (!feasible) continue;
        partial.push_back(v);
        for (std::size_t r = 0; r < rows; ++r) acc[r] += a[r][k] * v;
        lattice_dfs(a, b, bound, lo_tail, hi_tail, partial, acc, out);
        for (std::size_t r = 0; r < rows; ++r) acc[r] -= a[r][k] * v;
        partial.pop_back();
    }
}

} // namespace detail

// All nonnegative integer vectors x with A x = b and every entry <= bound,
// in ascending lexicographic order. Bounded DFS with per-row interval
// propagation; completeness within the box is the contract.
inline std::vector<IntVector> nonneg_lattice_solutions(const IntMatrix& a,
                                                       const IntVector& b,
                                                       long long bound) {
    std::size_t rows = b.size();
    std::size_t n = a.empty() ? 0 : a[0].size();
    // suffix bounds: contribution range of columns >= k
    std::vector<IntVector> lo(rows, IntVector(n + 1, 0));
    std::vector<IntVector> hi(rows, IntVector(n + 1, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = n; k-- > 0;) {
            long long c = a[r][k];
            lo[r][k] = lo[r][k + 1] + (c < 0 ? c * bound : 0);
            hi[r][k] = hi[r][k + 1] + (c > 0 ? c * bound : 0);
        }
    std::vector<IntVector> out;
    IntVector partial, acc(rows, 0);
    if (n == 0) {
        bool ok = true;
        for (std::size_t r = 0; r < rows; ++r) ok = ok && b[r] == 0;
        if (ok) out.push_back({});
        return out;
    }
    detail::lattice_dfs(a, b, bound, lo, hi, partial, acc, out);
    return out;
}

} // namespace qsi

#endif
