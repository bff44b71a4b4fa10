#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ybme/canonical.hpp"
#include "ybme/mat2.hpp"

namespace ybme::detail {

inline void check_scan_bound(const FieldCtx& F, unsigned max_q, const char* what) {
    if (F.q() > max_q)
        throw std::invalid_argument(std::string(what) + " over F_" +
                                    std::to_string(F.q()) +
                                    " exceeds the scan bound q <= " +
                                    std::to_string(max_q));
}

/// Walk all q^4 matrices in ascending order and keep those satisfying `keep`.
///
/// The parallel kernel splits [0, q^4) into one contiguous block per thread
/// (static schedule), collects per-thread buffers, and concatenates them in
/// thread order, so both modes return the identical ascending vector.  The
/// serial mode is the reference the kernel is tested against.
template <class Keep>
std::vector<Mat2> scan_matrices(const FieldCtx& F, Keep&& keep, ScanMode mode) {
    const std::int64_t total = static_cast<std::int64_t>(mat_count(F));
    if (mode == ScanMode::serial) {
        std::vector<Mat2> out;
        for (std::int64_t i = 0; i < total; ++i) {
            Mat2 M = mat_at(F, static_cast<std::uint64_t>(i));
            if (keep(M)) out.push_back(M);
        }
        return out;
    }

#ifdef _OPENMP
    std::vector<std::vector<Mat2>> buckets;
#pragma omp parallel
    {
#pragma omp single
        buckets.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& mine = buckets[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < total; ++i) {
            Mat2 M = mat_at(F, static_cast<std::uint64_t>(i));
            if (keep(M)) mine.push_back(M);
        }
    }
    std::size_t n = 0;
    for (const auto& b : buckets) n += b.size();
    std::vector<Mat2> out;
    out.reserve(n);
    for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
#else
    return scan_matrices(F, std::forward<Keep>(keep), ScanMode::serial);
#endif
}

}  // namespace ybme::detail
