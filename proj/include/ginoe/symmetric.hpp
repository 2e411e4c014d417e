#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ginoe {

/// Integer partition in frequency form: (part, multiplicity), parts strictly decreasing.
struct Partition {
    std::vector<std::pair<int, int>> parts;

    int size() const;
    /// Number of distinct parts.
    int distinct() const { return static_cast<int>(parts.size()); }
    /// Total number of parts, counted with multiplicity.
    int length() const;
    std::string to_string() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Build the frequency form from an unordered list of positive parts.
Partition partition_from_parts(std::vector<int> parts);

/// All partitions of ell in reverse-lexicographic order (largest first part first).
std::vector<Partition> partitions(int ell);

/// ell! / prod(part^mult * mult!): the number of permutations with this cycle type.
std::int64_t cycle_class_size(const Partition& p);

/// Z_{(1^ell)} as the signed partition sum; ell = p.size(), p[j-1] holds p_j.
template <class T>
T zonal_partition_sum(const std::vector<T>& p) {
    const int ell = static_cast<int>(p.size());
    T total(0);
    for (const auto& lam : partitions(ell)) {
        T term(static_cast<long>(cycle_class_size(lam)));
        if ((ell - lam.length()) % 2 != 0) term = -term;
        for (const auto& [part, mult] : lam.parts) {
            for (int k = 0; k < mult; ++k) term = term * p[static_cast<std::size_t>(part - 1)];
        }
        total += term;
    }
    return total;
}

/// All Z_{(1^r)} for r = 0..p.size() via the recursion in r.
template <class T>
std::vector<T> zonal_recursive_all(const std::vector<T>& p) {
    const int ell = static_cast<int>(p.size());
    std::vector<T> z;
    z.reserve(static_cast<std::size_t>(ell) + 1);
    z.emplace_back(1L);
    for (int L = 1; L <= ell; ++L) {
        T acc(0);
        // (L-1)!/r! built downward from r = L-1
        long coef = 1;
        for (int r = L - 1; r >= 0; --r) {
            T term = T(coef) * p[static_cast<std::size_t>(L - r - 1)] * z[static_cast<std::size_t>(r)];
            if ((L - r - 1) % 2 != 0) term = -term;
            acc += term;
            coef *= r;
        }
        z.push_back(acc);
    }
    return z;
}

template <class T>
T zonal_recursive(const std::vector<T>& p) {
    return zonal_recursive_all(p).back();
}

}  // namespace ginoe
