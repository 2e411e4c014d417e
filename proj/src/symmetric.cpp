#include "ginoe/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ginoe {

int Partition::size() const {
    int s = 0;
    for (const auto& [part, mult] : parts) s += part * mult;
    return s;
}

int Partition::length() const {
    int s = 0;
    for (const auto& pm : parts) s += pm.second;
    return s;
}

std::string Partition::to_string() const {
    std::string out = "(";
    bool first = true;
    for (const auto& [part, mult] : parts) {
        for (int k = 0; k < mult; ++k) {
            if (!first) out += ",";
            out += std::to_string(part);
            first = false;
        }
    }
    return out + ")";
}

Partition partition_from_parts(std::vector<int> parts) {
    std::map<int, int, std::greater<>> freq;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        ++freq[p];
    }
    Partition out;
    for (const auto& [part, mult] : freq) out.parts.emplace_back(part, mult);
    return out;
}

std::vector<Partition> partitions(int ell) {
    if (ell < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first with non-increasing parts, largest first: reverse-lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(partition_from_parts(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(ell, ell);
    return out;
}

std::int64_t cycle_class_size(const Partition& p) {
    std::int64_t fact = 1;
    for (int k = 2; k <= p.size(); ++k) fact *= k;
    for (const auto& [part, mult] : p.parts) {
        for (int k = 0; k < mult; ++k) fact /= part;
        for (int k = 2; k <= mult; ++k) fact /= k;
    }
    return fact;
}

}  // namespace ginoe
