#pragma once

#include "ginoe/matrix.hpp"
#include "ginoe/pfaffian.hpp"
#include "ginoe/symmetric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ginoe {

/// One term of the ordered Pfaffian expansion over the arguments
/// (z_1, conj z_1, ..., z_l, conj z_l). Symbol 2i is z_{i+1}, symbol 2i+1 its conjugate;
/// kernel k takes the symbols in slots 2k and 2k+1.
struct StringTerm {
    std::vector<int> symbols;
    int sign = 1;

    int kernels() const { return static_cast<int>(symbols.size()) / 2; }
    int first(int k) const { return symbols[2 * k]; }
    int second(int k) const { return symbols[2 * k + 1]; }
    /// e.g. "-(1 2b)(2 1b)".
    std::string to_string() const;
};

inline constexpr int kMaxStringPairs = 4;

/// All (2l)! terms in lexicographic order of the symbol sequence.
std::vector<StringTerm> enumerate_expansion(int ell);

/// Pairing of symbols into kernels, ignoring kernel order and argument order.
std::vector<std::pair<int, int>> class_key(const StringTerm& t);

/// Terms grouped by class_key; classes ordered by first appearance.
std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<StringTerm>& terms);

/// Kernel indices of each closed loop, in walk order starting from the lowest unvisited kernel.
std::vector<std::vector<int>> loops(const StringTerm& t);
Partition loop_decomposition(const StringTerm& t);

/// Kernel k's second argument is conjugate to kernel k+1's first (cyclically).
bool is_adjacent(const StringTerm& t);
/// (alpha_L, alpha_R) for adjacent strings.
std::optional<std::pair<int, int>> handedness(const StringTerm& t);
/// Canonical representative under cyclic kernel rotation and flip-all-then-reverse.
std::vector<int> adjacency_class_key(const StringTerm& t);

struct SpecialCounts {
    std::int64_t longest_loop_like = 0;
    std::int64_t adjacent = 0;
    std::vector<std::int64_t> handedness;  // index alpha_L = 0..l
    std::int64_t adjacency_classes = 0;
    std::vector<std::int64_t> adjacency_class_sizes;
};

SpecialCounts count_special(int ell);

/// l! / prod((l_j!)^{s_j} s_j!) for the partition with parts l_j of multiplicity s_j.
std::int64_t diagram_count(const Partition& lambda, int ell);
/// Predicted number of terms decomposing into loops of shape lambda.
std::int64_t census_prediction(const Partition& lambda, int ell);
/// Number of terms per loop shape, by enumeration; keyed by Partition::to_string().
std::map<std::string, std::int64_t> census(int ell);

/// Total of every term's trace-word value, divided by 2^l l!. The letters are
/// A = u/(2i) - split and -split; the total depends only on u.
cld symbolic_integration(int ell, const Matrix<cld>& u, const std::optional<Matrix<cld>>& split = std::nullopt);

/// Contribution per loop shape, from the same enumeration.
std::map<std::string, cld> symbolic_integration_by_shape(int ell, const Matrix<cld>& u,
                                                         const std::optional<Matrix<cld>>& split = std::nullopt);

/// -1/2 (p-1)! / (2i)^p tr u^p.
cld loop_contribution(int p, const Matrix<cld>& u);
/// sum over shapes of diagram_count times the product of loop contributions.
cld topology_sum(int ell, const Matrix<cld>& u);

/// Pfaffian as the normalized signed sum over the ordered expansion.
template <class T>
T pfaffian_by_strings(const SkewMatrix<T>& a) {
    const int ell = static_cast<int>(a.dim() / 2);
    if (a.dim() % 2 != 0) throw std::invalid_argument("Pfaffian of odd dimension");
    T total(0);
    for (const auto& t : enumerate_expansion(ell)) {
        T term(t.sign);
        for (int k = 0; k < ell; ++k) term *= a(t.first(k), t.second(k));
        total += term;
    }
    long norm = 1;
    for (int k = 1; k <= ell; ++k) norm *= 2 * k;
    return total / T(norm);
}

/// CSV: term_index,sign,partition,handedness,class_id.
void write_census_csv(std::ostream& os, int ell);

}  // namespace ginoe
