#include "ginoe/strings.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ginoe {

namespace {

void check_range(int ell) {
    if (ell < 1 || ell > kMaxStringPairs) throw std::invalid_argument("string enumeration needs 1 <= l <= 4");
}

int permutation_sign(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    return s;
}

std::vector<int> slot_of(const StringTerm& t) {
    std::vector<int> where(t.symbols.size());
    for (std::size_t s = 0; s < t.symbols.size(); ++s) where[t.symbols[s]] = static_cast<int>(s);
    return where;
}

std::int64_t factorial64(int k) {
    std::int64_t v = 1;
    for (int j = 2; j <= k; ++j) v *= j;
    return v;
}

std::int64_t even_double_factorial(int k) {
    std::int64_t v = 1;
    for (int j = k; j > 1; j -= 2) v *= j;
    return v;
}

Matrix<cld> default_split(std::size_t n) {
    std::mt19937_64 rng(0x5eed5eedULL);
    Matrix<cld> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long double re = static_cast<long double>(rng() >> 11) * 0x1p-53L - 0.5L;
            const long double im = static_cast<long double>(rng() >> 11) * 0x1p-53L - 0.5L;
            b(i, j) = cld(re, im);
        }
    return b;
}

// Product of signed letters along one loop: entering a kernel at its first slot gives +,
// at its second slot -; leaving through z gives A, through conj z gives -B.
cld loop_word(const StringTerm& t, const std::vector<int>& where, int start, const Matrix<cld>& a,
              const Matrix<cld>& minus_b) {
    Matrix<cld> word = Matrix<cld>::identity(a.rows());
    int entry = 2 * start;
    do {
        const int exit = entry ^ 1;
        const int sym = t.symbols[exit];
        const Matrix<cld>& letter = sym % 2 == 0 ? a : minus_b;
        word = entry % 2 == 0 ? word * letter : word * (cld(-1) * letter);
        entry = where[sym ^ 1];
    } while (entry != 2 * start);
    return word.trace();
}

}  // namespace

std::string StringTerm::to_string() const {
    std::ostringstream os;
    os << (sign > 0 ? '+' : '-');
    for (int k = 0; k < kernels(); ++k) {
        auto sym = [](int s) { return std::to_string(s / 2 + 1) + (s % 2 ? "b" : ""); };
        os << '(' << sym(first(k)) << ' ' << sym(second(k)) << ')';
    }
    return os.str();
}

std::vector<StringTerm> enumerate_expansion(int ell) {
    check_range(ell);
    std::vector<int> perm(2 * ell);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<StringTerm> out;
    do {
        out.push_back(StringTerm{perm, permutation_sign(perm)});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::pair<int, int>> class_key(const StringTerm& t) {
    std::vector<std::pair<int, int>> key;
    for (int k = 0; k < t.kernels(); ++k) key.emplace_back(std::minmax(t.first(k), t.second(k)));
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<StringTerm>& terms) {
    std::map<std::vector<std::pair<int, int>>, std::size_t> index;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto key = class_key(terms[i]);
        auto [it, inserted] = index.try_emplace(key, classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(i);
    }
    return classes;
}

std::vector<std::vector<int>> loops(const StringTerm& t) {
    const auto where = slot_of(t);
    std::vector<bool> seen(t.kernels(), false);
    std::vector<std::vector<int>> out;
    for (int k0 = 0; k0 < t.kernels(); ++k0) {
        if (seen[k0]) continue;
        std::vector<int> loop;
        int entry = 2 * k0;
        do {
            seen[entry / 2] = true;
            loop.push_back(entry / 2);
            entry = where[t.symbols[entry ^ 1] ^ 1];
        } while (entry != 2 * k0);
        out.push_back(std::move(loop));
    }
    return out;
}

Partition loop_decomposition(const StringTerm& t) {
    std::vector<int> lengths;
    for (const auto& l : loops(t)) lengths.push_back(static_cast<int>(l.size()));
    return partition_from_parts(std::move(lengths));
}

bool is_adjacent(const StringTerm& t) {
    const int p = t.kernels();
    for (int k = 0; k < p; ++k)
        if (t.second(k) != (t.first((k + 1) % p) ^ 1)) return false;
    return true;
}

std::optional<std::pair<int, int>> handedness(const StringTerm& t) {
    if (!is_adjacent(t)) return std::nullopt;
    const int p = t.kernels();
    int right = 0;
    // Junctions: (second of kernel k, first of kernel k+1), the gluing point included.
    for (int k = 0; k < p; ++k)
        if (t.second(k) % 2 == 0) ++right;
    return std::make_pair(p - right, right);
}

std::vector<int> adjacency_class_key(const StringTerm& t) {
    const int p = t.kernels();
    std::vector<int> flipped(t.symbols.size());
    for (int k = 0; k < p; ++k) {
        const int src = p - 1 - k;
        flipped[2 * k] = t.second(src);
        flipped[2 * k + 1] = t.first(src);
    }
    std::vector<int> best = t.symbols;
    const std::vector<int>* sequences[] = {&t.symbols, &flipped};
    for (const auto* seq : sequences)
        for (int r = 0; r < p; ++r) {
            std::vector<int> rot(seq->begin() + 2 * r, seq->end());
            rot.insert(rot.end(), seq->begin(), seq->begin() + 2 * r);
            best = std::min(best, rot);
        }
    return best;
}

SpecialCounts count_special(int ell) {
    check_range(ell);
    SpecialCounts out;
    out.handedness.assign(ell + 1, 0);
    std::map<std::vector<int>, std::int64_t> adjacency;
    for (const auto& t : enumerate_expansion(ell)) {
        if (loops(t).size() == 1) ++out.longest_loop_like;
        if (const auto h = handedness(t)) {
            ++out.adjacent;
            ++out.handedness[h->first];
            ++adjacency[adjacency_class_key(t)];
        }
    }
    out.adjacency_classes = static_cast<std::int64_t>(adjacency.size());
    for (const auto& [key, size] : adjacency) out.adjacency_class_sizes.push_back(size);
    return out;
}

std::int64_t diagram_count(const Partition& lambda, int ell) {
    if (lambda.size() != ell) throw std::invalid_argument("partition size does not match l");
    std::int64_t denom = 1;
    for (const auto& [part, mult] : lambda.parts) {
        for (int r = 0; r < mult; ++r) denom *= factorial64(part);
        denom *= factorial64(mult);
    }
    return factorial64(ell) / denom;
}

std::int64_t census_prediction(const Partition& lambda, int ell) {
    std::int64_t v = even_double_factorial(2 * ell) * diagram_count(lambda, ell);
    for (const auto& [part, mult] : lambda.parts)
        for (int r = 0; r < mult; ++r) v *= even_double_factorial(2 * part - 2);
    return v;
}

std::map<std::string, std::int64_t> census(int ell) {
    std::map<std::string, std::int64_t> out;
    for (const auto& t : enumerate_expansion(ell)) ++out[loop_decomposition(t).to_string()];
    return out;
}

std::map<std::string, cld> symbolic_integration_by_shape(int ell, const Matrix<cld>& u,
                                                         const std::optional<Matrix<cld>>& split) {
    check_range(ell);
    if (u.rows() != u.cols()) throw std::invalid_argument("upsilon must be square");
    const Matrix<cld> b = split ? *split : default_split(u.rows());
    const Matrix<cld> a = cld(0.0L, -0.5L) * u - b;  // u/(2i) - B
    const Matrix<cld> minus_b = cld(-1) * b;
    const long double norm = static_cast<long double>(even_double_factorial(2 * ell));

    std::map<std::string, cld> out;
    for (const auto& t : enumerate_expansion(ell)) {
        const auto where = slot_of(t);
        cld value(t.sign);
        std::vector<int> lengths;
        for (const auto& l : loops(t)) {
            value *= loop_word(t, where, l.front(), a, minus_b);
            lengths.push_back(static_cast<int>(l.size()));
        }
        out[partition_from_parts(std::move(lengths)).to_string()] += value / norm;
    }
    return out;
}

cld symbolic_integration(int ell, const Matrix<cld>& u, const std::optional<Matrix<cld>>& split) {
    cld total(0);
    for (const auto& [shape, v] : symbolic_integration_by_shape(ell, u, split)) total += v;
    return total;
}

cld loop_contribution(int p, const Matrix<cld>& u) {
    if (p < 1) throw std::invalid_argument("loop length must be positive");
    const cld tr = trace_powers(u, static_cast<unsigned>(p)).back();
    return -0.5L * static_cast<long double>(factorial64(p - 1)) * tr / std::pow(cld(0.0L, 2.0L), p);
}

cld topology_sum(int ell, const Matrix<cld>& u) {
    cld total(0);
    for (const auto& lam : partitions(ell)) {
        cld term(static_cast<long double>(diagram_count(lam, ell)));
        for (const auto& [part, mult] : lam.parts)
            for (int r = 0; r < mult; ++r) term *= loop_contribution(part, u);
        total += term;
    }
    return total;
}

void write_census_csv(std::ostream& os, int ell) {
    const auto terms = enumerate_expansion(ell);
    const auto classes = equivalence_classes(terms);
    std::vector<std::size_t> class_of(terms.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto i : classes[c]) class_of[i] = c;
    os << "term_index,sign,partition,handedness,class_id\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string shape = loop_decomposition(terms[i]).to_string();
        std::replace(shape.begin(), shape.end(), ',', ' ');
        os << i << ',' << terms[i].sign << ',' << shape << ',';
        if (const auto h = handedness(terms[i])) os << "H(" << h->first << ';' << h->second << ')';
        os << ',' << class_of[i] << '\n';
    }
}

}  // namespace ginoe
