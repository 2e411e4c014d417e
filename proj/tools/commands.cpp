#include "commands.hpp"

#include "rho_cache.hpp"

#include "ginoe/kernel.hpp"
#include "ginoe/montecarlo.hpp"
#include "ginoe/pfaffian.hpp"
#include "ginoe/probabilities.hpp"
#include "ginoe/strings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ginoe::cli {

namespace {

json exact_json(const QSqrt2& x) { return {{"a", render_rational(x.rational_part())}, {"b", render_rational(x.sqrt2_part())}}; }

// Exact value alongside its text form and nearest double.
void put_exact(json& row, const QSqrt2& x) {
    row["exact"] = exact_json(x);
    row["exact_text"] = render(x);
    row["float"] = x.to_double();
}

json complex_json(const cld& z) {
    return {{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

void require_n(int n, int lo, const char* what) {
    if (n < lo) throw InputError(std::string(what) + " must be at least " + std::to_string(lo));
}

void require_exact_cap(const Config& cfg, int n) {
    if (n > cfg.exact_cap)
        throw InputError("n = " + std::to_string(n) + " exceeds the exact cap of " + std::to_string(cfg.exact_cap) +
                         "; use --float, or raise the cap with --exact-cap");
}

json base_doc(const char* command) { return {{"command", command}, {"schema_version", 1}}; }

int ell_max(int n) { return n / 2; }

void flatten(const json& value, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    std::string text;
    if (value.is_string()) text = value.get<std::string>();
    else if (value.is_boolean()) text = value.get<bool>() ? "true" : "false";
    else if (value.is_number_float()) text = format_double(value.get<double>());
    else if (value.is_null()) text = "";
    else text = value.dump();
    out.emplace_back(prefix, text);
}

std::vector<std::vector<std::pair<std::string, std::string>>> flat_rows(const json& doc) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    if (!doc.contains("rows")) return rows;
    for (const auto& r : doc["rows"]) {
        rows.emplace_back();
        flatten(r, "", rows.back());
    }
    return rows;
}

std::vector<std::string> column_union(const std::vector<std::vector<std::pair<std::string, std::string>>>& rows) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [k, v] : r)
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

std::string lookup(const std::vector<std::pair<std::string, std::string>>& row, const std::string& key) {
    for (const auto& [k, v] : row)
        if (k == key) return v;
    return "";
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json verify_row(const std::string& name, bool passed) { return {{"case", name}, {"passed", passed}}; }

json integer_case(const std::string& name, std::int64_t expected, std::int64_t actual) {
    json row = verify_row(name, expected == actual);
    row["expected"] = expected;
    row["actual"] = actual;
    return row;
}

std::int64_t fact(int k) { return k <= 1 ? 1 : k * fact(k - 1); }
std::int64_t dfact(int k) { return k <= 1 ? 1 : k * dfact(k - 2); }

json verify_traces(std::optional<int> only) {
    json rows = json::array();
    const int lo = only.value_or(2), hi = only.value_or(10);
    for (int n = lo; n <= hi; ++n) {
        const auto rho = rho_matrix(n);
        const auto sigma = sigma_matrix(n);
        for (unsigned j = 1; j <= 4; ++j) {
            const QSqrt2 lhs = trace_power(sigma, j), rhs = QSqrt2(2) * trace_power(rho, j);
            json row = verify_row("trace sigma^" + std::to_string(j) + " = 2 trace rho^" + std::to_string(j), lhs == rhs);
            row["n"] = n;
            row["lhs"] = render(lhs);
            row["rhs"] = render(rhs);
            rows.push_back(row);
        }
        const QSqrt2 closed = closed_form_trace(n), direct = trace_power(rho, 1);
        json row = verify_row("closed-form trace rho", closed == direct);
        row["n"] = n;
        row["lhs"] = render(closed);
        row["rhs"] = render(direct);
        rows.push_back(row);
    }
    return rows;
}

json verify_pfaffian_theorem(const VerifyOptions& o) {
    const int n = o.n.value_or(4), ell = o.ell.value_or(2);
    require_n(n, 1, "n");
    require_n(ell, 1, "ell");
    if (ell > 4) throw InputError("ell must be at most 4 for the brute-force sum");
    if (o.instances < 1) throw InputError("instances must be positive");
    constexpr int kPoints = 5;
    json rows = json::array();
    for (int i = 0; i < o.instances; ++i) {
        const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
        const auto inst = random_theorem_instance(n, kPoints, seed);
        const auto chk = pfaffian_theorem_check(inst.ctx, ell, inst.measure);
        json row = verify_row("brute force vs zonal", chk.agrees());
        row["n"] = n;
        row["ell"] = ell;
        row["M"] = kPoints;
        row["seed"] = seed;
        row["lhs"] = complex_json(chk.lhs);
        row["rhs"] = complex_json(chk.rhs);
        row["abs_err"] = static_cast<double>(chk.abs_err());
        row["rel_err"] = static_cast<double>(chk.rel_err());
        rows.push_back(row);
    }
    return rows;
}

json verify_strings(std::optional<int> only) {
    const int ell = only.value_or(3);
    if (ell < 1 || ell > kMaxStringPairs) throw InputError("ell must be between 1 and 4");
    json rows = json::array();
    const auto terms = enumerate_expansion(ell);
    rows.push_back(integer_case("expansion terms", fact(2 * ell), static_cast<std::int64_t>(terms.size())));

    const auto classes = equivalence_classes(terms);
    rows.push_back(integer_case("equivalence classes", dfact(2 * ell - 1), static_cast<std::int64_t>(classes.size())));
    std::int64_t wrong_size = 0;
    for (const auto& c : classes) wrong_size += static_cast<std::int64_t>(c.size()) != dfact(2 * ell);
    rows.push_back(integer_case("classes of the wrong size", 0, wrong_size));

    const auto sp = count_special(ell);
    rows.push_back(integer_case("longest loop-like strings", dfact(2 * ell) * dfact(2 * ell - 2), sp.longest_loop_like));
    rows.push_back(integer_case("adjacent strings", dfact(2 * ell), sp.adjacent));
    for (int a = 0; a <= ell; ++a)
        rows.push_back(integer_case("handedness alpha=" + std::to_string(a), fact(ell) * fact(ell) / (fact(a) * fact(ell - a)),
                                    sp.handedness[a]));
    rows.push_back(integer_case("adjacency classes", dfact(2 * ell - 2), sp.adjacency_classes));
    std::int64_t wrong_adj = 0;
    for (auto s : sp.adjacency_class_sizes) wrong_adj += s != 2 * ell;
    rows.push_back(integer_case("adjacency classes of the wrong size", 0, wrong_adj));

    const auto cen = census(ell);
    const auto parts = partitions(ell);
    const std::int64_t partition_counts[] = {1, 1, 2, 3, 5, 7};
    rows.push_back(integer_case("partitions of l", partition_counts[ell], static_cast<std::int64_t>(parts.size())));
    for (const auto& lam : parts) {
        const auto it = cen.find(lam.to_string());
        rows.push_back(integer_case("loop shape " + lam.to_string() + " census", census_prediction(lam, ell),
                                    it == cen.end() ? 0 : it->second));
    }
    return rows;
}

json verify_projection(std::optional<int> only) {
    json rows = json::array();
    const int lo = only.value_or(2), hi = only.value_or(6);
    require_n(lo, 2, "n");
    for (int n = lo; n <= hi; ++n) {
        const auto fail = projection_failure_check(n);
        const auto ctrl = projection_control_check(n);
        json row = verify_row("projection fails; control projects",
                              fail.max_deviation > 0.1L && ctrl.max_deviation < 1e-10L);
        row["n"] = n;
        row["ginoe_deviation"] = static_cast<double>(fail.max_deviation);
        row["control_deviation"] = static_cast<double>(ctrl.max_deviation);
        rows.push_back(row);
    }
    return rows;
}

json verify_one_pair(std::optional<int> only) {
    json rows = json::array();
    const int lo = only.value_or(4), hi = only.value_or(12);
    require_n(lo, 2, "n");
    for (int n = lo; n <= hi; ++n) {
        const QSqrt2 zonal = prob_one_pair_exact(n, OnePairRoute::zonal);
        const QSqrt2 laguerre = prob_one_pair_exact(n, OnePairRoute::laguerre);
        const long double legendre = prob_one_pair_legendre(n);
        const long double ref = zonal.to_long_double();
        const long double rel = std::fabs(legendre - ref) / std::fabs(ref);
        json row = verify_row("three routes for p(n, n-2)", zonal == laguerre && rel <= 1e-10L);
        row["n"] = n;
        row["zonal"] = render(zonal);
        row["laguerre"] = render(laguerre);
        row["legendre"] = static_cast<double>(legendre);
        row["legendre_rel_diff"] = static_cast<double>(rel);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Outcome cmd_probs(const Config& cfg, int n, bool exact) {
    require_n(n, 1, "n");
    json doc = base_doc("probs");
    doc["n"] = n;
    json rows = json::array();
    if (exact) {
        require_exact_cap(cfg, n);
        const auto lookup = load_or_compute_rho(n, cfg.cache_dir);
        doc["mode"] = "exact";
        doc["cache"] = !cfg.cache_dir ? "off" : lookup.from_cache ? "hit" : "miss";
        std::vector<QSqrt2> traces;
        for (int j = 1; j <= ell_max(n); ++j) traces.push_back(trace_power(lookup.rho, static_cast<unsigned>(j)));
        QSqrt2 total(0);
        for (int k = n % 2; k <= n; k += 2) {
            const QSqrt2 p = prob_nk_from_traces(n, k, traces);
            total += p;
            json row = {{"k", k}};
            put_exact(row, p);
            rows.push_back(row);
        }
        doc["normalized"] = total == QSqrt2(1);
    } else {
        if (n > cfg.float_cap)
            throw InputError("n = " + std::to_string(n) + " exceeds the float cap of " + std::to_string(cfg.float_cap));
        const auto t = prob_table_float(n);
        doc["mode"] = "float";
        doc["error_estimate"] = static_cast<double>(t.error_estimate);
        doc["normalization_residual"] = static_cast<double>(t.normalization_residual);
        for (const auto& [k, p] : t.rows) rows.push_back({{"k", k}, {"float", static_cast<double>(p)}});
    }
    doc["rows"] = rows;
    return {doc, kExitOk};
}

Outcome cmd_genfunc(const Config& cfg, int n) {
    require_n(n, 1, "n");
    require_exact_cap(cfg, n);
    const auto g = generating_function(n);
    json doc = base_doc("genfunc");
    doc["n"] = n;
    doc["route"] = "newton-identities";
    json rows = json::array();
    for (std::size_t l = 0; l < g.coefficients.size(); ++l) {
        json row = {{"power", l}, {"k", n - 2 * static_cast<int>(l)}};
        put_exact(row, g.coefficients[l]);
        rows.push_back(row);
    }
    doc["rows"] = rows;
    return {doc, kExitOk};
}

Outcome cmd_moments(const Config& cfg, int n, int q) {
    require_n(n, 1, "n");
    require_n(q, 0, "q");
    require_exact_cap(cfg, n);
    json doc = base_doc("moments");
    doc["n"] = n;
    doc["route"] = "generating-function";
    json row = {{"q", q}};
    put_exact(row, moment_real_count(n, q));
    doc["rows"] = json::array({row});
    return {doc, kExitOk};
}

Outcome cmd_en(const Config& cfg, int n) {
    require_n(n, 1, "n");
    json doc = base_doc("en");
    doc["n"] = n;
    const double series = expected_real_count(n);
    const double asym = expected_real_count_asymptotic(n, 4);
    json rows = json::array();
    rows.push_back({{"route", "hypergeometric-series"}, {"value", series}});
    rows.push_back({{"route", "asymptotic"},
                           {"terms", 4},
                           {"value", asym},
                           {"relative_difference", std::fabs(asym - series) / series}});
    if (n <= cfg.exact_cap) {
        json row = {{"route", "generating-function"}};
        const QSqrt2 m = moment_real_count(n, 1);
        put_exact(row, m);
        row["value"] = m.to_double();
        rows.push_back(row);
    }
    doc["rows"] = rows;
    return {doc, kExitOk};
}

Outcome cmd_verify(const Config&, const VerifyOptions& opts) {
    json rows;
    if (opts.suite == "traces") rows = verify_traces(opts.n);
    else if (opts.suite == "pfaffian-theorem") rows = verify_pfaffian_theorem(opts);
    else if (opts.suite == "strings") rows = verify_strings(opts.ell);
    else if (opts.suite == "projection") rows = verify_projection(opts.n);
    else if (opts.suite == "one-pair") rows = verify_one_pair(opts.n);
    else throw InputError("unknown suite '" + opts.suite + "'");

    bool passed = true;
    for (const auto& r : rows) passed = passed && r["passed"].get<bool>();
    json doc = base_doc("verify");
    doc["suite"] = opts.suite;
    doc["passed"] = passed;
    doc["rows"] = rows;
    return {doc, passed ? kExitOk : kExitVerificationFailed};
}

Outcome cmd_mc(const Config& cfg, int n, std::int64_t samples, std::uint64_t seed, int workers) {
    require_n(n, 1, "n");
    if (samples < 0) throw InputError("samples must be non-negative");
    require_n(workers, 1, "workers");
    const auto res = run_mc({n, samples, seed, workers});
    json doc = base_doc("mc");
    doc["n"] = n;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["workers"] = workers;
    doc["elapsed_seconds"] = res.elapsed_seconds;
    json rows = json::array();
    double max_z = 0;
    if (samples > 0) {
        const bool with_exact = n <= cfg.exact_cap;
        std::optional<ProbabilityTable> table;
        if (with_exact) table = prob_table(n);
        for (int k = n % 2; k <= n; k += 2) {
            const auto it = res.counts.find(k);
            json row = {{"k", k}, {"count", it == res.counts.end() ? 0 : it->second}, {"frequency", res.frequency(k)}};
            if (table) {
                const double p = table->rows.at(k).to_double();
                const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
                row["exact"] = p;
                row["sigma"] = sigma;
                const double z = sigma > 0 ? (res.frequency(k) - p) / sigma : 0.0;
                row["z"] = z;
                max_z = std::max(max_z, std::fabs(z));
            }
            rows.push_back(row);
        }
    }
    doc["max_abs_z"] = max_z;
    doc["rows"] = rows;
    return {doc, kExitOk};
}

std::string format_output(const json& doc, OutputFormat format) {
    if (format == OutputFormat::json) return doc.dump(2) + "\n";
    const auto rows = flat_rows(doc);
    const auto cols = column_union(rows);
    std::ostringstream os;
    if (format == OutputFormat::csv) {
        for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_cell(cols[c]);
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_cell(lookup(r, cols[c]));
            os << '\n';
        }
        return os.str();
    }
    for (const auto& [key, v] : doc.items()) {
        if (key == "rows") continue;
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(v, key, flat);
        for (const auto& [k, text] : flat) os << k << ": " << text << '\n';
    }
    if (rows.empty()) return os.str();
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], lookup(r, cols[c]).size());
    }
    auto line = [&](auto&& cell) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::string s = cell(c);
            os << s;
            if (c + 1 < cols.size()) os << std::string(width[c] - s.size() + 2, ' ');
        }
        os << '\n';
    };
    os << '\n';
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& r : rows) line([&](std::size_t c) { return lookup(r, cols[c]); });
    return os.str();
}

}  // namespace ginoe::cli
