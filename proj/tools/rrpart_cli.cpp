// rrpart: batch verification of the even-odd partition identities.
//
//   rrpart verify    --identity PB|AB|system|shift ...
//   rrpart count     --family P --i 2 --n 6
//   rrpart list      --family B --i 1 --n 6
//   rrpart bijection --name P-case-two-threes --n 16
//   rrpart table     --k 1 --parity even --max-n 20
//   rrpart series    --family A --i 2 --max-n 200
//   rrpart witness   --i 2 --max-n 20
//
// Exit status: 0 when every executed check passes, 1 when some check fails,
// 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrpart/rrpart.hpp"

using namespace rrpart;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family = "P";
    std::optional<int> i;
    std::optional<int> min_part;
    std::optional<int> k;
    std::string parity = "odd";
    std::optional<int> max_n;
    std::optional<int> n;
    std::optional<int> fixed_length;
    std::string format = "text";
    std::string out;
    int oracle_limit = 60;
    std::string identity = "PB";
    bool refined = false;
    std::string bijection;
    std::string direction = "forward";
};

constexpr int kDefaultDpBound = 200;

Part resolve_min_part(const RunConfig& c) {
    if (c.k) {
        if (c.min_part) throw UsageError("give either --min-part or --k/--parity, not both");
        if (*c.k < 1) throw UsageError("--k must be >= 1");
        return c.parity == "even" ? 2 * *c.k : 2 * *c.k + 1;
    }
    return c.min_part.value_or(1);
}

FamilySpec resolve_family(const RunConfig& c, int default_i = 2) {
    try {
        return FamilySpec::make(parse_family_kind(c.family), c.i.value_or(default_i), resolve_min_part(c));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<int> indices(const RunConfig& c) {
    if (c.i) return {*c.i};
    return {1, 2};
}

int require_n(const RunConfig& c) {
    if (!c.n) throw UsageError("--n is required");
    if (*c.n < 0) throw UsageError("--n must be non-negative");
    return *c.n;
}

int require_oracle_bound(const RunConfig& c, int n, const char* what) {
    if (n > c.oracle_limit)
        throw UsageError(std::string(what) + " needs exhaustive enumeration up to " + std::to_string(n) +
                         ", above --oracle-limit " + std::to_string(c.oracle_limit));
    return n;
}

int dp_bound(const RunConfig& c) {
    const int n = c.max_n.value_or(kDefaultDpBound);
    if (n < 0) throw UsageError("--max-n must be non-negative");
    return n;
}

int oracle_bound(const RunConfig& c, const char* what) {
    const int n = c.max_n.value_or(c.oracle_limit);
    if (n < 0) throw UsageError("--max-n must be non-negative");
    return require_oracle_bound(c, n, what);
}

struct Outcome {
    std::string text;
    int status = 0;
};

std::string fmt(const Count& c) { return to_decimal(c); }

// ---------------------------------------------------------------------------

Outcome cmd_count(const RunConfig& c) {
    const FamilySpec f = resolve_family(c);
    const int n = require_n(c);
    Count value;
    std::string method;
    if (n <= c.oracle_limit) {
        value = count_family(n, f, c.fixed_length);
        method = "enumeration";
    } else if (f.kind == FamilyKind::A) {
        if (c.fixed_length) throw UsageError("fixed-length A counts above --oracle-limit are not available");
        value = rogers_ramanujan_product(f.i, static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
        method = "product";
    } else {
        const CountTable t(SystemVariant::for_min_part(f.min_part), n);
        // P and B with equal min_part share one recursion system.
        value = c.fixed_length ? t.value(f.i, *c.fixed_length, n) : t.family_count(f.i, n);
        method = "recursion";
    }
    if (c.format == "json") {
        json j{{"family", f}, {"n", n}, {"count", fmt(value)}, {"method", method}};
        j["fixed_length"] = c.fixed_length ? json(*c.fixed_length) : json(nullptr);
        return {j.dump() + "\n"};
    }
    return {fmt(value) + "\n"};
}

Outcome cmd_list(const RunConfig& c) {
    const FamilySpec f = resolve_family(c);
    const int n = require_oracle_bound(c, require_n(c), "list");
    const auto members = enumerate_family(n, f, c.fixed_length);
    std::ostringstream os;
    if (c.format == "json") {
        os << json(members).dump() << "\n";
    } else {
        for (const auto& p : members) {
            if (c.format == "csv") {
                for (std::size_t t = 0; t < p.parts().size(); ++t) os << (t ? "," : "") << p[t];
                os << "\n";
            } else {
                os << to_string(p) << "\n";
            }
        }
    }
    return {os.str()};
}

// verify -------------------------------------------------------------------

struct VerifyRow {
    int i;
    int n;
    std::vector<std::pair<std::string, Count>> values;
};

struct VerifyResult {
    std::string identity;
    Part min_part = 1;
    int max_n = 0;
    std::vector<VerifyRow> rows;
    std::vector<VerificationReport> reports;

    std::size_t violation_count() const {
        std::size_t v = 0;
        for (const auto& r : reports) v += r.violations.size();
        return v;
    }
};

void check(VerificationReport& r, int i, long long m, long long n, const Count& expected, const Count& actual,
           const char* what) {
    if (expected != actual) r.violations.push_back({i, m, n, expected, actual, what});
}

VerifyResult verify_pb(const RunConfig& c) {
    const Part j = resolve_min_part(c);
    const int max_n = dp_bound(c);
    const int enum_n = std::min(max_n, c.oracle_limit);
    VerifyResult res{"PB", j, max_n, {}, {}};
    const CountTable t(SystemVariant::for_min_part(j), max_n);
    for (int i : indices(c)) {
        VerificationReport rep{t.variant().name(), "P,B(i=" + std::to_string(i) + ",min_part=" + std::to_string(j) + ")",
                               max_n, {}};
        const FamilySpec p = FamilySpec::p(i, j), b = FamilySpec::b(i, j);
        for (int n = 0; n <= max_n; ++n) {
            VerifyRow row{i, n, {}};
            const Count dp = t.family_count(i, n);
            if (n <= enum_n) {
                const Count cp = count_family(n, p), cb = count_family(n, b);
                row.values = {{"P", cp}, {"B", cb}, {"table", dp}};
                check(rep, i, -1, n, cb, cp, "P(n) = B(n)");
                check(rep, i, -1, n, dp, cp, "P(n) = table sum");
                if (c.refined || c.fixed_length) {
                    for (int m = 0; m <= n; ++m) {
                        if (c.fixed_length && m != *c.fixed_length) continue;
                        const Count pm = count_family(n, p, m), bm = count_family(n, b, m);
                        check(rep, i, m, n, bm, pm, "p(m,n) = b(m,n)");
                        check(rep, i, m, n, t.value(i, m, n), pm, "p(m,n) = table");
                    }
                }
            } else {
                row.values = {{"table", dp}};
            }
            res.rows.push_back(std::move(row));
        }
        res.reports.push_back(std::move(rep));
    }
    return res;
}

VerifyResult verify_ab(const RunConfig& c) {
    if (resolve_min_part(c) != 1) throw UsageError("the A = B identity only exists for min_part 1");
    const int max_n = dp_bound(c);
    const int enum_n = std::min(max_n, c.oracle_limit);
    VerifyResult res{"AB", 1, max_n, {}, {}};
    const CountTable t(SystemVariant::system1(), max_n);
    for (int i : indices(c)) {
        VerificationReport rep{"product vs System1", "A,B(i=" + std::to_string(i) + ")", max_n, {}};
        const auto product = rogers_ramanujan_product(i, static_cast<std::size_t>(max_n));
        for (int n = 0; n <= max_n; ++n) {
            const Count& a = product[static_cast<std::size_t>(n)];
            const Count dp = t.family_count(i, n);
            VerifyRow row{i, n, {{"A", a}, {"B", dp}}};
            check(rep, i, -1, n, dp, a, "A product = B table sum");
            if (n <= enum_n) {
                const Count ea = count_family(n, FamilySpec::a(i)), eb = count_family(n, FamilySpec::b(i));
                check(rep, i, -1, n, ea, a, "A product = A enumeration");
                check(rep, i, -1, n, eb, dp, "B table sum = B enumeration");
                if (c.refined || c.fixed_length) {
                    for (int m = 0; m <= n; ++m) {
                        if (c.fixed_length && m != *c.fixed_length) continue;
                        check(rep, i, m, n, count_family(n, FamilySpec::b(i), m), count_family(n, FamilySpec::a(i), m),
                              "a(m,n) = b(m,n)");
                    }
                }
            }
            res.rows.push_back(std::move(row));
        }
        res.reports.push_back(std::move(rep));
    }
    return res;
}

VerifyResult verify_system_cmd(const RunConfig& c) {
    const Part j = resolve_min_part(c);
    const int max_n = oracle_bound(c, "verify --identity system");
    VerifyResult res{"system", j, max_n, {}, {}};
    const CountTable t(SystemVariant::for_min_part(j), max_n);
    for (FamilyKind kind : {FamilyKind::P, FamilyKind::B}) {
        const FamilySpec f = FamilySpec::make(kind, 1, j);
        res.reports.push_back(verify_system(t, f, max_n));
        res.reports.push_back(compare_table_with_oracle(t, f, max_n));
    }
    return res;
}

VerifyResult verify_shift(const RunConfig& c) {
    if (c.min_part) throw UsageError("verify --identity shift takes --k, not --min-part");
    const int k = c.k.value_or(1);
    if (k < 1) throw UsageError("--k must be >= 1");
    const int max_n = oracle_bound(c, "verify --identity shift");
    VerifyResult res{"shift", 2 * k + 1, max_n, {}, {}};
    for (int i : indices(c)) {
        res.reports.push_back(shift_identity_check(k, i, max_n));
        for (Part j : {2 * k + 1, 2 * k}) {
            VerificationReport rep{"counts", "P,B(i=" + std::to_string(i) + ",min_part=" + std::to_string(j) + ")",
                                   max_n, {}};
            for (int n = 0; n <= max_n; ++n) {
                const Count cp = count_family(n, FamilySpec::p(i, j)), cb = count_family(n, FamilySpec::b(i, j));
                res.rows.push_back({i, n, {{"P^" + std::to_string(j), cp}, {"B^" + std::to_string(j), cb}}});
                check(rep, i, -1, n, cb, cp, "P(n) = B(n)");
            }
            res.reports.push_back(std::move(rep));
        }
    }
    return res;
}

Outcome cmd_verify(const RunConfig& c) {
    VerifyResult res;
    if (c.identity == "PB")
        res = verify_pb(c);
    else if (c.identity == "AB")
        res = verify_ab(c);
    else if (c.identity == "system")
        res = verify_system_cmd(c);
    else if (c.identity == "shift")
        res = verify_shift(c);
    else
        throw UsageError("unknown --identity '" + c.identity + "' (PB, AB, system, shift)");

    const std::size_t bad = res.violation_count();
    std::ostringstream os;
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& r : res.rows) {
            json row{{"i", r.i}, {"n", r.n}};
            for (const auto& [k, v] : r.values) row[k] = fmt(v);
            rows.push_back(std::move(row));
        }
        json j{{"identity", res.identity},
               {"min_part", res.min_part},
               {"max_n", res.max_n},
               {"rows", rows},
               {"reports", res.reports},
               {"ok", bad == 0}};
        os << j.dump(2) << "\n";
    } else {
        os << "identity " << res.identity << " min_part=" << res.min_part << " max_n=" << res.max_n << "\n";
        for (const auto& r : res.rows) {
            os << "i=" << r.i << " n=" << r.n;
            for (const auto& [k, v] : r.values) os << " " << k << "=" << v;
            os << "\n";
        }
        for (const auto& rep : res.reports) {
            os << rep.system << " " << rep.family << ": "
               << (rep.ok() ? "ok" : std::to_string(rep.violations.size()) + " violation(s)") << "\n";
            for (const auto& v : rep.violations)
                os << "  violation i=" << v.i << " m=" << v.m << " n=" << v.n << " expected=" << v.expected
                   << " actual=" << v.actual << " [" << v.equation << "]\n";
        }
        os << (bad == 0 ? "PASS" : "FAIL (" + std::to_string(bad) + " violations)") << "\n";
    }
    return {os.str(), bad == 0 ? 0 : 1};
}

// ---------------------------------------------------------------------------

Outcome cmd_bijection(const RunConfig& c) {
    BijectionId id;
    try {
        id.name = parse_bijection_name(c.bijection);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (c.direction == "forward")
        id.direction = Direction::Forward;
    else if (c.direction == "inverse")
        id.direction = Direction::Inverse;
    else
        throw UsageError("--direction must be forward or inverse");

    ShiftContext ctx;
    ctx.k = c.k.value_or(1);
    if (ctx.k < 1) throw UsageError("--k must be >= 1");
    ctx.kind = parse_family_kind(c.family);
    if (ctx.kind == FamilyKind::A &&
        (id.name == BijectionName::ShiftSub2k || id.name == BijectionName::ShiftAddOne))
        throw UsageError("family A has no shifted variant");
    ctx.i = c.i.value_or(2);

    const int n = require_oracle_bound(c, require_n(c), "bijection");
    const auto rows = trace_bijection(id, n, ctx);
    bool all_ok = true;
    std::ostringstream os;
    if (c.format == "json") {
        os << json(rows).dump() << "\n";
        for (const auto& r : rows) all_ok = all_ok && r.ok();
    } else {
        for (const auto& r : rows) {
            all_ok = all_ok && r.ok();
            os << to_string(r.input);
            if (r.case_no) os << " case " << *r.case_no;
            if (r.output)
                os << " -> " << to_string(*r.output) << (r.ok() ? " ok" : " FAIL");
            else
                os << " -> error: " << r.error;
            os << "\n";
        }
    }
    return {os.str(), all_ok ? 0 : 1};
}

Outcome cmd_table(const RunConfig& c) {
    const Part j = resolve_min_part(c);
    if (c.n) {
        if (!c.fixed_length) throw UsageError("a single cell needs both --n and --fixed-length");
        const CountTable t(SystemVariant::for_min_part(j), std::max(*c.n, 0));
        return {fmt(t.value(c.i.value_or(2), *c.fixed_length, *c.n)) + "\n"};
    }
    const int max_n = dp_bound(c);
    const CountTable t(SystemVariant::for_min_part(j), max_n);
    std::ostringstream os;
    if (c.format == "json") {
        json cells = json::array();
        for (int i : {1, 2})
            for (int n = 0; n <= max_n; ++n)
                for (int m = 0; m <= n; ++m)
                    cells.push_back({{"i", i}, {"m", m}, {"n", n}, {"count", fmt(t.value(i, m, n))}});
        os << json{{"system", t.variant().name()}, {"max_n", max_n}, {"cells", cells}}.dump() << "\n";
    } else {
        write_table_csv(os, t, max_n);
    }
    return {os.str()};
}

Outcome cmd_series(const RunConfig& c) {
    const FamilySpec f = resolve_family(c);
    const int max_n = dp_bound(c);
    const auto degree = static_cast<std::size_t>(max_n);
    const TruncatedSeries s = f.kind == FamilyKind::A
                                  ? rogers_ramanujan_product(f.i, degree)
                                  : series_from_table(CountTable(SystemVariant::for_min_part(f.min_part), max_n), f.i,
                                                      degree);
    std::ostringstream os;
    if (c.format == "json") {
        os << series_to_json(s).dump() << "\n";
    } else {
        if (c.format == "csv") os << "n,count\n";
        for (std::size_t n = 0; n <= degree; ++n) os << n << (c.format == "csv" ? "," : " ") << s[n] << "\n";
    }
    return {os.str()};
}

Outcome cmd_witness(const RunConfig& c) {
    const int i = c.i.value_or(2);
    if (i != 1 && i != 2) throw UsageError("--i must be 1 or 2");
    const int max_n = require_oracle_bound(c, c.max_n.value_or(20), "witness");
    const auto w = refined_ab_witness(i, max_n);
    if (c.format == "json") {
        json j = w ? json{{"i", i}, {"m", w->m}, {"n", w->n}, {"count_a", fmt(w->count_a)}, {"count_b", fmt(w->count_b)}}
                   : json{{"i", i}, {"witness", nullptr}};
        return {j.dump() + "\n", w ? 0 : 1};
    }
    if (!w) return {"none up to n=" + std::to_string(max_n) + "\n", 1};
    return {"m=" + std::to_string(w->m) + " n=" + std::to_string(w->n) + " A=" + fmt(w->count_a) +
                " B=" + fmt(w->count_b) + "\n",
            0};
}

void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("--family", c.family, "Family kind")->check(CLI::IsMember({"A", "B", "P"}));
    sub->add_option("--i", c.i, "Family index")->check(CLI::Range(1, 2));
    sub->add_option("--min-part", c.min_part, "Minimum part j")->check(CLI::PositiveNumber);
    sub->add_option("--k", c.k, "Shift parameter k");
    sub->add_option("--parity", c.parity, "With --k: odd gives min part 2k+1, even gives 2k")
        ->check(CLI::IsMember({"odd", "even"}));
    sub->add_option("--max-n", c.max_n, "Upper weight bound");
    sub->add_option("--n", c.n, "Weight");
    sub->add_option("--fixed-length", c.fixed_length, "Restrict to partitions with this many parts");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", c.out, "Write output to this file");
    sub->add_option("--oracle-limit", c.oracle_limit, "Largest weight for exhaustive enumeration");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for even-odd Rogers-Ramanujan type partition identities"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* verify = app.add_subcommand("verify", "Run an identity sweep");
    add_common(verify, cfg);
    verify->add_option("--identity", cfg.identity, "PB, AB, system or shift")
        ->check(CLI::IsMember({"PB", "AB", "system", "shift"}));
    verify->add_flag("--refined", cfg.refined, "Also compare every fixed length m");

    auto* count = app.add_subcommand("count", "Count family members of weight n");
    add_common(count, cfg);
    auto* list = app.add_subcommand("list", "List family members of weight n");
    add_common(list, cfg);
    auto* bij = app.add_subcommand("bijection", "Trace a bijection over all domain members of weight n");
    add_common(bij, cfg);
    bij->add_option("--name", cfg.bijection, "Bijection name")->required();
    bij->add_option("--direction", cfg.direction, "forward or inverse");
    auto* table = app.add_subcommand("table", "Emit recursion-system cells");
    add_common(table, cfg);
    auto* series = app.add_subcommand("series", "Emit a generating series");
    add_common(series, cfg);
    auto* witness = app.add_subcommand("witness", "Find a length where A and B counts differ");
    add_common(witness, cfg);

    CLI11_PARSE(app, argc, argv);

    Outcome result;
    try {
        if (verify->parsed())
            result = cmd_verify(cfg);
        else if (count->parsed())
            result = cmd_count(cfg);
        else if (list->parsed())
            result = cmd_list(cfg);
        else if (bij->parsed())
            result = cmd_bijection(cfg);
        else if (table->parsed())
            result = cmd_table(cfg);
        else if (series->parsed())
            result = cmd_series(cfg);
        else
            result = cmd_witness(cfg);
    } catch (const UsageError& e) {
        std::cerr << "rrpart: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rrpart: " << e.what() << "\n";
        return 2;
    }

    if (cfg.out.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "rrpart: cannot open " << cfg.out << "\n";
            return 2;
        }
        f << result.text;
    }
    return result.status;
}
