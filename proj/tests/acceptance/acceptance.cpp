// Acceptance runner: one PASS/FAIL line per criterion.
//
// Criteria 1-7 are executed twice; criterion 8 compares the two textual
// reports byte for byte. Timings go to stdout only, never into the report.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "rrpart/rrpart.hpp"

using namespace rrpart;

namespace {

struct Log {
    std::ostringstream out;
    bool pass = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            out << "  FAILED: " << what << "\n";
        }
    }
    void note(const std::string& line) { out << "  " << line << "\n"; }
    void report(const VerificationReport& r) {
        note(r.system + " " + r.family + " max_n=" + std::to_string(r.max_n) + ": " +
             (r.ok() ? "ok" : std::to_string(r.violations.size()) + " violations"));
        for (std::size_t v = 0; v < std::min<std::size_t>(r.violations.size(), 5); ++v) {
            const auto& x = r.violations[v];
            expect(false, "i=" + std::to_string(x.i) + " m=" + std::to_string(x.m) + " n=" + std::to_string(x.n) +
                              " expected " + to_decimal(x.expected) + " got " + to_decimal(x.actual) + " (" +
                              x.equation + ")");
        }
        if (!r.ok()) pass = false;
    }
    void audit(const BijectionAudit& a) {
        note(a.name + ": domain " + std::to_string(a.domain_checked) + ", codomain " +
             std::to_string(a.codomain_checked) + (a.ok() ? ", ok" : ", " + std::to_string(a.failures.size()) + " failures"));
        for (std::size_t f = 0; f < std::min<std::size_t>(a.failures.size(), 5); ++f) expect(false, a.failures[f]);
        if (!a.ok()) pass = false;
    }
};

std::string joined(const std::vector<Partition>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : " ") + to_string(p);
    return s;
}

void golden_example(Log& log) {
    const std::vector<std::pair<FamilySpec, std::string>> cases = {
        {FamilySpec::p(2), "(6) (5,1) (3,3)"},
        {FamilySpec::b(2), "(6) (5,1) (4,2)"},
        {FamilySpec::a(2), "(6) (4,1,1) (1,1,1,1,1,1)"},
    };
    for (const auto& [f, want] : cases) {
        const std::string got = joined(enumerate_family(6, f));
        log.note(to_string(f) + " at n=6: " + got);
        log.expect(got == want, to_string(f) + " members");
        log.expect(count_family(6, f) == 3, to_string(f) + " count is 3");
    }
    const CountTable t(SystemVariant::system1(), 6);
    log.expect(t.family_count(2, 6) == 3, "table sum at n=6 is 3");
}

void pb_sweep(Log& log) {
    constexpr int N = 60;
    constexpr int kBrute = 45;
    for (int i : {1, 2}) {
        const auto p = length_refined_counts(FamilySpec::p(i), N);
        const auto b = length_refined_counts(FamilySpec::b(i), N);
        std::size_t cells = 0;
        for (int n = 0; n <= N; ++n) {
            Count tp = 0, tb = 0;
            for (int m = 0; m <= n; ++m) {
                ++cells;
                tp += refined_at(p, m, n);
                tb += refined_at(b, m, n);
                log.expect(refined_at(p, m, n) == refined_at(b, m, n),
                           "p(m,n)=b(m,n) at i=" + std::to_string(i) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
            log.expect(tp == tb, "P(n)=B(n) at i=" + std::to_string(i) + " n=" + std::to_string(n));
        }
        log.note("i=" + std::to_string(i) + ": " + std::to_string(cells) + " cells equal, P(60)=" +
                 to_decimal(count_family(N, FamilySpec::p(i))));

        // The pruned enumerator against the unpruned literal predicates.
        for (int n = 0; n <= kBrute; ++n) {
            const auto all = brute::all_partitions(n);
            std::vector<std::uint64_t> bp(static_cast<std::size_t>(n) + 1), bb(bp);
            for (const auto& x : all) {
                if (brute::in_p(x, i, 1)) ++bp[x.size()];
                if (brute::in_b(x, i, 1)) ++bb[x.size()];
            }
            for (int m = 0; m <= n; ++m) {
                log.expect(refined_at(p, m, n) == bp[static_cast<std::size_t>(m)], "P oracle cross-check");
                log.expect(refined_at(b, m, n) == bb[static_cast<std::size_t>(m)], "B oracle cross-check");
            }
        }
        log.note("i=" + std::to_string(i) + ": pruned enumeration matches literal predicates for n<=" +
                 std::to_string(kBrute));
    }
}

void system_one(Log& log) {
    constexpr int N = 40;
    const CountTable t(SystemVariant::system1(), N);
    for (const auto& f : {FamilySpec::p(1), FamilySpec::b(1)}) {
        log.report(verify_system(t, f, N));
        log.report(compare_table_with_oracle(t, f, N));
    }
}

void rr_series(Log& log) {
    constexpr std::size_t N = 200;
    constexpr std::size_t kEnum = 80;
    const CountTable t(SystemVariant::system1(), static_cast<int>(N));
    for (int i : {1, 2}) {
        const auto a = rogers_ramanujan_product(i, N);
        const auto cmp = series_equal_upto(a, series_from_table(t, i, N));
        log.expect(cmp.equal, "product vs B table sum, i=" + std::to_string(i));
        const auto cmp_enum = series_equal_upto(rogers_ramanujan_product(i, kEnum), series_from_counts(FamilySpec::b(i), kEnum));
        log.expect(cmp_enum.equal, "product vs pruned B enumeration, i=" + std::to_string(i));
        log.note("i=" + std::to_string(i) + ": coefficient q^200 = " + to_decimal(a[N]));
    }
}

void shift_identities(Log& log) {
    constexpr int N = 60;
    constexpr int kSystems = 40;
    for (int k : {1, 2, 3}) {
        for (int i : {1, 2}) {
            log.report(shift_identity_check(k, i, N));
            for (Part j : {2 * k + 1, 2 * k}) {
                const auto p = length_refined_counts(FamilySpec::p(i, j), N);
                const auto b = length_refined_counts(FamilySpec::b(i, j), N);
                bool eq = true;
                for (int n = 0; n <= N; ++n)
                    for (int m = 0; m <= n; ++m) eq = eq && refined_at(p, m, n) == refined_at(b, m, n);
                log.expect(eq, "P^j = B^j refined, j=" + std::to_string(j) + " i=" + std::to_string(i));
            }
        }
        const CountTable t2(SystemVariant::system2(k), kSystems);
        const CountTable t3(SystemVariant::system3(k), kSystems);
        for (FamilyKind kind : {FamilyKind::P, FamilyKind::B}) {
            const FamilySpec odd = FamilySpec::make(kind, 1, 2 * k + 1);
            const FamilySpec even = FamilySpec::make(kind, 1, 2 * k);
            log.report(verify_system(t2, odd, kSystems));
            log.report(compare_table_with_oracle(t2, odd, kSystems));
            log.report(verify_system(t3, even, kSystems));
            log.report(compare_table_with_oracle(t3, even, kSystems));
        }
    }
}

void bijection_suite(Log& log) {
    constexpr int N = 40;
    for (const auto& [name, label] : kBijectionNames) {
        if (name == BijectionName::ShiftSub2k || name == BijectionName::ShiftAddOne) {
            for (int k : {1, 2, 3})
                for (FamilyKind kind : {FamilyKind::P, FamilyKind::B})
                    for (int i : {1, 2}) {
                        const Route r = make_route(name, ShiftContext{k, kind, i});
                        BijectionAudit a = audit_route(r, N);
                        a.name += " " + std::string(to_string(kind)) + " i=" + std::to_string(i);
                        log.audit(a);
                    }
        } else {
            log.audit(audit_route(make_route(name), N));
        }
    }
    const std::array p_cases{BijectionName::PCaseEvenEq, BijectionName::PCaseTwoThrees, BijectionName::PCaseGeneric};
    const std::array b_cases{BijectionName::BCaseMin2, BijectionName::BCaseMin3};
    log.audit(audit_case_partition(p_cases, FamilySpec::p(1), N));
    log.audit(audit_case_partition(b_cases, FamilySpec::b(1), N));

    // Cardinality transport of the whole split: P(1) cell (m,n) splits into
    // P(1) at (m-1, n-2m) and P(2) at (m, n-2m), and the same for B.
    for (FamilyKind kind : {FamilyKind::P, FamilyKind::B}) {
        const auto c1 = length_refined_counts(FamilySpec::make(kind, 1, 1), N);
        const auto c2 = length_refined_counts(FamilySpec::make(kind, 2, 1), N);
        bool ok = true;
        for (int n = 1; n <= N; ++n)
            for (int m = 1; m <= n; ++m)
                ok = ok && refined_at(c1, m, n) == refined_at(c1, m - 1, n - 2 * m) + refined_at(c2, m, n - 2 * m);
        log.expect(ok, std::string(to_string(kind)) + " split cardinalities");
    }
}

void refined_witness(Log& log) {
    for (int i : {2, 1}) {
        const auto w = refined_ab_witness(i, 20);
        log.expect(w.has_value(), "witness exists for i=" + std::to_string(i));
        if (!w) continue;
        log.note("i=" + std::to_string(i) + ": witness m=" + std::to_string(w->m) + " n=" + std::to_string(w->n) +
                 " A=" + to_decimal(w->count_a) + " B=" + to_decimal(w->count_b));
        log.expect(count_family(w->n, FamilySpec::a(i), w->m) == w->count_a, "witness A count");
        log.expect(count_family(w->n, FamilySpec::b(i), w->m) == w->count_b, "witness B count");
        log.expect(w->count_a != w->count_b, "witness counts differ");
        log.expect(count_family(w->n, FamilySpec::a(i)) == count_family(w->n, FamilySpec::b(i)),
                   "totals agree at witness weight");
    }
    const Count a = count_family(6, FamilySpec::a(2), 2), b = count_family(6, FamilySpec::b(2), 2);
    log.note("i=2 m=2 n=6: A=" + to_decimal(a) + " B=" + to_decimal(b));
    log.expect(a == 0 && b == 2, "m=2 n=6 gives 0 vs 2");
    log.expect(count_family(6, FamilySpec::a(2)) == count_family(6, FamilySpec::b(2)), "totals at n=6");
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Log&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "golden example n=6", golden_example},
        {2, "P = B refined sweep, n <= 60", pb_sweep},
        {3, "System1 equations and table, n <= 40", system_one},
        {4, "product series vs B counts, n <= 200", rr_series},
        {5, "shift identities and Systems 2/3", shift_identities},
        {6, "bijection audits, weight <= 40", bijection_suite},
        {7, "refined A/B witness", refined_witness},
    };
    return all;
}

struct Run {
    std::string report;
    std::vector<bool> pass;
    std::vector<double> seconds;
};

Run run_all() {
    Run run;
    std::ostringstream report;
    for (const auto& c : criteria()) {
        Log log;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(log);
        } catch (const std::exception& e) {
            log.expect(false, std::string("exception: ") + e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        report << "criterion " << c.id << " (" << c.title << "): " << (log.pass ? "pass" : "fail") << "\n"
               << log.out.str();
        run.pass.push_back(log.pass);
        run.seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    run.report = report.str();
    return run;
}

}  // namespace

int main(int argc, char** argv) {
    std::string report_path;
    for (int a = 1; a < argc; ++a) {
        const std::string arg = argv[a];
        if (arg == "--report" && a + 1 < argc)
            report_path = argv[++a];
        else {
            std::cerr << "usage: " << argv[0] << " [--report PATH]\n";
            return 2;
        }
    }

    const Run first = run_all();
    const Run second = run_all();
    const bool deterministic = !first.report.empty() && first.report == second.report;

    bool all = deterministic;
    std::ostringstream summary;
    for (std::size_t c = 0; c < criteria().size(); ++c) {
        all = all && first.pass[c];
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", first.seconds[c]);
        summary << (first.pass[c] ? "[PASS] " : "[FAIL] ") << criteria()[c].id << " " << criteria()[c].title << " ("
                << secs << ")\n";
    }
    summary << (deterministic ? "[PASS] " : "[FAIL] ") << "8 determinism: two runs give byte-identical reports\n";

    std::cout << first.report << "\n" << summary.str();
    if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        f << first.report;
    }
    return all ? 0 : 1;
}
