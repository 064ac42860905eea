#include "suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace icb::suites {

namespace {

using Clock = std::chrono::steady_clock;

struct UnitResult {
    std::uint64_t checks = 0;
    std::vector<Failure> failures;

    void check(bool ok, std::string id, std::string inputs, std::string expected,
               std::string actual) {
        ++checks;
        if (!ok) failures.push_back({std::move(id), std::move(inputs), std::move(expected),
                                     std::move(actual)});
    }
};

// Runs fn(0..n-1) across workers and merges results in index order.
UnitResult run_units(int jobs, std::int64_t n,
                     const std::function<UnitResult(std::int64_t)>& fn) {
    if (jobs <= 0) jobs = default_jobs();
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::int64_t>(n, 1))));

    std::vector<UnitResult> slots(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    if (n <= 0) return {};
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                slots[static_cast<std::size_t>(i)] = fn(i);
            } catch (const std::exception& e) {
                UnitResult r;
                r.check(false, "unit/" + std::to_string(i), "unit index " + std::to_string(i),
                        "no exception", e.what());
                slots[static_cast<std::size_t>(i)] = std::move(r);
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    UnitResult merged;
    for (auto& s : slots) {
        merged.checks += s.checks;
        for (auto& f : s.failures) merged.failures.push_back(std::move(f));
    }
    std::sort(merged.failures.begin(), merged.failures.end(),
              [](const Failure& a, const Failure& b) { return a.check_id < b.check_id; });
    return merged;
}

SuiteReport finalize(std::string name,
                     std::vector<std::pair<std::string, std::string>> params,
                     UnitResult result, Clock::time_point start) {
    SuiteReport rep;
    rep.suite = std::move(name);
    rep.params = std::move(params);
    rep.checks = result.checks;
    rep.failures = std::move(result.failures);
    rep.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

std::string cb_map_to_string(const std::map<CBIndex, RatFunc>& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : m) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*b(" << idx.eps << "," << idx.deg << ")";
    }
    return first ? "0" : os.str();
}

}  // namespace

const std::vector<std::string> kSuiteNames = {
    "lemma-a", "qstep", "remark2", "transfer", "positivity", "cb-image", "basis", "bar"};

int default_jobs() {
    if (const char* env = std::getenv("ICB_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

SuiteReport run_lemma_a(std::int64_t max_n, const SuiteOptions& opts) {
    const auto start = Clock::now();
    std::vector<RewriteLog> logs(static_cast<std::size_t>(max_n + 1));
    auto result = run_units(opts.jobs, max_n + 1, [&](std::int64_t n) {
        UnitResult r;
        ReduceOptions ro;
        if (opts.log_rewrites) ro.log = &logs[static_cast<std::size_t>(n)];
        const auto verdict = verify_lemma_a(n, ro);
        r.check(verdict.verdict == LemmaVerdict::certified, "lemma-a/n=" + std::to_string(n),
                "n=" + std::to_string(n), "certified (normal form 0)",
                "normal form " + verdict.normal_form.to_string());
        return r;
    });
    if (opts.log_rewrites && opts.log_sink) {
        for (const auto& log : logs) write_log_jsonl(*opts.log_sink, log);
    }
    return finalize("lemma-a", {{"max_n", std::to_string(max_n)}}, std::move(result), start);
}

SuiteReport run_qstep(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        for (std::int64_t n = 0; n <= d; ++n) {
            r.check(qstep_identity(d, n),
                    "qstep/d=" + std::to_string(d) + "/n=" + std::to_string(n),
                    "d=" + std::to_string(d) + ", n=" + std::to_string(n),
                    "[[d-1]] - [[n]](v^n v^{1-d} + v^-n v^{d-1}) = [[d-1-2n]]",
                    "identity fails");
        }
        return r;
    });
    return finalize("qstep", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_remark2(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    // Warm the product chains serially; the per-level checks then run
    // against shared immutable values.
    p0(max_d + 2);
    p1(max_d + 1);
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        const TPoly t = TPoly::t();
        const std::string ds = std::to_string(d);
        r.check(t * p0(d) == p1(d + 1).scaled(RatFunc(qint(d + 1))), "remark2/d=" + ds + "/line1",
                "d=" + ds, "t * P_{0,d} = [[d+1]] P_{1,d+1}", "polynomials differ");
        r.check(t * p1(d + 1) ==
                    p0(d + 2).scaled(RatFunc(qint(d + 2))) + p0(d).scaled(RatFunc(qint(d + 1))),
                "remark2/d=" + ds + "/line2", "d=" + ds,
                "t * P_{1,d+1} = [[d+2]] P_{0,d+2} + [[d+1]] P_{0,d}", "polynomials differ");
        return r;
    });
    return finalize("remark2", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_transfer(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    p0(max_d + 2);
    p1(max_d + 1);
    minpoly(max_d);
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        const std::string ds = std::to_string(d);
        r.check(divmod(p1(d + 1) - p0(d), minpoly(d)).remainder.is_zero(),
                "transfer/d=" + ds + "/p1-to-p0", "d=" + ds,
                "P_{1,d+1} = P_{0,d} mod m_d", "nonzero remainder");
        r.check(project(p0(d + 2), d).is_zero(), "transfer/d=" + ds + "/p0-vanishes",
                "d=" + ds, "P_{0,d+2} = 0 mod m_d", "nonzero projection");
        const SchurElement via_transfer = transfer(project(p1(d + 1), d + 2));
        r.check(via_transfer == project(p0(d), d), "transfer/d=" + ds + "/map", "d=" + ds,
                "transfer(P_{1,d+1} class at level d+2) = P_{0,d} class at level d",
                via_transfer.rep().to_string());
        r.check(transfer(project(TPoly(1), d + 2)) == project(TPoly(1), d),
                "transfer/d=" + ds + "/unit", "d=" + ds, "transfer(1) = 1", "unit not fixed");
        return r;
    });
    return finalize("transfer", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_positivity(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    // expansions of degree-2*max_d products reach basis elements of that degree
    p0(2 * max_d);
    p1(2 * max_d);
    const std::int64_t pairs_per_summand = max_d + 1;
    auto result = run_units(opts.jobs, 2 * pairs_per_summand, [&](std::int64_t unit) {
        UnitResult r;
        const int s = unit < pairs_per_summand ? 0 : 1;
        const std::int64_t di = unit % pairs_per_summand;
        for (std::int64_t dj = di; dj <= max_d; ++dj) {
            const CBIndex i = basis_index(s, di);
            const CBIndex j = basis_index(s, dj);
            const auto sc = structure_constants(i, j);
            const std::string id = "positivity/s=" + std::to_string(s) +
                                   "/di=" + std::to_string(di) + "/dj=" + std::to_string(dj);
            r.check(is_positive(sc), id,
                    "b(" + std::to_string(i.eps) + "," + std::to_string(i.deg) + ") * b(" +
                        std::to_string(j.eps) + "," + std::to_string(j.deg) + ")",
                    "all coefficients in N[v, v^-1]", cb_map_to_string(sc));
        }
        return r;
    });
    return finalize("positivity", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_cb_image(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    p0(max_d + 12);
    p1(max_d + 11);
    minpoly(max_d);
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        for (int eps = 0; eps <= 1; ++eps) {
            for (std::int64_t m = 0; m <= d + 10; ++m) {
                const CBIndex idx{eps, m};
                const auto res = cb_image_check(idx, d);
                r.check(res.verdict != CBImage::violation,
                        "cb-image/d=" + std::to_string(d) + "/eps=" + std::to_string(eps) +
                            "/m=" + std::to_string(m),
                        "b(" + std::to_string(eps) + "," + std::to_string(m) + ") at level " +
                            std::to_string(d),
                        "canonical basis element or zero", "violation");
            }
        }
        return r;
    });
    return finalize("cb-image", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_basis(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    p0(max_d);
    p1(max_d);
    minpoly(max_d);
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        const std::string ds = std::to_string(d);

        // d+1 pairwise distinct monic linear factors t + [[d-1-2i]]; together
        // with the tower check below, dividing by the factors new at this
        // level certifies the full factorization inductively.
        bool distinct = true, divides = true;
        std::vector<LaurentPoly> shifts;
        for (std::int64_t i = 0; i <= d; ++i) shifts.push_back(qint(d - 1 - 2 * i));
        for (std::size_t a = 0; a < shifts.size() && distinct; ++a)
            for (std::size_t b = a + 1; b < shifts.size(); ++b)
                if (shifts[a] == shifts[b]) {
                    distinct = false;
                    break;
                }
        const TPoly m = minpoly(d);
        const std::vector<LaurentPoly> fresh =
            d <= 1 ? shifts : std::vector<LaurentPoly>{shifts.front(), shifts.back()};
        for (const auto& c : fresh) {
            const TPoly factor = TPoly::t() + TPoly(RatFunc(c));
            if (!divmod(m, factor).remainder.is_zero()) {
                divides = false;
                break;
            }
        }
        if (m.degree() != d + 1 || m.leading() != RatFunc(1)) divides = false;
        r.check(distinct && divides, "basis/d=" + ds + "/minpoly-factors", "d=" + ds,
                "m_d has d+1 pairwise-distinct monic linear factors",
                distinct ? "a factor does not divide" : "repeated factor");

        // canonical basis: d+1 classes of pairwise distinct degrees 0..d
        const auto lst = cb_list(d);
        bool ok = static_cast<std::int64_t>(lst.size()) == d + 1;
        std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
        for (const auto& [idx, elt] : lst) {
            if (!ok) break;
            const std::int64_t deg = elt.rep().degree();
            if (deg < 0 || deg > d || seen[static_cast<std::size_t>(deg)]) {
                ok = false;
                break;
            }
            seen[static_cast<std::size_t>(deg)] = true;
            if (elt.rep().leading().is_zero()) ok = false;
        }
        r.check(ok, "basis/d=" + ds + "/cb-dimension", "d=" + ds,
                "exactly d+1 elements with distinct degrees 0..d",
                std::to_string(lst.size()) + " elements");

        if (d >= 2) {
            r.check(divmod(minpoly(d), minpoly(d - 2)).remainder.is_zero(),
                    "basis/d=" + ds + "/tower", "d=" + ds, "m_{d-2} divides m_d",
                    "nonzero remainder");
        }
        return r;
    });
    return finalize("basis", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

SuiteReport run_bar(std::int64_t max_d, const SuiteOptions& opts) {
    const auto start = Clock::now();
    p0(max_d);
    p1(max_d);
    auto result = run_units(opts.jobs, max_d + 1, [&](std::int64_t d) {
        UnitResult r;
        const std::string ds = std::to_string(d);
        if (d == 1) {
            r.check(p0(1) == TPoly::t(), "bar/iso-p0-1", "d=1", "P_{0,1} = t",
                    p0(1).to_string());
            r.check(p1(1) == TPoly::t(), "bar/iso-p1-1", "m=1", "P_{1,1} = t",
                    p1(1).to_string());
        }
        r.check(bar_t(p0(d)) == p0(d), "bar/d=" + ds + "/p0", "d=" + ds,
                "bar fixes P_{0,d}", "not bar-invariant");
        if (d >= 1)
            r.check(bar_t(p1(d)) == p1(d), "bar/m=" + ds + "/p1", "m=" + ds,
                    "bar fixes P_{1,m}", "not bar-invariant");
        return r;
    });
    return finalize("bar", {{"max_d", std::to_string(max_d)}}, std::move(result), start);
}

std::vector<SuiteReport> run_suite(const std::string& name,
                                   std::optional<std::int64_t> max_d,
                                   std::optional<std::int64_t> max_n,
                                   const SuiteOptions& opts) {
    auto d_or = [&](std::int64_t def) { return max_d.value_or(def); };
    auto n_or = [&](std::int64_t def) { return max_n.value_or(def); };
    if (name == "lemma-a") return {run_lemma_a(n_or(12), opts)};
    if (name == "qstep") return {run_qstep(d_or(40), opts)};
    if (name == "remark2") return {run_remark2(d_or(100), opts)};
    if (name == "transfer") return {run_transfer(d_or(60), opts)};
    if (name == "positivity") return {run_positivity(d_or(30), opts)};
    if (name == "cb-image") return {run_cb_image(d_or(30), opts)};
    if (name == "basis") return {run_basis(d_or(60), opts)};
    if (name == "bar") return {run_bar(d_or(50), opts)};
    if (name == "all") {
        std::vector<SuiteReport> all;
        for (const auto& n : kSuiteNames) {
            auto sub = run_suite(n, max_d, max_n, opts);
            for (auto& rep : sub) all.push_back(std::move(rep));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

int exit_code(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok()) return 1;
    return 0;
}

ordered_json to_json(const SuiteReport& report) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures) {
        failures.push_back(ordered_json{{"check_id", f.check_id},
                                        {"inputs", f.inputs},
                                        {"expected", f.expected},
                                        {"actual", f.actual}});
    }
    return ordered_json{{"suite", report.suite},
                        {"params", params},
                        {"checks", report.checks},
                        {"failures", failures},
                        {"wall_time", report.wall_time}};
}

}  // namespace icb::suites
