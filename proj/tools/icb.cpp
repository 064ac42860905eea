// Command-line front end: verification suites, canonical-basis and
// structure-constant tables, and transfer-map evaluation.

#include "suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

int write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    os << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"icb: canonical bases of the split rank-one quantum symmetric pair,\n"
                 "their finite Schur-type quotients, and a rewriting certifier"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
    std::string suite;
    std::optional<std::int64_t> max_d, max_n;
    int jobs = 0;
    bool log_rewrites = false;
    std::string out_path;
    verify->add_option("--suite", suite, "lemma-a|qstep|remark2|transfer|positivity|cb-image|basis|bar|all")
        ->required();
    verify->add_option("--max-d", max_d, "largest level/degree checked");
    verify->add_option("--max-n", max_n, "largest exponent checked (lemma-a)");
    verify->add_option("--jobs", jobs, "worker threads (default: ICB_JOBS or hardware)");
    verify->add_flag("--log-rewrites", log_rewrites,
                     "write rewrite logs as JSON lines to standard error");
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    // table
    auto* table = app.add_subcommand("table", "Export structure-constant or basis tables");
    std::string kind, format = "json";
    std::int64_t table_d = 0;
    std::string table_out;
    table->add_option("--kind", kind, "structure|cb")
        ->required()
        ->check(CLI::IsMember({"structure", "cb"}));
    table->add_option("--d", table_d, "maximal degree (structure) or level (cb)")->required();
    table->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", table_out, "write to a file instead of stdout");

    // transfer
    auto* tr = app.add_subcommand("transfer", "Apply the composite transfer map to a polynomial");
    std::int64_t from_level = 0, to_level = 0;
    std::string poly_json, tr_out;
    tr->add_option("--from", from_level, "starting level")->required();
    tr->add_option("--to", to_level, "target level")->required();
    tr->add_option("--poly", poly_json,
                   "coefficient list in t, ascending: JSON array of {\"num\",\"den\"} or integers")
        ->required();
    tr->add_option("--out", tr_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) {
            icb::suites::SuiteOptions opts;
            opts.jobs = jobs;
            opts.log_rewrites = log_rewrites;
            opts.log_sink = &std::cerr;
            std::vector<icb::suites::SuiteReport> reports;
            try {
                reports = icb::suites::run_suite(suite, max_d, max_n, opts);
            } catch (const std::invalid_argument& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
            icb::ordered_json j;
            if (reports.size() == 1) {
                j = icb::suites::to_json(reports.front());
            } else {
                j = icb::ordered_json::array();
                for (const auto& r : reports) j.push_back(icb::suites::to_json(r));
            }
            const int rc = write_output(out_path, j.dump(2) + "\n");
            if (rc != 0) return rc;
            return icb::suites::exit_code(reports);
        }

        if (*table) {
            if (table_d < 0) {
                std::cerr << "--d must be nonnegative\n";
                return 2;
            }
            std::ostringstream os;
            if (kind == "structure") {
                if (format == "json")
                    os << icb::structure_table_json(table_d).dump(2) << "\n";
                else
                    icb::structure_table_csv(os, table_d);
            } else {
                if (format == "json")
                    os << icb::cb_list_json(table_d).dump(2) << "\n";
                else
                    icb::cb_table_csv(os, table_d);
            }
            return write_output(table_out, os.str());
        }

        if (*tr) {
            const std::int64_t drop = from_level - to_level;
            if (to_level < 0 || drop <= 0 || drop % 2 != 0) {
                std::cerr << "--from minus --to must be a positive even integer\n";
                return 2;
            }
            icb::TPoly p;
            try {
                p = icb::tpoly_from_json(icb::ordered_json::parse(poly_json));
            } catch (const std::exception& e) {
                std::cerr << "bad --poly: " << e.what() << "\n";
                return 2;
            }
            icb::SchurElement x = icb::project(p, from_level);
            while (x.level() > to_level) x = icb::transfer(x);
            return write_output(tr_out, icb::to_json(x).dump(2) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
