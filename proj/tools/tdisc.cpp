#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "tdisc/jobspec.hpp"

using namespace tdisc;
using nlohmann::json;

namespace {

json result_json(const JobSpec& job, const RunResult& r) {
    json j;
    j["command"] = job.command;
    json hyps = json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back({{"name", h.name}, {"status", hyp_status_str(h.status)}, {"detail", h.detail}});
    j["hypotheses"] = hyps;
    json kv = json::object();
    for (const auto& [k, v] : r.kv) kv[k] = v;
    j["result"] = kv;
    json certs = json::array();
    for (const auto& h : r.hypotheses)
        if (h.status == HypStatus::Certified) certs.push_back(h.name);
    j["certificates"] = certs;
    return j;
}

int exit_code_of(const error& e) {
    if (dynamic_cast<const parse_error*>(&e)) return 4;
    if (dynamic_cast<const budget_error*>(&e)) return 3;
    if (dynamic_cast<const hypothesis_error*>(&e)) return 2;
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discriminants of transversal singularity type for pairs Z = Sing(X)"};
    std::string input, command, order, corpus_dir = "corpus", filter;
    long trunc = -1, budget = -1;
    bool as_json = false, verbose = false;
    app.add_option("--input", input, "job file");
    app.add_option("--command", command, "command (overrides the job file)");
    app.add_option("--order", order, "monomial order: lex|grevlex|wgrevlex");
    app.add_option("--trunc", trunc, "presentation truncation degree");
    app.add_option("--budget", budget, "S-pair reduction cap");
    app.add_option("--corpus-dir", corpus_dir, "directory of .job regression cases");
    app.add_option("--filter", filter, "substring filter for corpus case names");
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_flag("--verbose", verbose, "print hypothesis log");
    CLI11_PARSE(app, argc, argv);

    try {
        if (command == "corpus" || (input.empty() && !command.empty() && command == "corpus")) {
            auto rows = corpus_run(corpus_dir, filter);
            int failures = 0;
            json jrows = json::array();
            for (const auto& row : rows) {
                if (as_json) {
                    jrows.push_back({{"case", row.name},
                                     {"pass", row.pass},
                                     {"detail", row.detail},
                                     {"cite", row.cite}});
                } else {
                    std::cout << (row.pass ? "PASS " : "FAIL ") << row.name;
                    if (!row.pass) {
                        std::cout << "  -- " << row.detail;
                        if (!row.cite.empty()) std::cout << "  [" << row.cite << "]";
                    }
                    std::cout << "\n";
                }
                if (!row.pass) ++failures;
            }
            if (as_json) {
                json j;
                j["command"] = "corpus";
                j["cases"] = jrows;
                j["failures"] = failures;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << rows.size() << " cases, " << failures << " failures\n";
            }
            return failures == 0 ? 0 : 1;
        }

        if (input.empty()) {
            std::cerr << "error: --input FILE required (or --command corpus)\n";
            return 4;
        }
        JobSpec job = parse_job_file(input);
        if (!command.empty()) job.command = command;
        if (!order.empty()) job.options["order"] = order;
        if (trunc > 0) job.options["trunc"] = std::to_string(trunc);
        if (budget > 0) job.options["budget"] = std::to_string(budget);

        RunResult r = run_job(job);
        if (as_json) {
            std::cout << result_json(job, r).dump(2) << "\n";
        } else {
            for (const auto& line : r.lines) std::cout << line << "\n";
            if (verbose)
                for (const auto& h : r.hypotheses)
                    std::cout << "  [" << hyp_status_str(h.status) << "] " << h.name
                              << (h.detail.empty() ? "" : " -- " + h.detail) << "\n";
        }
        return r.exit_code;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_of(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
