#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamlab/constructions.hpp"
#include "hamlab/graph6.hpp"
#include "hamlab/hamiltonian.hpp"
#include "hamlab/suites.hpp"
#include "hamlab/version.hpp"

namespace {

using hamlab::Graph;

int run_construct(const std::string& kind, const std::vector<std::string>& args) {
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw CLI::ValidationError("construct " + kind, "wrong number of arguments");
    };
    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        const int value = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing text: " + s);
        return value;
    };
    auto emit = [](const Graph& g) { std::cout << hamlab::emit_graph6(g) << "\n"; };
    auto map_stdin = [&emit](auto&& fn) {
        std::string line;
        while (std::getline(std::cin, line)) {
            const auto start = line.find_first_not_of(" \t\r\n");
            if (start == std::string::npos) continue;
            emit(fn(hamlab::parse_graph6(line)));
        }
    };

    if (kind == "mycielski-of") {
        need(1);
        emit(hamlab::mycielski(hamlab::parse_graph6(args[0])).graph);
    } else if (kind == "iterated-mycielski") {
        need(1);
        emit(hamlab::iterated_mycielski(parse_int(args[0])));
    } else if (kind == "power") {
        need(2);
        emit(hamlab::power(hamlab::parse_graph6(args[0]), parse_int(args[1])));
    } else if (kind == "complement") {
        if (args.size() == 1)
            emit(hamlab::complement(hamlab::parse_graph6(args[0])));
        else if (args.empty())
            map_stdin([](const Graph& g) { return hamlab::complement(g); });
        else
            need(1);
    } else if (kind == "closure") {
        if (args.size() == 1)
            emit(hamlab::closure(hamlab::parse_graph6(args[0])));
        else if (args.empty())
            map_stdin([](const Graph& g) { return hamlab::closure(g); });
        else
            need(1);
    } else if (kind == "standard") {
        need(2);
        emit(hamlab::standard_graph(args[0], parse_int(args[1])));
    } else {
        throw CLI::ValidationError("construct", "unknown kind: " + kind);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph toolkit: mycielski constructions, hamiltonicity and coloring "
                 "certificates, verification suites"};
    app.set_version_flag("--version", hamlab::kVersion);
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "emit graphs as graph6 lines");
    std::string kind;
    std::vector<std::string> construct_args;
    construct->add_option("kind", kind,
                          "mycielski-of | iterated-mycielski | power | complement | closure | "
                          "standard")
        ->required();
    construct->add_option("args", construct_args, "kind arguments");

    auto* certify = app.add_subcommand("certify", "check a claim over graph6 input lines");
    std::string claim;
    std::vector<std::string> claim_args;
    std::string certify_corpus;
    bool certify_no_ts = false;
    certify->add_option("claim", claim,
                        "hamiltonian | hamiltonian-path <u> <v> | hamiltonian-connected | "
                        "chromatic | k-critical | self-complementary")
        ->required();
    certify->add_option("args", claim_args, "claim arguments");
    certify->add_option("--corpus", certify_corpus, "graph6 file (default: standard input)");
    certify->add_flag("--no-timestamp", certify_no_ts,
                      "omit timestamp and wall time for byte-stable output");

    auto* suite = app.add_subcommand("suite", "run a verification suite");
    std::string suite_name;
    hamlab::SuiteOptions opts;
    bool suite_no_ts = false;
    suite->add_option("name", suite_name, "theorem5 | theorem9 | theorem11 | prop7 | conditions")
        ->required();
    suite->add_option("--max-n", opts.max_n, "largest graph order consumed");
    suite->add_option("--max-k", opts.max_k, "largest mycielskian level");
    suite->add_option("--n", opts.only_n, "restrict theorem5 to one order");
    suite->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--corpus", opts.corpus, "graph6 file instead of built-in enumeration");
    suite->add_flag("--no-timestamp", suite_no_ts,
                    "omit timestamp and wall time for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(kind, construct_args);
        if (certify->parsed()) {
            hamlab::SuiteOptions copts;
            copts.timestamp = !certify_no_ts;
            hamlab::SuiteResult result;
            if (certify_corpus.empty()) {
                result = hamlab::run_certify(claim, claim_args, std::cin, "stdin", copts);
            } else {
                std::ifstream in(certify_corpus);
                if (!in) {
                    std::cerr << "cannot open corpus file: " << certify_corpus << "\n";
                    return 2;
                }
                result = hamlab::run_certify(claim, claim_args, in, certify_corpus, copts);
            }
            std::cout << result.report.dump(2) << "\n";
            if (result.exit_code == 2 && result.report.contains("error"))
                std::cerr << result.report["error"].get<std::string>() << "\n";
            return result.exit_code;
        }
        opts.timestamp = !suite_no_ts;
        const auto result = hamlab::run_suite(suite_name, opts);
        std::cout << result.report.dump(2) << "\n";
        if (result.exit_code == 2 && result.report.contains("error"))
            std::cerr << result.report["error"].get<std::string>() << "\n";
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
