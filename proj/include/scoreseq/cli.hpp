#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scoreseq/checker.hpp"
#include "scoreseq/io.hpp"
#include "scoreseq/oracle.hpp"
#include "scoreseq/slicing.hpp"

namespace scoreseq::cli {

enum ExitCode : int { ok = 0, rejected = 1, usage = 2, internal = 3 };

struct Options {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t n = 0;
    bool json = false;
    std::string scores_path;
    std::string table_path;
    std::uint64_t seed = 0;
    std::uint64_t budget = default_oracle_budget;
    std::string trace_dir;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(fallback), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << body)) {
        throw UsageError("cannot write '" + path.string() + "'");
    }
}

inline TournamentParams params_for(const Options& opt, std::size_t n) {
    try {
        return {static_cast<std::int64_t>(n), opt.a, opt.b};
    } catch (const ContractViolation& e) {
        throw UsageError(e.what());
    }
}

inline int do_check(const Options& opt, std::istream& in, std::ostream& out) {
    const auto scores = parse_scores(slurp(opt.scores_path, in));
    const auto sorted = sort_scores(scores);
    const auto report = score_check(params_for(opt, scores.size()), sorted.sequence);
    if (opt.json) {
        out << report_to_json(report).dump() << '\n';
    } else {
        out << report.message() << '\n';
    }
    return report.accepted() ? ok : rejected;
}

inline int do_reconstruct(const Options& opt, std::istream& in, std::ostream& out,
                          std::ostream& err) {
    const auto scores = parse_scores(slurp(opt.scores_path, in));
    const auto params = params_for(opt, scores.size());
    const auto sorted = sort_scores(scores);
    const auto report = score_check(params, sorted.sequence);
    if (!report.accepted()) {
        err << report.message() << '\n';
        return rejected;
    }
    const auto table = restore_order(reconstruct(params, sorted.sequence), sorted.order);
    const auto verification = verify_table(params, table, scores);
    if (!verification.passed()) {
        err << "reconstructed table failed self-verification\n";
        return internal;
    }
    out << format_table(table);
    return ok;
}

inline int do_verify(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    if (opt.table_path.empty()) {
        throw UsageError("verify needs --table");
    }
    const auto table = parse_point_table(slurp(opt.table_path, in));
    const auto scores = parse_scores(slurp(opt.scores_path, in));
    if (scores.size() != table.size()) {
        throw UsageError("table has " + std::to_string(table.size()) + " players but " +
                         std::to_string(scores.size()) + " scores were given");
    }
    const auto report = verify_table(params_for(opt, table.size()), table, scores);
    for (const auto& v : report.violations) {
        err << to_string(v.kind) << " at (" << v.row + 1 << ", " << v.col + 1
            << "): observed " << v.observed << '\n';
    }
    out << (report.passed() ? "passed" : "failed") << '\n';
    return report.passed() ? ok : rejected;
}

inline int do_enumerate(const Options& opt, std::ostream& out) {
    if (opt.n < 1) {
        throw UsageError("enumerate needs --n >= 1");
    }
    const auto found =
        enumerate_score_sequences(params_for(opt, static_cast<std::size_t>(opt.n)), opt.budget);
    for (const auto& seq : found) {
        bool first = true;
        for (const auto v : seq) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    return ok;
}

inline int do_count(const Options& opt, std::istream& in, std::ostream& out) {
    const auto scores = parse_scores(slurp(opt.scores_path, in));
    out << count_reconstructions(params_for(opt, scores.size()), scores, opt.budget) << '\n';
    return ok;
}

inline int do_gen(const Options& opt, std::ostream& out) {
    if (opt.n < 1) {
        throw UsageError("gen needs --n >= 1");
    }
    const RandomSpec spec{params_for(opt, static_cast<std::size_t>(opt.n)), opt.seed};
    out << format_table(random_tournament(spec));
    return ok;
}

inline int do_trace(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto scores = parse_scores(slurp(opt.scores_path, in));
    const auto params = params_for(opt, scores.size());
    const auto sorted = sort_scores(scores);
    const auto report = score_check(params, sorted.sequence);
    if (!report.accepted()) {
        err << report.message() << '\n';
        return rejected;
    }
    ReconstructionTrace trace;
    reconstruct(params, sorted.sequence, &trace);
    const auto steps = format_steps_tsv(trace);
    const auto rounds = format_rounds_tsv(trace);
    if (opt.trace_dir.empty()) {
        out << steps << '\n' << rounds;
        return ok;
    }
    const std::filesystem::path dir(opt.trace_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw UsageError("cannot create '" + dir.string() + "': " + ec.message());
    }
    write_file(dir / "steps.tsv", steps);
    write_file(dir / "rounds.tsv", rounds);
    out << (dir / "steps.tsv").string() << '\n' << (dir / "rounds.tsv").string() << '\n';
    return ok;
}

}  // namespace detail

/// Runs one invocation. Always returns 0, 1, 2 or 3.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    Options opt;
    CLI::App app{"Score sequences of complete (a,b)-tournaments", "scoreseq"};
    app.require_subcommand(1, 1);

    auto add_params = [&opt](CLI::App* sub) {
        sub->add_option("--a", opt.a, "fewest points shared per match")->capture_default_str();
        sub->add_option("--b", opt.b, "most points shared per match")->capture_default_str();
    };
    auto add_scores = [&opt](CLI::App* sub) {
        sub->add_option("--scores", opt.scores_path, "score file (default: stdin)");
    };

    auto* check = app.add_subcommand("check", "decide whether a score vector is realizable");
    add_params(check);
    add_scores(check);
    check->add_flag("--json", opt.json, "emit verdict and bound tables as JSON");

    auto* recon = app.add_subcommand("reconstruct", "print a point table realizing the scores");
    add_params(recon);
    add_scores(recon);

    auto* verify = app.add_subcommand("verify", "check a point table against a score vector");
    add_params(verify);
    add_scores(verify);
    verify->add_option("--table", opt.table_path, "point table CSV")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list every realizable score sequence");
    add_params(enumerate);
    enumerate->add_option("--n", opt.n, "player count")->required();
    enumerate->add_option("--budget", opt.budget, "largest outcome space to search");

    auto* count = app.add_subcommand("count", "count point tables realizing the scores");
    add_params(count);
    add_scores(count);
    count->add_option("--budget", opt.budget, "largest outcome space to search");

    auto* gen = app.add_subcommand("gen", "print a random point table");
    add_params(gen);
    gen->add_option("--n", opt.n, "player count")->required();
    gen->add_option("--seed", opt.seed, "random seed");

    auto* trace = app.add_subcommand("trace", "dump the slicing rounds as TSV");
    add_params(trace);
    add_scores(trace);
    trace->add_option("--trace-dir", opt.trace_dir, "write steps.tsv and rounds.tsv here");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage;
    }

    try {
        if (check->parsed()) {
            return detail::do_check(opt, in, out);
        }
        if (recon->parsed()) {
            return detail::do_reconstruct(opt, in, out, err);
        }
        if (verify->parsed()) {
            return detail::do_verify(opt, in, out, err);
        }
        if (enumerate->parsed()) {
            return detail::do_enumerate(opt, out);
        }
        if (count->parsed()) {
            return detail::do_count(opt, in, out);
        }
        if (gen->parsed()) {
            return detail::do_gen(opt, out);
        }
        if (trace->parsed()) {
            return detail::do_trace(opt, in, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const InfeasibleInput& e) {
        err << e.what() << '\n';
        return rejected;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ArithmeticOverflow& e) {
        err << "error: scores too large: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
    err << "no subcommand\n";
    return usage;
}

}  // namespace scoreseq::cli
