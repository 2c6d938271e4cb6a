// hseq: exact sequence toolkit over the Hurwitz series ring.
//
// Exit codes: 0 success, 1 internal error, 2 input/pipeline parse error,
// 3 ring or precondition violation, 4 unknown verification suite.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hurwitz/dynamics.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/pipeline.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/verify.hpp"

namespace {

using namespace hurwitz;

Series read_series(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_series(buf.str());
    }
    return parse_series_file(path);
}

void write_series(const Series& s, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << emit_series(s);
    else
        emit_series_file(s, path);
}

std::vector<Value> parse_value_list(const Ring& ring, const std::string& csv) {
    std::vector<Value> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string::npos)
            end = csv.size();
        const std::string token = csv.substr(start, end - start);
        if (token.empty())
            throw ParseError("empty entry in value list '" + csv + "'");
        out.push_back(parse_payload(ring, token));
        if (end == csv.size())
            break;
        start = end + 1;
    }
    return out;
}

void print_trace_line(std::size_t step, const Delta& d) {
    std::cout << "n=" << step << " k=" << d.agreement() << " delta=" << d.metric() << "\n";
}

int cmd_transform(const std::string& input, const std::string& pipeline,
                  const std::string& output) {
    const PipelineSpec spec = PipelineSpec::parse(pipeline);
    const Series in = read_series(input);
    write_series(apply_pipeline(in, spec), output);
    return 0;
}

int cmd_member(const std::string& input) {
    std::cout << (is_in_br(read_series(input)) ? "true" : "false") << "\n";
    return 0;
}

int cmd_complete_odds(const std::string& ring_tag, std::size_t precision,
                      const std::string& odds_csv, const std::string& output) {
    const Ring ring = Ring::from_tag(ring_tag);
    write_series(even_from_odd(ring, parse_value_list(ring, odds_csv), precision), output);
    return 0;
}

int cmd_complete_evens(const std::string& ring_tag, std::size_t precision,
                       const std::string& evens_csv, const std::string& sqrt_a2,
                       const std::string& output) {
    const Ring ring = Ring::from_tag(ring_tag);
    write_series(odd_from_even(ring, parse_value_list(ring, evens_csv),
                               parse_payload(ring, sqrt_a2), precision),
                 output);
    return 0;
}

int cmd_dynamics(const std::string& input, std::optional<std::size_t> max_steps, bool trace,
                 const std::string& output) {
    const Series start = read_series(input);
    const Series target = transform_u(start);

    Series cur = start;
    std::optional<std::size_t> converged_at;
    for (std::size_t step = 0;; ++step) {
        const Delta d = delta(cur, target);
        if (trace)
            print_trace_line(step, d);
        if (d.is_equal_at_precision()) {
            converged_at = step;
            break;
        }
        if (max_steps && step >= *max_steps)
            break;
        cur = autoconvolution(cur);
    }
    if (converged_at)
        std::cout << "converged_at=" << *converged_at << "\n";
    else
        std::cout << "converged_at=none\n";
    if (!output.empty())
        write_series(cur, output);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t trials, std::uint64_t seed) {
    std::vector<VerifyReport> reports;
    if (suite == "all")
        reports = run_all_suites(trials, seed);
    else
        reports.push_back(run_suite(suite, trials, seed));

    bool all_passed = true;
    for (const VerifyReport& r : reports) {
        std::cout << format_report(r);
        std::cerr << "elapsed_ms: " << r.elapsed.count() << " (" << r.suite << ")\n";
        all_passed = all_passed && r.passed();
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequence transforms over the Hurwitz series ring"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string pipeline;
    std::string ring_tag = "Z";
    std::string odds_csv, evens_csv, sqrt_a2;
    std::string suite = "all";
    std::size_t precision = 8;
    std::uint64_t trials = 100;
    std::uint64_t seed = 42;
    std::optional<std::size_t> max_steps;
    bool trace = false;

    CLI::App* transform = app.add_subcommand("transform", "apply a pipeline of transforms");
    transform->add_option("-i,--input", input, "series file ('-' for stdin)");
    transform->add_option("-o,--output", output, "output file (stdout when omitted)");
    transform->add_option("-p,--pipeline", pipeline,
                          "comma-separated steps: E, L:<y>, Bous, S, Sinv, V:<k>, A, U, "
                          "invert, exp, log")
        ->required();

    CLI::App* member = app.add_subcommand("member", "test membership in B_R");
    member->add_option("-i,--input", input, "series file ('-' for stdin)");

    CLI::App* odds = app.add_subcommand("complete-odds",
                                        "reconstruct the B_R element with given odd terms");
    odds->add_option("--ring", ring_tag, "ring tag: Z, Q, Zmod:<m>");
    odds->add_option("--precision", precision, "output precision")->required();
    odds->add_option("--odds", odds_csv, "comma-separated a_1,a_3,...")->required();
    odds->add_option("-o,--output", output, "output file (stdout when omitted)");

    CLI::App* evens = app.add_subcommand("complete-evens",
                                         "reconstruct odd terms from even ones");
    evens->add_option("--ring", ring_tag, "ring tag: Z, Q, Zmod:<m>");
    evens->add_option("--precision", precision, "output precision")->required();
    evens->add_option("--evens", evens_csv, "comma-separated a_2,a_4,...")->required();
    evens->add_option("--sqrt-a2", sqrt_a2, "a chosen square root of a_2")->required();
    evens->add_option("-o,--output", output, "output file (stdout when omitted)");

    CLI::App* dynamics = app.add_subcommand("dynamics",
                                            "iterate autoconvolution toward the completion");
    dynamics->add_option("-i,--input", input, "series file ('-' for stdin)");
    dynamics->add_option("--steps", max_steps, "cap on autoconvolution applications");
    dynamics->add_flag("--trace", trace, "print one line per iterate");
    dynamics->add_option("-o,--output", output, "write the final iterate");

    CLI::App* verify = app.add_subcommand("verify", "run randomized verification suites");
    verify->add_option("suite", suite, "ring, series, bell, transforms, br, dynamics, all");
    verify->add_option("--trials", trials, "randomized rounds per suite");
    verify->add_option("--seed", seed, "RNG seed (reports are deterministic per seed)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(transform))
            return cmd_transform(input, pipeline, output);
        if (app.got_subcommand(member))
            return cmd_member(input);
        if (app.got_subcommand(odds))
            return cmd_complete_odds(ring_tag, precision, odds_csv, output);
        if (app.got_subcommand(evens))
            return cmd_complete_evens(ring_tag, precision, evens_csv, sqrt_a2, output);
        if (app.got_subcommand(dynamics))
            return cmd_dynamics(input, max_steps, trace, output);
        if (app.got_subcommand(verify))
            return cmd_verify(suite, trials, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
