#include "morsewidth/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "morsewidth/compose.hpp"
#include "morsewidth/morse_io.hpp"
#include "morsewidth/search.hpp"
#include "morsewidth/verify.hpp"

namespace morsewidth {

namespace {

constexpr std::size_t kMaxB = 200;
constexpr std::size_t kMaxEvents = 16;
constexpr std::size_t kMaxBridgeN = 1000;
constexpr std::size_t kMaxStackMaxima = 8;
constexpr std::size_t kMaxSummands = 5;
constexpr std::size_t kMaxSearchMaxima = 14;

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::string join_sizes(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

int cmd_width(const std::string& file, std::ostream& out, std::ostream& err) {
    MorseWord word;
    try {
        word = read_morse_file(file);
    } catch (const MorseError& e) {
        err << "error: " << file << ": " << e.what() << '\n';
        return kExitUsage;
    }
    const WidthProfile profile = level_widths(word);
    out << "width=" << profile.width << " levels=" << join_ints(profile.levels)
        << " thin_levels=" << join_sizes(thin_levels(word)) << " bridge=";
    if (word.component_count() > 1)
        out << "n/a";
    else
        out << (is_bridge_position(word) ? "true" : "false");
    out << '\n';
    return kExitOk;
}

int cmd_stack(const std::vector<std::string>& files, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
    std::vector<MorseWord> summands;
    for (const auto& file : files) {
        try {
            summands.push_back(read_morse_file(file));
            if (summands.back().component_count() != 1)
                throw MorseError(ErrorCode::MultiComponent, "a summand must be a single-component word");
        } catch (const MorseError& e) {
            err << "error: " << file << ": " << e.what() << '\n';
            return kExitUsage;
        }
    }

    const MorseWord stacked = stack(summands);
    std::vector<int> widths;
    Width sum = 0;
    for (const auto& s : summands) {
        widths.push_back(static_cast<int>(width(s)));
        sum += width(s);
    }
    const Width expected = sum - 2 * (static_cast<Width>(summands.size()) - 1);
    const Width actual = width(stacked);
    out << "summands=" << summands.size() << " widths=" << join_ints(widths) << " expected=" << expected
        << " width=" << actual << " thin_levels=" << join_sizes(thin_levels(stacked))
        << " identity=" << (actual == expected ? "ok" : "FAIL") << '\n';

    if (out_path.empty()) {
        out << format_morse(stacked);
    } else {
        try {
            write_morse_file(out_path, stacked);
        } catch (const MorseError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return actual == expected ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& suite, std::size_t max_b, std::size_t max_events, std::size_t maxima,
               std::size_t max_summands, const std::string& csv_path, std::ostream& out, std::ostream& err) {
    SuiteResult result;
    if (suite == "theorem41")
        result = verify_theorem41(max_b);
    else if (suite == "lemma5")
        result = verify_lemma5(max_events, sweep_threads());
    else if (suite == "bridge-formula")
        result = verify_bridge_formula(maxima == 0 ? 20 : maxima);
    else
        result = verify_stack_width(max_summands, maxima == 0 ? 5 : std::min(maxima, kMaxStackMaxima));

    out << result.summary.to_text();
    out << "suite=" << result.name << " checked=" << result.checked << " violations=" << result.violations << '\n';

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
        if (!csv) {
            err << "error: cannot write " << csv_path << '\n';
            return kExitUsage;
        }
        csv << result.details.to_csv();
    }
    if (result.violations > 0) {
        err << "counterexample: " << result.counterexample << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_search(std::size_t maxima, std::ostream& out) {
    const auto n = static_cast<std::int64_t>(maxima);
    const MinWidthResult result = min_width(n);
    out << "maxima=" << maxima << " min_width=" << result.width << " bridge_width=" << bridge_width_formula(n)
        << " witnesses=" << result.witnesses.size() << '\n';
    for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
        out << "# witness " << (i + 1) << " levels=" << join_ints(level_widths(result.witnesses[i]).levels) << '\n';
        out << format_morse(result.witnesses[i]);
    }
    return kExitOk;
}

} // namespace

unsigned sweep_threads() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("MORSEWIDTH_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && value > 0) threads = std::min(threads, static_cast<unsigned>(value));
    }
    return threads;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Width calculus for Morse presentations of knots", "morsewidth"};
    app.require_subcommand(1);

    std::string width_file;
    auto* width_cmd = app.add_subcommand("width", "Width, level profile and thin levels of a .morse file");
    width_cmd->add_option("file", width_file, ".morse file")->required();

    std::vector<std::string> stack_files;
    std::string stack_out;
    auto* stack_cmd = app.add_subcommand("stack", "Stack knots top to bottom by connected sum");
    stack_cmd->add_option("files", stack_files, ".morse summands, top first")->required();
    stack_cmd->add_option("--out", stack_out, "Write the stacked word here instead of stdout");

    std::string suite;
    std::size_t max_b = 50;
    std::size_t max_events = 10;
    std::size_t maxima = 0;
    std::size_t max_summands = 4;
    std::string csv_path;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "theorem41 | lemma5 | bridge-formula | stack-width")
        ->required()
        ->check(CLI::IsMember({"theorem41", "lemma5", "bridge-formula", "stack-width"}));
    verify_cmd->add_option("--max-b", max_b, "theorem41: largest bridge number")->check(CLI::Range(std::size_t{1}, kMaxB));
    verify_cmd->add_option("--max-events", max_events, "lemma5: largest cut word")
        ->check(CLI::Range(std::size_t{4}, kMaxEvents));
    verify_cmd->add_option("--maxima", maxima, "bridge-formula: largest n; stack-width: maxima per summand")
        ->check(CLI::Range(std::size_t{1}, kMaxBridgeN));
    verify_cmd->add_option("--max-summands", max_summands, "stack-width: most summands")
        ->check(CLI::Range(std::size_t{1}, kMaxSummands));
    verify_cmd->add_option("--csv", csv_path, "Write per-check results as CSV");

    std::size_t search_maxima = 0;
    auto* search_cmd = app.add_subcommand("search", "Minimal width over all knot words with n maxima");
    search_cmd->add_option("--maxima", search_maxima, "number of maxima")
        ->required()
        ->check(CLI::Range(std::size_t{1}, kMaxSearchMaxima));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (width_cmd->parsed()) return cmd_width(width_file, out, err);
        if (stack_cmd->parsed()) return cmd_stack(stack_files, stack_out, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(suite, max_b, max_events, maxima, max_summands, csv_path, out, err);
        if (search_cmd->parsed()) return cmd_search(search_maxima, out);
    } catch (const MorseError& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::Violation ? kExitViolation : kExitUsage;
    }
    return kExitUsage;
}

} // namespace morsewidth
