// fpart: command-line front end. One JSON report on stdout, errors on stderr.
//
// Exit codes: 0 success, 1 invalid input, 2 guard exceeded, 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fpart/errors.hpp"
#include "fpart/job.hpp"

namespace {

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw fpart::invalid_input("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

/// Inline JSON, or @path to read it from a file.
fpart::Json parse_payload(const std::string& name, const std::string& text) {
    const std::string source = !text.empty() && text[0] == '@' ? read_text(text.substr(1)) : text;
    try {
        return fpart::Json::parse(source);
    } catch (const fpart::Json::parse_error& e) {
        throw fpart::invalid_input("--" + name + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-dual partitions of finite abelian groups"};
    app.set_help_flag("-h,--help", "Print help");

    std::string command;
    std::optional<std::string> job_file;
    std::map<std::string, std::string> payload_text;
    std::optional<std::size_t> n;
    std::optional<std::string> suite;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_group;
    std::optional<std::size_t> max_expansion;
    bool table = false;
    bool compact = false;

    const auto& commands = fpart::job_commands();
    app.add_option("command", command, "Command to run")->check(CLI::IsMember(commands));
    app.add_option("--job", job_file, "Job file ({\"command\": ..., payload keys}); '-' reads stdin");
    for (const char* key : {"group", "partition", "dual-side", "code", "poset", "factors"}) {
        app.add_option(std::string("--") + key, payload_text[key], "JSON payload or @file");
    }
    app.add_option("--n", n, "Power for symmetrize and product");
    app.add_option("--suite", suite, "Suite for check: all or one module name");
    app.add_option("--seed", seed, "Seed for check");
    app.add_option("--max-group", max_group, "Largest carrier enumerated");
    app.add_option("--max-expansion", max_expansion, "Largest expansion in enumerator transforms");
    app.add_flag("--table", table, "Also print an aligned table on stderr");
    app.add_flag("--compact", compact, "Print JSON on one line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        fpart::Json request = fpart::Json::object();
        if (job_file) {
            try {
                request = fpart::Json::parse(read_text(*job_file));
            } catch (const fpart::Json::parse_error& e) {
                throw fpart::invalid_input(std::string("--job: ") + e.what());
            }
            if (!request.is_object()) throw fpart::invalid_input("--job: expected a JSON object");
        }
        if (!command.empty()) request["command"] = command;
        for (const auto& [key, text] : payload_text) {
            if (text.empty()) continue;
            std::string json_key = key;
            for (auto& c : json_key)
                if (c == '-') c = '_';
            request[json_key] = parse_payload(key, text);
        }
        if (n) request["n"] = *n;
        if (suite) request["suite"] = *suite;
        if (seed) request["seed"] = *seed;
        if (max_group) request["max_group"] = *max_group;
        if (max_expansion) request["max_expansion"] = *max_expansion;
        if (!request.contains("command")) throw fpart::invalid_input("no command given");

        const fpart::Json report = fpart::run(fpart::job_from_json(request));
        std::cout << (compact ? report.dump() : report.dump(2)) << '\n';
        if (table) std::cerr << fpart::render_table(report);
        return fpart::exit_code(report);
    } catch (const fpart::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const fpart::guard_exceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return 2;
    } catch (const fpart::verification_failure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 3;
    }
}
