#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bbsyz/cli.hpp"

int main(int argc, char **argv)
{
    CLI::App app{"Syzygies among border basis scheme generators"};
    std::string input;
    std::optional<std::string> command;
    std::optional<std::string> params;
    std::string format = "text";
    std::string level = "quick";
    app.add_option("--input", input, "job file (JSON), '-' for stdin")->required();
    app.add_option("--command", command, "analyze | rhos | jacobi | trace | spinal | planar | verify");
    app.add_option("--params", params, "e.g. '1 2 3' for jacobi, '<1,1,2> 1' for trace");
    app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--verify-level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : bbsyz::cli::ParseFailure;
    }

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
            std::cerr << "ParseError: cannot read " << input << "\n";
            return bbsyz::cli::ParseFailure;
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }

    const auto outcome = bbsyz::cli::execute(
        text, command, params, format == "structured" ? bbsyz::cli::Format::Structured : bbsyz::cli::Format::Text,
        level == "full" ? bbsyz::VerifyLevel::Full : bbsyz::VerifyLevel::Quick);
    std::cout << outcome.out;
    std::cerr << outcome.err;
    return outcome.exit_code;
}
