#ifndef CPT_CLI_HPP
#define CPT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpt::cli {

enum ExitCode : int
{
    pass = 0,
    falsified = 1,
    usage = 2,
};

struct RunConfig
{
    std::string subcommand;
    int d = 0;
    int r = 0;
    int m = -1;                 // -1: derived from d and r
    std::uint64_t seed = 1;
    int trials = 1;
    std::string input;
    std::string output;
    int jobs = 1;
    bool verbose = false;

    int sphere = -1;            // hind
    int density = 4;            // fiber-demo
    std::string map = "projection";
};

/** Runs one subcommand, writing JSON lines to `out` (or to config.output). */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/** Parses `args` (without the program name) and runs. */
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace cpt::cli

#endif
