#pragma once

#include "zetaforge/reducer.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace zetaforge::cli {

enum ExitCode : int {
    ok = 0,
    mismatch = 1,
    defect = 2,
    usage = 64,
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { text, json, csv };

struct Options {
    Family family = Family::zeta4;
    unsigned n = 0;
    unsigned nmax = 0;
    unsigned exact_upto = 2000;
    unsigned digits = 50;
    std::uint64_t samples = 10'000'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    Format format = Format::text;
    std::string cache_dir;
};

int cmd_form(const Options& opt, std::ostream& out);
int cmd_verify_paper(const Options& opt, std::ostream& out);
int cmd_bounds(const Options& opt, std::ostream& out);
int cmd_lcm(const Options& opt, std::ostream& out);
int cmd_denoms(const Options& opt, std::ostream& out);
int cmd_decay(const Options& opt, std::ostream& out);
int cmd_mc(const Options& opt, std::ostream& out);

}  // namespace zetaforge::cli
