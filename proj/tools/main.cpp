#include "commands.hpp"

#include "zetaforge/records.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace zetaforge;
using namespace zetaforge::cli;

namespace {

struct Raw {
    std::string family = "zeta4";
    std::string format = "text";
};

void add_common(CLI::App* sub, Options& opt, Raw& raw)
{
    sub->add_option("--digits", opt.digits, "working precision in decimal digits")
        ->capture_default_str()
        ->check(CLI::Range(10u, 90u));
    sub->add_option("--format", raw.format, "text, json or csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", opt.cache_dir, "form cache directory (default $ZETAFORGE_CACHE or ./zetaforge-cache)");
}

void add_family(CLI::App* sub, Raw& raw)
{
    sub->add_option("--family", raw.family, "zeta2, zeta3 or zeta4")
        ->capture_default_str()
        ->check(CLI::IsMember({"zeta2", "zeta3", "zeta4"}));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact reduction of zeta-value integrals and their bound certificates"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Options opt;
    Raw raw;
    std::map<CLI::App*, std::function<int(const Options&, std::ostream&)>> handlers;
    // each subcommand has its own --nmax default
    std::map<CLI::App*, unsigned> nmax;

    auto* form = app.add_subcommand("form", "exact linear form of one family integral");
    add_family(form, raw);
    form->add_option("--n", opt.n, "index n")->required();
    form->add_option("--nmax", nmax[form], "largest n accepted")->default_val(12u);
    add_common(form, opt, raw);
    handlers[form] = cmd_form;

    auto* verify = app.add_subcommand("verify-paper", "recompute the published values and certificates");
    add_common(verify, opt, raw);
    handlers[verify] = cmd_verify_paper;

    auto* bounds = app.add_subcommand("bounds", "sup constants and decay products of all three families");
    add_common(bounds, opt, raw);
    handlers[bounds] = cmd_bounds;

    auto* lcm = app.add_subcommand("lcm", "growth of lcm(1..n) through Chebyshev psi");
    lcm->add_option("--nmax", nmax[lcm], "largest n")->default_val(1000000u);
    lcm->add_option("--exact-upto", opt.exact_upto, "compare with exact lcm up to this n")->capture_default_str();
    add_common(lcm, opt, raw);
    handlers[lcm] = cmd_lcm;

    auto* denoms = app.add_subcommand("denoms", "denominators against lcm(1..n)^k and lcm(1..2n)^k");
    add_family(denoms, raw);
    denoms->add_option("--nmax", nmax[denoms], "largest n")->default_val(6u);
    add_common(denoms, opt, raw);
    handlers[denoms] = cmd_denoms;

    auto* decay = app.add_subcommand("decay", "|I_n| against |I_0| C^n");
    add_family(decay, raw);
    decay->add_option("--nmax", nmax[decay], "largest n")->default_val(8u);
    add_common(decay, opt, raw);
    handlers[decay] = cmd_decay;

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the unreduced integral");
    add_family(mc, raw);
    mc->add_option("--n", opt.n, "index n")->required();
    mc->add_option("--samples", opt.samples, "sample count")->capture_default_str();
    mc->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    mc->add_option("--threads", opt.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
    add_common(mc, opt, raw);
    handlers[mc] = cmd_mc;

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    opt.family = parse_family(raw.family);
    opt.format = raw.format == "json" ? Format::json : raw.format == "csv" ? Format::csv : Format::text;

    for (auto& [sub, handler] : handlers) {
        if (!sub->parsed())
            continue;
        if (auto it = nmax.find(sub); it != nmax.end())
            opt.nmax = it->second;
        try {
            return handler(opt, std::cout);
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << "\n";
            return usage;
        } catch (const std::exception& e) {
            std::cerr << "computation error: " << e.what() << "\n";
            return defect;
        }
    }
    return usage;
}
