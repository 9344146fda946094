#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "umbra/checks/suites.hpp"
#include "umbra/errors.hpp"

namespace {

constexpr const char* footer = R"(Exit status:
  0  success
  1  check: a check that is not flagged-errata failed
  2  malformed input (line and column reported)
  3  invalid parameter, unsupported symbol or unknown name
  4  divergence, truncation or domain violation

CSV columns:
  check   suite,tag,status,residual,tolerance[,runtime],description,detail
  expand  n,re,im,nodes,oracle,residual  then  x,reconstruction,target,residual
  evolve  x,tau,value,nodes,oracle,residual)";

}  // namespace

int main(int argc, char** argv) {
    using namespace umbra::cli;

    CLI::App app{"Umbral and operational transforms"};
    app.footer(footer);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", g.tolerance, "Replace every nonzero check tolerance");
    app.add_option("--seed", g.seed, "Seed of the randomized property suites");
    app.add_option("--order", g.order, "Truncation order override");
    app.add_option("-o,--output", g.output, "Write to this file instead of stdout");

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "Apply an exact sequence transform");
    transform->add_option("transform", ta.transform,
                          "binomial | modular | modular-inverse | k-binomial | hermite | hermite-complementary | "
                          "hermite-inverse | laguerre")
        ->required();
    transform->add_option("-i,--input", ta.input, "Sequence file {\"terms\": [\"p/q\", ...]}")->required();
    transform->add_option("--alpha", ta.alpha, "Rational parameter alpha");
    transform->add_option("--beta", ta.beta, "Rational parameter beta");
    transform->add_option("--k", ta.k, "Power k of the rising k-binomial transform");

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Run identity suites and report residuals");
    std::string suite_help = "Suite name or all:";
    for (const auto& s : umbra::checks::suite_names()) suite_help += " " + s;
    check->add_option("suite", ca.suite, suite_help);
    check->add_flag("--timing", ca.timing, "Include per-check runtimes (output is then not reproducible)");

    ExpandArgs ea;
    auto* expand = app.add_subcommand("expand", "Expand a function in an Appell family");
    expand->add_option("--family", ea.family,
                       "bernoulli | identity | gauss-hermite-type | exp-square | taylor-file")
        ->required();
    expand->add_option("--taylor-file", ea.taylor_file, "Taylor coefficients of A(t) as a sequence file");
    expand->add_option("--function", ea.function, "gaussian (e^(-s x^2)) or x-gaussian (x e^(-s x^2))");
    expand->add_option("--scale", ea.scale, "Rational scale s");
    expand->add_option("-N", ea.N, "Highest coefficient index");

    EvolveArgs va;
    auto* evolve = app.add_subcommand("evolve", "Solve an evolution problem and compare with its oracle");
    evolve->add_option("equation", va.equation, "heat | tricomi | integro-diff")->required();
    evolve->add_option("--x", va.x, "Sample points (tricomi, integro-diff)");
    evolve->add_option("--tau", va.tau, "Times (tricomi, integro-diff)");
    evolve->add_option("--beta", va.beta, "integro-diff: weight of D^-1");
    evolve->add_option("--m", va.m, "integro-diff: power of the generator");
    evolve->add_option("--alpha", va.alpha, "heat: time alpha of e^(alpha d^2)");
    evolve->add_option("--scale", va.scale, "heat: initial condition e^(-s x^2)");
    evolve->add_option("--half-width", va.half_width, "heat: grid half width");
    evolve->add_option("--points", va.points, "heat: grid size, a power of two");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return invalid_parameter;
    }

    try {
        if (*transform) return run_transform(g, ta);
        if (*check) return run_check(g, ca);
        if (*expand) return run_expand(g, ea);
        if (*evolve) return run_evolve(g, va);
    } catch (const umbra::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_failure;
    } catch (const umbra::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_parameter;
    } catch (const umbra::UnsupportedSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_parameter;
    } catch (const umbra::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return numerical_region;
    } catch (const umbra::TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return numerical_region;
    } catch (const umbra::DomainTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return numerical_region;
    } catch (const umbra::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return check_failed;
    }
    return ok;
}
