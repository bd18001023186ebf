// detboot: deterministic bootstrap distributions from the command line.
//
// Subcommands:
//   density | cdf | quantile   run the pipeline, emit a result document
//   compare                    KS distances against Monte Carlo and
//                              brute-force enumeration oracles
//   bench                      stage timings (forward, inverse FFT, MC)

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "detboot/adapters.hpp"
#include "detboot/charfn.hpp"
#include "detboot/errors.hpp"
#include "detboot/fft.hpp"
#include "detboot/io.hpp"
#include "detboot/mixture.hpp"
#include "detboot/oracle.hpp"

namespace {

struct CliOptions {
    detboot::RunRequest req;
    std::string method = "efron-mean";
    std::string format = "json";
    std::vector<double> coeffs;
    double coeff = 0.0;
    bool coeff_set = false;
    std::int64_t m = 1;
    std::uint64_t seed = 1;
    std::int64_t replicates = 100000;
};

void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--input", o.req.input_path, "sample file, one value per line")->required();
    cmd->add_option("--method", o.method, "efron-mean | moving-block | custom-mixture")
        ->check(CLI::IsMember({"efron-mean", "moving-block", "custom-mixture"}));
    cmd->add_option("--block-length", o.req.block_length, "moving-block window length");
    cmd->add_option("--coeffs", o.coeffs, "custom-mixture coefficients a1,a2,...")
        ->delimiter(',');
    auto* ca = cmd->add_option("--coeff", o.coeff, "custom-mixture repeated coefficient");
    cmd->add_option("--m", o.m, "custom-mixture repetition count")->needs(ca);
    cmd->add_option("--grid-size", o.req.grid.N, "number of grid bins N");
    cmd->add_option("--pad", o.req.grid.pad, "period multiplier, T = pad * T_Z");
    cmd->add_option("--alpha", o.req.alphas, "quantile levels a1,a2,...")->delimiter(',');
    cmd->add_option("--format", o.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", o.req.output_path, "write the result document here");
}

void finalize_request(CliOptions& o) {
    if (o.method == "efron-mean") o.req.method = detboot::Method::EfronMean;
    else if (o.method == "moving-block") o.req.method = detboot::Method::MovingBlock;
    else o.req.method = detboot::Method::CustomMixture;
    o.req.coefficients = o.coeffs;
    if (o.coeff_set) {
        o.req.repeated_coefficient = o.coeff;
        o.req.repeated_count = o.m;
    }
    o.req.format = o.format == "csv" ? detboot::OutputFormat::Csv : detboot::OutputFormat::Json;
    if (o.req.alphas.empty()) o.req.alphas = {0.025, 0.05, 0.25, 0.5, 0.75, 0.95, 0.975};
}

// The grid is allowed to be coarser than the sample, but warn: the paper's
// guidance is N >= n.
void warn_small_grid(const detboot::MixtureSpec& spec, const detboot::GridConfig& grid) {
    std::size_t max_atoms = 0;
    for (const auto& c : spec.components) max_atoms = std::max(max_atoms, c.dist.size());
    if (static_cast<std::size_t>(grid.N) < max_atoms)
        std::cerr << "warning: grid size N = " << grid.N << " is below the atom count "
                  << max_atoms << "; expect coarse output\n";
}

void write_artifact(const detboot::RunRequest& req, const detboot::RunResult& result) {
    const std::string text = req.format == detboot::OutputFormat::Csv
                                 ? detboot::to_csv(result)
                                 : detboot::to_json(result);
    if (req.output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(req.output_path, std::ios::binary);
        if (!out) throw detboot::Error("cannot open output file: " + req.output_path);
        out << text;
    }
}

int run_pipeline_command(CliOptions& o, bool print_quantiles) {
    finalize_request(o);
    const std::vector<double> sample = detboot::parse_sample_file(o.req.input_path);
    warn_small_grid(detboot::build_spec(o.req, sample), o.req.grid);
    const detboot::RunResult result = detboot::execute(o.req);
    write_artifact(o.req, result);
    if (print_quantiles && !o.req.output_path.empty()) {
        for (const auto& [alpha, z] : result.quantiles)
            std::cout << "q(" << alpha << ") = " << z << "\n";
    }
    return 0;
}

int run_compare(CliOptions& o) {
    finalize_request(o);
    const std::vector<double> sample = detboot::parse_sample_file(o.req.input_path);
    const detboot::MixtureSpec spec = detboot::build_spec(o.req, sample);

    const detboot::MixtureDistribution dist = detboot::compute_distribution(spec, o.req.grid);
    const detboot::EmpiricalCdf mc = detboot::monte_carlo_cdf(spec, o.replicates, o.seed);
    std::printf("ks_pipeline_vs_mc %.6g\n", detboot::ks_distance(dist.cdf, mc));
    try {
        const detboot::GridDensity exact = detboot::brute_force_density(spec, o.req.grid);
        const detboot::GridCdf exact_cdf = detboot::density_to_cdf(exact);
        std::printf("ks_pipeline_vs_brute_force %.6g\n",
                    detboot::ks_distance(dist.cdf, exact_cdf));
    } catch (const detboot::EnumerationTooLarge&) {
        std::printf("ks_pipeline_vs_brute_force skipped (enumeration too large)\n");
    }
    return 0;
}

int run_bench(CliOptions& o) {
    finalize_request(o);
    const std::vector<double> sample = detboot::parse_sample_file(o.req.input_path);
    const detboot::MixtureSpec spec = detboot::build_spec(o.req, sample);
    const detboot::SupportBounds support = detboot::support_bounds(spec);
    const double t_z = support.width();
    if (t_z == 0.0) throw detboot::InvalidArgument("bench needs a non-degenerate mixture");
    const double period = o.req.grid.period_for(t_z);

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    std::vector<detboot::CharVector> parts;
    for (const auto& c : spec.components)
        parts.push_back(detboot::component_char(c.dist, c.coefficient, period, o.req.grid.N));
    const detboot::CharVector product = detboot::mixture_char(parts);
    const auto t1 = clock::now();
    const detboot::GridDensity d = detboot::invert_to_density(product, support);
    const auto t2 = clock::now();
    const detboot::EmpiricalCdf mc = detboot::monte_carlo_cdf(spec, o.replicates, o.seed);
    const auto t3 = clock::now();
    (void)d;
    (void)mc;

    const double t_forward = std::chrono::duration<double>(t1 - t0).count();
    const double t_ifft = std::chrono::duration<double>(t2 - t1).count();
    const double t_mc = std::chrono::duration<double>(t3 - t2).count();
    std::size_t n_atoms = 0;
    for (const auto& c : spec.components) n_atoms = std::max(n_atoms, c.dist.size());
    std::printf("n,m,N,B,t_forward,t_ifft,t_mc\n");
    std::printf("%zu,%lld,%lld,%lld,%.6g,%.6g,%.6g\n", n_atoms,
                static_cast<long long>(spec.width()), static_cast<long long>(o.req.grid.N),
                static_cast<long long>(o.replicates), t_forward, t_ifft, t_mc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic bootstrap distributions via characteristic-function inversion"};
    app.require_subcommand(1);

    CliOptions o;
    CLI::App* density = app.add_subcommand("density", "binned density of the statistic");
    CLI::App* cdf = app.add_subcommand("cdf", "cumulative distribution of the statistic");
    CLI::App* quant = app.add_subcommand("quantile", "quantiles of the statistic");
    CLI::App* compare = app.add_subcommand("compare", "pipeline vs oracle KS distances");
    CLI::App* bench = app.add_subcommand("bench", "stage timings");
    for (CLI::App* cmd : {density, cdf, quant, compare, bench}) add_common_flags(cmd, o);
    for (CLI::App* cmd : {compare, bench}) {
        cmd->add_option("--seed", o.seed, "Monte Carlo seed");
        cmd->add_option("--replicates", o.replicates, "Monte Carlo replicate count B");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }
    o.coeff_set = density->count("--coeff") || cdf->count("--coeff") ||
                  quant->count("--coeff") || compare->count("--coeff") ||
                  bench->count("--coeff");

    try {
        if (app.got_subcommand(density) || app.got_subcommand(cdf))
            return run_pipeline_command(o, false);
        if (app.got_subcommand(quant)) return run_pipeline_command(o, true);
        if (app.got_subcommand(compare)) return run_compare(o);
        if (app.got_subcommand(bench)) return run_bench(o);
    } catch (const detboot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
