#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detboot/charfn.hpp"
#include "detboot/mixture.hpp"

namespace detboot {

/// Read one sample value per line. Surrounding whitespace is ignored, blank
/// lines and lines starting with '#' are skipped, scientific notation is
/// accepted. Throws FileNotFound or ParseError with the 1-based line number.
std::vector<double> parse_sample_file(const std::string& path);

enum class Method { EfronMean, MovingBlock, CustomMixture };
enum class OutputFormat { Json, Csv };

/// One batch request: which method to run on which sample, grid and quantile
/// settings, output destination.
struct RunRequest {
    std::string input_path;
    Method method = Method::EfronMean;
    std::int64_t block_length = 1;              // moving-block only
    std::vector<double> coefficients;           // custom-mixture: explicit list
    std::optional<double> repeated_coefficient; // custom-mixture: (a, m) form
    std::int64_t repeated_count = 1;
    GridConfig grid;
    std::vector<double> alphas;
    OutputFormat format = OutputFormat::Json;
    std::string output_path;  // empty: stdout only
};

/// Everything a run emits. `timing_seconds` is the only field allowed to
/// differ between identical requests.
struct RunResult {
    std::string method_echo;
    SupportBounds support;
    GridDensity density;
    GridCdf cdf;
    std::map<double, double> quantiles;
    double timing_seconds = 0.0;
};

/// Build the mixture spec a request describes (reads the sample file).
MixtureSpec build_spec(const RunRequest& req, const std::vector<double>& sample);

/// Execute the request end to end (no file output).
RunResult execute(const RunRequest& req);

/// Result document serializations. All numbers carry 17 significant digits,
/// so a reread document reproduces every double bit for bit.
std::string to_json(const RunResult& r);
std::string to_csv(const RunResult& r);

/// Parsed-back view of a JSON result document.
struct ResultDocument {
    double z_L = 0.0;
    double T = 0.0;
    std::int64_t N = 0;
    std::vector<double> bins;
    std::vector<double> cum;
    std::map<double, double> quantiles;
    double support_lo = 0.0;
    double support_hi = 0.0;
    std::string method_echo;
};
ResultDocument read_result_json(const std::string& text);

}  // namespace detboot
