#include "detboot/io.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "detboot/adapters.hpp"
#include "detboot/errors.hpp"

namespace detboot {

std::vector<double> parse_sample_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileNotFound(path);

    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        std::size_t last = line.find_last_not_of(" \t\r\n");
        std::string token = line.substr(first, last - first + 1);
        if (token[0] == '#') continue;
        double v = 0.0;
        const char* begin = token.data();
        const char* end = begin + token.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr != end)
            throw ParseError(lineno, "cannot parse '" + token + "' as a number");
        values.push_back(v);
    }
    return values;
}

MixtureSpec build_spec(const RunRequest& req, const std::vector<double>& sample) {
    switch (req.method) {
        case Method::EfronMean:
            return efron_mean(sample);
        case Method::MovingBlock:
            return moving_block(sample, req.block_length).spec;
        case Method::CustomMixture: {
            std::vector<double> coeffs = req.coefficients;
            if (coeffs.empty()) {
                if (!req.repeated_coefficient)
                    throw InvalidArgument(
                        "custom-mixture needs --coeffs or --coeff together with --m");
                if (req.repeated_count < 1)
                    throw InvalidArgument("mixture width m must be >= 1");
                coeffs.assign(static_cast<std::size_t>(req.repeated_count),
                              *req.repeated_coefficient);
            }
            const DiscreteDistribution dist = DiscreteDistribution::from_sample(sample);
            MixtureSpec spec;
            spec.components.reserve(coeffs.size());
            for (double a : coeffs) spec.components.push_back({a, dist});
            return spec;
        }
    }
    throw InvalidArgument("unknown method");
}

namespace {

std::string method_name(Method m) {
    switch (m) {
        case Method::EfronMean: return "efron-mean";
        case Method::MovingBlock: return "moving-block";
        case Method::CustomMixture: return "custom-mixture";
    }
    return "?";
}

}  // namespace

RunResult execute(const RunRequest& req) {
    req.grid.validate();
    for (double a : req.alphas)
        if (!(a > 0.0) || !(a < 1.0))
            throw AlphaOutOfRange("quantile level must lie strictly in (0, 1)");

    const std::vector<double> sample = parse_sample_file(req.input_path);
    if (sample.empty()) throw EmptySample();
    const MixtureSpec spec = build_spec(req, sample);

    const auto t0 = std::chrono::steady_clock::now();
    MixtureDistribution dist = compute_distribution(spec, req.grid);
    const auto t1 = std::chrono::steady_clock::now();

    RunResult r;
    r.method_echo = method_name(req.method);
    r.support = dist.support;
    r.density = std::move(dist.density);
    r.cdf = std::move(dist.cdf);
    for (double a : req.alphas) r.quantiles[a] = quantile(r.cdf, a);
    r.timing_seconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

namespace {

// 17 significant digits round-trip a double exactly.
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const RunResult& r) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"method\": \"" << r.method_echo << "\",\n";
    os << "  \"support\": [" << num(r.support.z_L) << ", " << num(r.support.z_U) << "],\n";
    os << "  \"z_L\": " << num(r.density.z_L) << ",\n";
    os << "  \"T\": " << num(r.density.T) << ",\n";
    os << "  \"N\": " << r.density.size() << ",\n";
    os << "  \"bins\": [";
    for (std::size_t i = 0; i < r.density.bins.size(); ++i)
        os << (i ? ", " : "") << num(r.density.bins[i]);
    os << "],\n";
    os << "  \"cum\": [";
    for (std::size_t i = 0; i < r.cdf.cum.size(); ++i) os << (i ? ", " : "") << num(r.cdf.cum[i]);
    os << "],\n";
    os << "  \"quantiles\": {";
    bool first = true;
    for (const auto& [alpha, z] : r.quantiles) {
        os << (first ? "" : ", ") << "\"" << num(alpha) << "\": " << num(z);
        first = false;
    }
    os << "},\n";
    os << "  \"timing\": " << num(r.timing_seconds) << "\n";
    os << "}\n";
    return os.str();
}

std::string to_csv(const RunResult& r) {
    std::ostringstream os;
    os << "bin_left,bin_right,density_mass,cdf\n";
    for (std::int64_t i = 0; i < r.density.size(); ++i) {
        os << num(r.density.bin_left(i)) << ',' << num(r.density.bin_right(i)) << ','
           << num(r.density.bins[static_cast<std::size_t>(i)]) << ','
           << num(r.cdf.cum[static_cast<std::size_t>(i)]) << '\n';
    }
    return os.str();
}

ResultDocument read_result_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ResultDocument doc;
    doc.z_L = j.at("z_L").get<double>();
    doc.T = j.at("T").get<double>();
    doc.N = j.at("N").get<std::int64_t>();
    doc.bins = j.at("bins").get<std::vector<double>>();
    doc.cum = j.at("cum").get<std::vector<double>>();
    doc.support_lo = j.at("support").at(0).get<double>();
    doc.support_hi = j.at("support").at(1).get<double>();
    doc.method_echo = j.at("method").get<std::string>();
    for (const auto& [key, value] : j.at("quantiles").items())
        doc.quantiles[std::strtod(key.c_str(), nullptr)] = value.get<double>();
    return doc;
}

}  // namespace detboot
