#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "motive_forge/curve_ring.hpp"
#include "motive_forge/moduli.hpp"
#include "motive_forge/verify.hpp"

namespace motive_forge {

inline constexpr int kReportSchema = 1;

enum class Format { json, csv, latex };

Format parse_format(std::string_view text);

// "3", "1..4", "1,3,5", "-1..1,4"; duplicates are kept in input order.
std::vector<int> parse_int_list(std::string_view text);

nlohmann::json environment_json(const WeilEnvironment& env);
nlohmann::json environment_json(const HodgeEnvironment& env);

// Legend mapping L and lambda^i(h^1) to their values in the realization.
std::string latex_legend(const WeilEnvironment& env);
std::string latex_legend(const HodgeEnvironment& env);

std::string latex_polynomial(const UVLaurent& p);
std::string latex_rational(const BigRational& q);

nlohmann::json spec_json(const ModuliSpec& spec);

struct RunMetadata {
    std::string command = "verify-adhm";
    std::uint64_t seed = 0;
    int trials = kDefaultTrials;
    int hodge_max_g = kDefaultHodgeMaxG;
};

nlohmann::json reports_json(const std::vector<VerificationReport>& reports, const RunMetadata& meta);
std::string render_reports(const std::vector<VerificationReport>& reports, const RunMetadata& meta, Format format);

// Output of a motive / epoly / betti query.
struct QueryOutput {
    std::string command;
    ModuliSpec spec;
    Realization realization = Realization::hodge;
    nlohmann::json environment;
    std::string legend_latex;
    std::string value;        // canonical text
    std::string value_latex;  // empty for betti
    std::optional<std::vector<long>> betti;
};

std::string render_query(const QueryOutput& q, Format format);

}  // namespace motive_forge
