#include "motive_forge/report_io.hpp"

#include <charconv>
#include <sstream>

#include "motive_forge/error.hpp"

namespace motive_forge {

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(s) + "'");
    }
    return value;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string latex_power(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^{" + std::to_string(e) + "}";
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "latex") return Format::latex;
    throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "' (json|csv|latex)");
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_int(item));
        } else {
            const int lo = parse_int(item.substr(0, dots));
            const int hi = parse_int(item.substr(dots + 2));
            if (hi < lo) throw Error(ErrorKind::ParseError, "empty range '" + std::string(item) + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

nlohmann::json environment_json(const WeilEnvironment& env) {
    nlohmann::json betas = nlohmann::json::array();
    for (const auto& b : env.betas) betas.push_back(b.to_string());
    return {{"genus", env.genus}, {"base", "weil"}, {"seed", *env.seed}, {"lefschetz", env.lefschetz.to_string()}, {"betas", betas}};
}

nlohmann::json environment_json(const HodgeEnvironment& env) {
    return {{"genus", env.genus}, {"base", "hodge"}, {"seed", nullptr}, {"atoms", "symbolic"}, {"lefschetz", env.lefschetz.to_string()}};
}

std::string latex_rational(const BigRational& q) {
    if (q.is_integer()) return q.to_string();
    std::ostringstream os;
    if (q.sign() < 0) os << '-';
    os << "\\frac{" << mpz_class(abs(q.numerator())).get_str() << "}{" << q.denominator().get_str() << '}';
    return os.str();
}

std::string latex_polynomial(const UVLaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        BigRational c = it->c;
        const bool negative = c.sign() < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const std::string mono = latex_power("u", it->a) + (it->a != 0 && it->b != 0 ? " " : "") + latex_power("v", it->b);
        if (mono.empty()) {
            os << latex_rational(c);
        } else {
            if (!c.is_one()) os << latex_rational(c) << ' ';
            os << mono;
        }
    }
    return os.str();
}

std::string latex_legend(const WeilEnvironment& env) {
    std::ostringstream os;
    os << "\\mathbb{L} = " << latex_rational(env.lefschetz);
    const auto e = elementary_symmetric(env);
    for (std::size_t i = 1; i < e.size(); ++i) os << ",\\quad \\lambda^{" << i << "}(h^1) = " << latex_rational(e[i]);
    return os.str();
}

std::string latex_legend(const HodgeEnvironment& env) {
    std::ostringstream os;
    os << "\\mathbb{L} = uv";
    const auto e = elementary_symmetric(env);
    for (std::size_t i = 1; i < e.size(); ++i) os << ",\\quad \\lambda^{" << i << "}(h^1) = " << latex_polynomial(e[i]);
    return os.str();
}

nlohmann::json spec_json(const ModuliSpec& spec) {
    return {{"g", spec.g}, {"r", spec.r}, {"d", spec.d}, {"dL", spec.dL}, {"p", spec.p()}};
}

nlohmann::json reports_json(const std::vector<VerificationReport>& reports, const RunMetadata& meta) {
    nlohmann::json cells = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.passed();
        cells.push_back({
            {"g", r.cell.g},
            {"r", r.cell.r},
            {"d", r.cell.d},
            {"p", r.cell.p},
            {"dL", r.cell.dL()},
            {"seed", r.seed},
            {"hodge_run", r.hodge_run},
            {"hodge_equal", r.hodge_equal},
            {"weil_trials", r.weil_trials},
            {"weil_failures", r.weil_failures},
            {"first_failing_seed", r.first_failing_seed ? nlohmann::json(*r.first_failing_seed) : nlohmann::json(nullptr)},
            {"passed", r.passed()},
            {"wall_time_ms", r.wall_time_ms},
        });
    }
    return {{"schema", kReportSchema}, {"command", meta.command}, {"seed", meta.seed}, {"trials", meta.trials},
            {"hodge_max_g", meta.hodge_max_g}, {"all_passed", all}, {"cells", cells}};
}

std::string render_reports(const std::vector<VerificationReport>& reports, const RunMetadata& meta, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json:
            os << reports_json(reports, meta).dump(2) << '\n';
            break;
        case Format::csv:
            os << "g,r,d,p,dL,seed,hodge_run,hodge_equal,weil_trials,weil_failures,passed,wall_time_ms\n";
            for (const auto& r : reports) {
                os << r.cell.g << ',' << r.cell.r << ',' << r.cell.d << ',' << r.cell.p << ',' << r.cell.dL() << ','
                   << r.seed << ',' << r.hodge_run << ',' << r.hodge_equal << ',' << r.weil_trials << ','
                   << r.weil_failures << ',' << r.passed() << ',' << r.wall_time_ms << '\n';
            }
            break;
        case Format::latex:
            os << "% seed " << meta.seed << ", " << meta.trials << " weil trials per cell\n"
               << "\\begin{tabular}{rrrrrccr}\n"
               << "$g$ & $r$ & $d$ & $p$ & $d_L$ & hodge & weil failures & result \\\\\n\\hline\n";
            for (const auto& r : reports) {
                os << r.cell.g << " & " << r.cell.r << " & " << r.cell.d << " & " << r.cell.p << " & " << r.cell.dL()
                   << " & " << (r.hodge_run ? (r.hodge_equal ? "equal" : "differ") : "--") << " & " << r.weil_failures
                   << '/' << r.weil_trials << " & " << (r.passed() ? "pass" : "FAIL") << " \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
    }
    return os.str();
}

std::string render_query(const QueryOutput& q, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::json: {
            nlohmann::json j = {{"schema", kReportSchema},
                                {"command", q.command},
                                {"spec", spec_json(q.spec)},
                                {"dimension", 1 - q.spec.r * q.spec.r * q.spec.dL},
                                {"realization", std::string(to_string(q.realization))},
                                {"environment", q.environment}};
            if (q.betti) {
                j["betti"] = *q.betti;
            } else {
                j["value"] = q.value;
            }
            os << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            os << "key,value\n"
               << "command," << q.command << '\n'
               << "g," << q.spec.g << "\nr," << q.spec.r << "\nd," << q.spec.d << "\ndL," << q.spec.dL << "\np," << q.spec.p()
               << "\nrealization," << to_string(q.realization) << '\n';
            if (q.environment.contains("seed") && !q.environment["seed"].is_null()) {
                os << "seed," << q.environment["seed"].get<std::uint64_t>() << '\n';
            }
            if (q.betti) {
                for (std::size_t k = 0; k < q.betti->size(); ++k) os << 'b' << k << ',' << (*q.betti)[k] << '\n';
            } else {
                os << "value," << csv_escape(q.value) << '\n';
            }
            break;
        case Format::latex: {
            os << "% " << q.command << ": g=" << q.spec.g << ", r=" << q.spec.r << ", d=" << q.spec.d
               << ", d_L=" << q.spec.dL << " (" << to_string(q.realization) << ")\n"
               << "% legend: $" << q.legend_latex << "$\n";
            if (q.betti) {
                os << "\\[ ";
                for (std::size_t k = 0; k < q.betti->size(); ++k) {
                    os << (k ? ",\\ " : "") << "b_{" << k << "} = " << (*q.betti)[k];
                }
                os << " \\]\n";
            } else {
                const char* lhs = q.command == "epoly" ? "E(\\mathcal{M})" : "[\\mathcal{M}]";
                os << "\\[ " << lhs << " = " << q.value_latex << " \\]\n";
            }
            break;
        }
    }
    return os.str();
}

}  // namespace motive_forge
