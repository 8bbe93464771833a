#include "hedges/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "hedges/effect_size.hpp"
#include "hedges/errors.hpp"

namespace hedges::cli {

namespace {

enum class Format { Text, Csv, Tsv, JsonLines, Svg };

/// Raised for input problems that map to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string grid_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string scientific(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

Format parse_format(const std::string& name) {
    if (name.empty()) {
        return Format::Text;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "tsv") {
        return Format::Tsv;
    }
    if (name == "json-lines") {
        return Format::JsonLines;
    }
    if (name == "svg") {
        return Format::Svg;
    }
    throw UsageError("unknown format '" + name + "' (expected csv, tsv, json-lines, svg)");
}

ApproxKind parse_kind(const std::string& name) {
    try {
        return ApproxKind::parse(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// Whole-file replace through a sibling temporary.
void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path temp = target;
    temp += ".tmp";
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw UsageError("cannot open '" + temp.string() + "' for writing");
        }
        file << content;
        if (!file.flush()) {
            throw UsageError("failed writing '" + temp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw UsageError("cannot replace '" + path + "'");
    }
}

void emit(const std::string& content, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << content;
    } else {
        write_atomically(output_path, content);
    }
}

// Writes header + rows with the given separator.
std::string delimited(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows, char sep) {
    std::string text;
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i != 0) {
                text += sep;
            }
            text += fields[i];
        }
        text += '\n';
    };
    line(header);
    for (const auto& row : rows) {
        line(row);
    }
    return text;
}

std::string error_rows_text(const std::vector<ErrorRow>& rows,
                            const std::vector<ApproxKind>& kinds, Format format) {
    std::vector<std::string> header{"m"};
    for (const ApproxKind kind : kinds) {
        header.push_back("delta" + std::to_string(kind.delta_index()));
    }
    if (format == Format::JsonLines) {
        std::string text;
        for (const ErrorRow& row : rows) {
            nlohmann::ordered_json j;
            j["m"] = row.m;
            for (std::size_t k = 0; k < kinds.size(); ++k) {
                const DeltaEntry* e = row.find(kinds[k]);
                j[header[k + 1]] = (e != nullptr && e->value) ? nlohmann::ordered_json(*e->value)
                                                              : nlohmann::ordered_json(nullptr);
            }
            text += j.dump() + '\n';
        }
        return text;
    }
    std::vector<std::vector<std::string>> table;
    for (const ErrorRow& row : rows) {
        std::vector<std::string> fields{grid_value(row.m)};
        for (const ApproxKind kind : kinds) {
            const DeltaEntry* e = row.find(kind);
            fields.push_back((e != nullptr && e->value) ? scientific(*e->value) : std::string());
        }
        table.push_back(std::move(fields));
    }
    return delimited(header, table, format == Format::Tsv ? '\t' : ',');
}

int cmd_jfactor(double m, const std::string& kind_name, Format format, std::ostream& out) {
    const ApproxKind kind = parse_kind(kind_name);
    if (format == Format::Svg || format == Format::Csv || format == Format::Tsv) {
        throw UsageError("jfactor supports only plain and json-lines output");
    }
    if (kind.tag() == ApproxKind::Tag::Mortici && std::isfinite(m) && m > 0.0) {
        // Report the order's own threshold ahead of the generic m > 1 check.
        require_positive_radicand(kind.order(), m);
    }
    const double value = approx_value(kind, DegreesOfFreedom(m));
    if (format == Format::JsonLines) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["kind"] = kind.name();
        j["value"] = value;
        out << j.dump() << '\n';
    } else {
        out << scalar(value) << '\n';
    }
    return kExitOk;
}

int cmd_effect(const std::string& input, const std::string& kind_name, Format format,
               const std::string& output, std::ostream& out) {
    const ApproxKind kind = parse_kind(kind_name);
    if (format == Format::Svg) {
        throw UsageError("svg output is only available for sweep");
    }
    std::ifstream file(input, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open input '" + input + "'");
    }
    GroupData data;
    try {
        data = parse_group_csv(file);
    } catch (const CsvError& e) {
        throw UsageError(input + ": " + e.what());
    }
    const GroupSample gi = summarize(data.values_i);
    const GroupSample gj = summarize(data.values_j);
    const EffectSizeResult r = hedges_g_star(gi, gj, kind);

    const std::vector<std::pair<std::string, std::string>> fields = {
        {"group_i", data.label_i},
        {"group_j", data.label_j},
        {"mean_difference", scalar(r.mean_difference)},
        {"pooled_sd", scalar(r.pooled_sd)},
        {"cohens_d", scalar(r.cohens_d)},
        {"m", scalar(r.m.value())},
        {"correction", r.correction.name()},
        {"correction_value", scalar(r.correction_value)},
        {"g_star", scalar(r.g_star)},
    };
    std::string text;
    switch (format) {
        case Format::JsonLines: {
            nlohmann::ordered_json j;
            j["group_i"] = data.label_i;
            j["group_j"] = data.label_j;
            j["mean_difference"] = r.mean_difference;
            j["pooled_sd"] = r.pooled_sd;
            j["cohens_d"] = r.cohens_d;
            j["m"] = r.m.value();
            j["correction"] = r.correction.name();
            j["correction_value"] = r.correction_value;
            j["g_star"] = r.g_star;
            text = j.dump() + '\n';
            break;
        }
        case Format::Csv:
        case Format::Tsv: {
            std::vector<std::string> header;
            std::vector<std::string> row;
            for (const auto& [key, value] : fields) {
                header.push_back(key);
                row.push_back(value);
            }
            text = delimited(header, {row}, format == Format::Tsv ? '\t' : ',');
            break;
        }
        default:
            for (const auto& [key, value] : fields) {
                text += key + '=' + value + '\n';
            }
    }
    emit(text, output, out);
    return kExitOk;
}

int cmd_table(Format format, const std::string& output, std::ostream& out) {
    if (format == Format::Svg) {
        throw UsageError("svg output is only available for sweep");
    }
    const auto all = ApproxKind::approximations();
    const std::vector<ApproxKind> kinds(all.begin(), all.end());
    emit(error_rows_text(reproduce_table1(), kinds, format == Format::Text ? Format::Csv : format),
         output, out);
    return kExitOk;
}

int cmd_sweep(double start, double end, double step, const std::vector<std::string>& kind_names,
              Format format, const std::string& output, std::ostream& out) {
    std::vector<ApproxKind> kinds;
    if (kind_names.empty()) {
        const auto all = ApproxKind::approximations();
        kinds.assign(all.begin(), all.end());
    }
    for (const std::string& name : kind_names) {
        const ApproxKind kind = parse_kind(name);
        if (kind.tag() == ApproxKind::Tag::Exact) {
            throw UsageError("sweep kinds must be hedges or p1..p6");
        }
        if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
            kinds.push_back(kind);
        }
    }
    const SweepConfig config{start, end, step, kinds};
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::vector<ErrorRow> rows = sweep(config);
    const std::string text = format == Format::Svg
                                 ? render_error_chart(rows, kinds)
                                 : error_rows_text(rows, kinds,
                                                   format == Format::Text ? Format::Csv : format);
    emit(text, output, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bias-corrected standardized mean difference and correction-factor approximations",
                 "hedgesg"};
    app.require_subcommand(1);

    double m = 0.0;
    std::string kind = "exact";
    std::vector<std::string> kinds;
    std::string input;
    std::string output;
    std::string format;
    double start = 0.0;
    double end = 0.0;
    double step = 1.0;

    auto* jfactor = app.add_subcommand("jfactor", "Print the correction factor at m");
    jfactor->add_option("--m", m, "Degrees of freedom (real, > 1)")->required();
    jfactor->add_option("--kind", kind, "exact, hedges, p1..p6");
    jfactor->add_option("--format", format, "json-lines for a JSON record");

    auto* effect = app.add_subcommand("effect", "Effect size from two-group CSV data");
    effect->add_option("--input", input, "CSV with header group,value")->required();
    effect->add_option("--kind", kind, "exact, hedges, p1..p6");
    effect->add_option("--format", format, "csv, tsv or json-lines (default key=value)");
    effect->add_option("--output", output, "Write to file instead of standard output");

    auto* table = app.add_subcommand("table", "Absolute errors at m = 10, 30, 50, 70, 100, 200");
    table->add_option("--format", format, "csv (default), tsv or json-lines");
    table->add_option("--output", output, "Write to file instead of standard output");

    auto* sweep_cmd = app.add_subcommand("sweep", "Absolute errors over a grid of m");
    sweep_cmd->add_option("--start", start, "First m (> 1)")->required();
    sweep_cmd->add_option("--end", end, "Last m (>= start)")->required();
    sweep_cmd->add_option("--step", step, "Grid spacing (> 0), default 1");
    sweep_cmd->add_option("--kind", kinds, "Comma-separated subset of hedges,p1..p6 (default all)")
        ->delimiter(',');
    sweep_cmd->add_option("--format", format, "csv (default), tsv, json-lines or svg");
    sweep_cmd->add_option("--output", output, "Write to file instead of standard output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const Format fmt = parse_format(format);
        if (*jfactor) {
            return cmd_jfactor(m, kind, fmt, out);
        }
        if (*effect) {
            return cmd_effect(input, kind, fmt, output, out);
        }
        if (*table) {
            return cmd_table(fmt, output, out);
        }
        return cmd_sweep(start, end, step, kinds, fmt, output, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const InsufficientData& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hedges::cli
