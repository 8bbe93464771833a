#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hedges/error_analysis.hpp"

namespace hedges::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,    // bad flags, unparsable numbers, malformed CSV
    kExitDomain = 2,   // undefined result: radicand <= 0, zero s_p, too few observations
};

/// Malformed group-data CSV; line is 1-based (0 when not tied to a line).
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Long-format two-group data. Group i is the first label seen in the file.
struct GroupData {
    std::string label_i;
    std::string label_j;
    std::vector<double> values_i;
    std::vector<double> values_j;
};

/// Parses `group,value` CSV (LF or CRLF). Throws CsvError.
GroupData parse_group_csv(std::istream& in);

/// Log-scale error chart, one polyline per kind. Byte-deterministic.
std::string render_error_chart(const std::vector<ErrorRow>& rows,
                               const std::vector<ApproxKind>& kinds);

/// Runs the command line (args excludes the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hedges::cli
