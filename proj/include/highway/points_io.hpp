#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "highway/model.hpp"

namespace highway {

/// Invalid user input (malformed files, out-of-range arguments). The CLI
/// maps this to exit code 2, everything else unexpected to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_real(double value);

// Points file format: one decimal position per line, strictly ascending;
// blank lines and lines starting with '#' are ignored. Violations are
// reported with their line number.
PointSet read_points(std::istream& is, const std::string& source_name = "<stream>");
PointSet read_points_file(const std::filesystem::path& path);
void write_points(std::ostream& os, const PointSet& p, const std::string& comment = "");
void write_points_file(const std::filesystem::path& path, const PointSet& p,
                       const std::string& comment = "");

}  // namespace highway
