#include "highway/points_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace highway {

std::string format_real(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

PointSet read_points(std::istream& is, const std::string& source_name) {
    std::vector<double> xs;
    std::string line;
    std::size_t line_no = 0;
    std::size_t prev_line = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto body = trimmed(line);
        if (body.empty() || body.front() == '#') continue;
        double value = 0.0;
        const auto res = std::from_chars(body.data(), body.data() + body.size(), value);
        if (res.ec != std::errc{} || res.ptr != body.data() + body.size())
            throw InputError(source_name + ": line " + std::to_string(line_no) +
                             ": not a decimal position");
        if (!std::isfinite(value))
            throw InputError(source_name + ": line " + std::to_string(line_no) +
                             ": position must be finite");
        if (!xs.empty()) {
            if (value == xs.back())
                throw InputError(source_name + ": line " + std::to_string(line_no) +
                                 ": duplicate of line " + std::to_string(prev_line));
            if (value < xs.back())
                throw InputError(source_name + ": line " + std::to_string(line_no) +
                                 ": positions must be ascending");
        }
        xs.push_back(value);
        prev_line = line_no;
    }
    return PointSet(std::move(xs));
}

PointSet read_points_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open points file: " + path.string());
    return read_points(in, path.string());
}

void write_points(std::ostream& os, const PointSet& p, const std::string& comment) {
    if (!comment.empty()) os << "# " << comment << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) os << format_real(p[i]) << '\n';
}

void write_points_file(const std::filesystem::path& path, const PointSet& p,
                       const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    write_points(out, p, comment);
    if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace highway
