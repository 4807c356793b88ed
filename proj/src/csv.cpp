#include "pkpm/csv.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pkpm/fmt.hpp"

namespace pkpm {

namespace {

constexpr const char* kFrequencyHeader = "h,n_effective,n_failed,frequency,two_steps,sigmoid";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw std::runtime_error("csv: bad number '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0') throw std::runtime_error("csv: bad integer '" + s + "'");
    return static_cast<int>(v);
}

}  // namespace

void write_frequency_csv(std::ostream& os, const FrequencyTable& table) {
    os << kFrequencyHeader << "\n";
    for (const auto& r : table.rows) {
        os << fmt_g17(r.h) << "," << r.n_effective << "," << r.n_failed << ","
           << fmt_g17(r.frequency) << "," << fmt_g17(r.two_steps) << "," << fmt_g17(r.sigmoid)
           << "\n";
    }
}

std::vector<FrequencyRow> read_frequency_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kFrequencyHeader)
        throw std::runtime_error("csv: unexpected header '" + line + "'");
    std::vector<FrequencyRow> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 6) throw std::runtime_error("csv: expected 6 fields, got line '" + line + "'");
        FrequencyRow r;
        r.h = parse_double(f[0]);
        r.n_effective = parse_int(f[1]);
        r.n_failed = parse_int(f[2]);
        r.frequency = parse_double(f[3]);
        r.two_steps = parse_double(f[4]);
        r.sigmoid = parse_double(f[5]);
        rows.push_back(r);
    }
    return rows;
}

void write_samples_csv(std::ostream& os, std::span<const ErrorSample> samples) {
    os << "h,seed,degree,error\n";
    for (const auto& s : samples)
        os << fmt_g17(s.h) << "," << s.seed << "," << s.degree << "," << fmt_g17(s.error) << "\n";
}

void write_convergence_csv(std::ostream& os, const ConvergenceResult& result) {
    os << "h,h_actual,error,slope\n";
    const std::string slope = result.slope_valid ? fmt_g17(result.slope) : "n/a";
    for (const auto& r : result.rows)
        os << fmt_g17(r.h) << "," << fmt_g17(r.h_actual) << "," << fmt_g17(r.error) << "," << slope
           << "\n";
}

void write_laws_csv(std::ostream& os, std::span<const double> h_list, double h_star, int k,
                    int m) {
    os << "h,two_steps,sigmoid\n";
    for (double h : h_list)
        os << fmt_g17(h) << "," << fmt_g17(two_steps_law(h, h_star)) << ","
           << fmt_g17(sigmoid_law(h, h_star, k, m)) << "\n";
}

}  // namespace pkpm
