#include "logbloch/series_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace logbloch {
namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void write_series_text(const CoefficientSeries& f, std::ostream& out) {
    for (int n = 0; n <= f.degree(); ++n) {
        Complex c = f.coeff(n);
        out << n << ',' << fmt17(c.real()) << ',' << fmt17(c.imag()) << '\n';
    }
}

CoefficientSeries read_series_text(std::istream& in) {
    std::vector<Complex> coeffs;
    std::string line;
    int line_no = 0;
    long expected = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        long n;
        double re, im;
        if (std::sscanf(line.c_str() + start, "%ld,%lf,%lf", &n, &re, &im) != 3)
            throw std::runtime_error("series text: malformed line " + std::to_string(line_no));
        if (n != expected)
            throw std::runtime_error("series text: index " + std::to_string(n) + " out of order at line " +
                                     std::to_string(line_no));
        coeffs.emplace_back(re, im);
        ++expected;
    }
    if (coeffs.empty())
        throw std::runtime_error("series text: no coefficient lines");
    return CoefficientSeries(std::move(coeffs));
}

std::string series_to_json(const CoefficientSeries& f) {
    std::ostringstream out;
    out << "{\"degree\": " << f.degree() << ", \"coeffs\": [";
    for (int n = 0; n <= f.degree(); ++n) {
        if (n)
            out << ", ";
        Complex c = f.coeff(n);
        out << '[' << fmt17(c.real()) << ", " << fmt17(c.imag()) << ']';
    }
    out << "]}";
    return out.str();
}

CoefficientSeries series_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw std::runtime_error("series json: expected {\"degree\", \"coeffs\"}");
    const long degree = j["degree"].get<long>();
    const auto& arr = j["coeffs"];
    if (!arr.is_array() || static_cast<long>(arr.size()) != degree + 1)
        throw std::runtime_error("series json: coeffs length does not match degree");
    std::vector<Complex> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("series json: coefficient entries must be [re, im]");
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return CoefficientSeries(std::move(coeffs));
}

CoefficientSeries read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open series file: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos)
        throw std::runtime_error("empty series file: " + path.string());
    if (text[start] == '{')
        return series_from_json(text);
    std::istringstream stream(text);
    return read_series_text(stream);
}

void write_series_file(const CoefficientSeries& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write series file: " + path.string());
    if (path.extension() == ".json")
        out << series_to_json(f) << '\n';
    else
        write_series_text(f, out);
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace logbloch
