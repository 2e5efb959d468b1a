#include "numrad/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace numrad {

std::string matrix_to_json(const ComplexMatrix& a) {
    nlohmann::json j;
    j["n"] = a.order();
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : a.entries()) entries.push_back({z.real(), z.imag()});
    j["entries"] = std::move(entries);
    return j.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("matrix JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON must be an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("matrix JSON field \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::invalid_argument("matrix JSON field \"n\" must be >= 1");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("matrix JSON \"entries\" must hold n*n [re, im] pairs");
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const auto& pair : entries) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw std::invalid_argument("matrix JSON entries must be [re, im] number pairs");
        data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexMatrix(n, std::move(data));
}

void save_matrix(const ComplexMatrix& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << matrix_to_json(a) << '\n';
    if (!out) throw std::runtime_error("failed writing matrix file: " + path);
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return matrix_from_json(buffer.str());
}

}  // namespace numrad
