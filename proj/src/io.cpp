#include "unsharp/io.hpp"

#include <fstream>
#include <sstream>

namespace unsharp::io {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
    throw Error(ErrorCode::ParseError, message);
}

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        parse_error(where + ": complex entries must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::Index dim_from_json(const json& j) {
    if (!j.is_object()) parse_error("top-level JSON value must be an object");
    const auto it = j.find("dim");
    if (it == j.end() || !it->is_number_integer() || it->get<long long>() < 1) {
        parse_error("\"dim\" must be a positive integer");
    }
    return static_cast<Eigen::Index>(it->get<long long>());
}

}  // namespace

json complex_to_json(Complex z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j, Eigen::Index dim, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        std::ostringstream os;
        os << where << ": expected " << dim << " rows";
        parse_error(os.str());
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const auto& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            std::ostringstream os;
            os << where << ": row " << r << " must have " << dim << " entries";
            parse_error(os.str());
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)], where);
        }
    }
    return m;
}

Povm povm_from_json(const json& j) {
    const auto dim = dim_from_json(j);
    const auto it = j.find("effects");
    if (it == j.end() || !it->is_array() || it->empty()) {
        parse_error("\"effects\" must be a non-empty array of matrices");
    }
    std::vector<ComplexMatrix> effects;
    for (std::size_t i = 0; i < it->size(); ++i) {
        effects.push_back(matrix_from_json((*it)[i], dim, "effect " + std::to_string(i)));
    }
    return make_povm(std::move(effects));
}

json povm_to_json(const Povm& povm) {
    json effects = json::array();
    for (const auto& e : povm.effects()) effects.push_back(matrix_to_json(e));
    return json{{"dim", povm.dim()}, {"effects", std::move(effects)}};
}

DensityMatrix state_from_json(const json& j) {
    const auto dim = dim_from_json(j);
    const bool has_matrix = j.contains("matrix");
    const bool has_vector = j.contains("vector");
    if (has_matrix == has_vector) parse_error("state needs exactly one of \"matrix\" or \"vector\"");
    if (has_matrix) return validate_density(matrix_from_json(j["matrix"], dim, "state matrix"));

    const auto& v = j["vector"];
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != dim) {
        std::ostringstream os;
        os << "state vector must have " << dim << " entries";
        parse_error(os.str());
    }
    Ket psi(dim);
    for (Eigen::Index k = 0; k < dim; ++k) psi(k) = complex_from_json(v[static_cast<std::size_t>(k)], "state vector");
    return DensityMatrix::pure(psi);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        parse_error(path + ": " + e.what());
    }
}

Povm load_povm(const std::string& path) {
    return povm_from_json(read_json_file(path));
}

DensityMatrix load_state(const std::string& path) {
    return state_from_json(read_json_file(path));
}

}  // namespace unsharp::io
