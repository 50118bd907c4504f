#include "hcw/json_io.hpp"

#include <stdexcept>

#include "hcw/poly_parse.hpp"

namespace hcw {

using nlohmann::json;

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"dim", m.rows()}, {"rows", std::move(rows)}};
}

ExactMatrix matrix_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != dim)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    ExactMatrix m(dim, dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(rows[i].size()) != dim)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (int c = 0; c < dim; ++c)
            m.at(i, c) = Rational::from_string(rows[i][c].get<std::string>());
    }
    return m;
}

json poly_matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"dim", m.rows()}, {"rows", std::move(rows)}};
}

PolyMatrix poly_matrix_from_json(const json& j, const VarList& vars) {
    int dim = j.at("dim").get<int>();
    const json& rows = j.at("rows");
    PolyMatrix m(dim, dim, MultiPoly::zero(vars));
    for (int i = 0; i < dim; ++i)
        for (int c = 0; c < dim; ++c)
            m.at(i, c) = parse_poly(rows[i][c].get<std::string>(), vars);
    return m;
}

json quadratic_map_to_json(const ksmap::QuadraticMap& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(c.to_string());
    return {{"n", m.n_target},
            {"source_dim", m.n_source},
            {"side", ksmap::side_name(m.side)},
            {"components", std::move(comps)}};
}

ksmap::QuadraticMap quadratic_map_from_json(const json& j) {
    ksmap::QuadraticMap m;
    m.n_target = j.at("n").get<int>();
    m.n_source = j.at("source_dim").get<int>();
    std::string side = j.at("side").get<std::string>();
    if (side != "left" && side != "right")
        throw std::invalid_argument("quadratic_map_from_json: bad side");
    m.side = side == "left" ? ksmap::Side::left : ksmap::Side::right;
    VarList vars = u_vars(m.n_source);
    for (const auto& c : j.at("components")) m.components.push_back(parse_poly(c, vars));
    return m;
}

json generator_set_to_json(const cartanweyl::GeneratorSet& g,
                           const cartanweyl::CommutatorTable& table) {
    json gens = json::array();
    for (size_t i = 0; i < g.generators.size(); ++i)
        gens.push_back({{"label", g.labels[i]}, {"matrix", matrix_to_json(g.generators[i])}});
    json entries = json::array();
    for (const auto& e : table.entries) {
        json coeffs = json::array();
        for (const auto& c : e.coeffs) coeffs.push_back(c.to_string());
        entries.push_back({{"a", e.a}, {"b", e.b}, {"in_span", e.in_span},
                           {"coeffs", std::move(coeffs)}});
    }
    return {{"n", g.n},
            {"generators", std::move(gens)},
            {"commutators", {{"closed", table.closed}, {"entries", std::move(entries)}}}};
}

cartanweyl::GeneratorSet generator_set_from_json(const json& j) {
    cartanweyl::GeneratorSet g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("generators")) {
        g.labels.push_back(e.at("label").get<std::string>());
        g.generators.push_back(matrix_from_json(e.at("matrix")));
    }
    return g;
}

std::vector<Rational> rationals_from_json(const json& j) {
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(Rational::from_string(e.get<std::string>()));
    return v;
}

json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(r.to_string());
    return out;
}

}  // namespace hcw
