#include "coxspin/json_io.hpp"

#include <set>

namespace coxspin {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw std::invalid_argument("expected a rational as string or integer");
}

json polynomial_to_json(const Polynomial& p) {
    json out = json::object();
    for (const auto& [m, c] : p.terms()) out[m.str()] = to_string(c);
    return out;
}

json subset_to_json(const EvenSubset& B) { return json(B.elems); }

EvenSubset subset_from_json(const json& j, int n) {
    std::vector<int> elems = j.get<std::vector<int>>();
    return EvenSubset(n, std::move(elems));
}

json configuration_to_json(const Configuration& cfg) {
    json q = json::array();
    for (const auto& v : cfg.q) q.push_back(to_string(v));
    return json{{"n", cfg.n}, {"q", q}};
}

Configuration configuration_from_json(const json& j) {
    Configuration cfg;
    cfg.n = j.at("n").get<int>();
    for (const auto& v : j.at("q")) cfg.q.push_back(rational_from_json(v));
    validate(cfg);
    return cfg;
}

json grassmann_to_json(const GrassmannPoint& g) {
    json upper = json::array(), lower = json::array();
    for (const auto& v : g.upper) upper.push_back(to_string(v));
    for (const auto& v : g.lower) lower.push_back(to_string(v));
    return json{{"n", g.n}, {"rows", json::array({upper, lower})}};
}

GrassmannPoint grassmann_from_json(const json& j) {
    GrassmannPoint g;
    g.n = j.at("n").get<int>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != 2)
        throw std::invalid_argument("grassmann point needs two rows");
    for (const auto& v : rows[0]) g.upper.push_back(rational_from_json(v));
    for (const auto& v : rows[1]) g.lower.push_back(rational_from_json(v));
    if (static_cast<int>(g.upper.size()) != g.n || static_cast<int>(g.lower.size()) != g.n)
        throw std::invalid_argument("grassmann rows must have length n");
    return g;
}

json quadric_to_json(const Quadric& q) {
    json terms = json::array();
    for (const auto& [m, c] : q.terms())
        terms.push_back(json{{"A", subset_to_json(m.a)},
                             {"B", subset_to_json(m.b)},
                             {"coeff", to_string(c)}});
    return json{{"terms", terms}};
}

json pic_to_json(const PicClass& d) {
    json out = json::array();
    for (const auto& v : d.c) out.push_back(to_string(v));
    return out;
}

json tree_to_json(const PhyloTree& t) {
    json edges = json::array();
    std::set<std::pair<int, int>> seen;
    for (size_t v = 0; v < t.adj.size(); ++v)
        for (const auto& e : t.adj[v]) {
            std::pair<int, int> key{std::min(static_cast<int>(v), e.to),
                                    std::max(static_cast<int>(v), e.to)};
            if (seen.insert(key).second)
                edges.push_back(json::array({key.first, key.second, to_string(e.len)}));
        }
    json leaves = json::object();
    for (const auto& [label, v] : t.leaf_vertex) leaves[std::to_string(label)] = v;
    return json{{"edges", edges}, {"leaves", leaves}};
}

json degree_report_to_json(const DegreeReport& r) {
    json out{{"degree", r.degree},
             {"monomials", r.monomial_count},
             {"cox_kernel_dim", r.cox_kernel_dim},
             {"spin_rank", r.spin_rank},
             {"combined_rank", r.combined_rank},
             {"quotient_dim", r.quotient_dim},
             {"equal", r.equal},
             {"inclusion_ok", r.inclusion_ok}};
    if (r.rep_s >= 0) out["representative_s"] = r.rep_s;
    return out;
}

json main_report_to_json(const MainReport& r) {
    json degrees = json::array();
    for (const auto& d : r.degrees) degrees.push_back(degree_report_to_json(d));
    json out{{"n", r.n},
             {"seed", r.seed},
             {"config", configuration_to_json(r.data.cfg)},
             {"y", grassmann_to_json(r.data.y)},
             {"c", grassmann_to_json(r.data.c)},
             {"sample_retries", r.data.retries},
             {"degrees", degrees},
             {"verdict", r.verdict},
             {"translates_used", r.translates_used},
             {"representative_dims_ok", r.representative_dims_ok}};
    out["timings_ms"] = r.timings_ms;
    return out;
}

}  // namespace coxspin
