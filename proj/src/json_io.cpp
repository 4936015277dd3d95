#include "qhom/json_io.hpp"

#include <stdexcept>

namespace qhom {

Json complex_to_json(const GradedNComplex& c) {
    Json j;
    j["N"] = c.order;
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    j["ranks"] = c.ranks;
    Json borders = Json::object();
    for (long d = c.lo + 1; d <= c.hi; ++d) {
        const Matrix& b = c.border_at(d);
        Json rows = Json::array();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(b.at(i, k).to_string());
            rows.push_back(std::move(row));
        }
        borders[std::to_string(d)] = std::move(rows);
    }
    j["borders"] = std::move(borders);
    if (c.truncated_above) j["truncated"] = true;
    return j;
}

GradedNComplex complex_from_json(const Json& j) {
    GradedNComplex c;
    c.order = j.at("N").get<long>();
    require_prime_order(c.order);
    c.lo = j.at("lo").get<long>();
    c.hi = j.at("hi").get<long>();
    c.ranks = j.at("ranks").get<std::vector<long>>();
    if (c.ranks.size() != static_cast<std::size_t>(c.hi - c.lo + 1))
        throw std::invalid_argument("rank list does not match the window");
    c.truncated_above = j.value("truncated", false);
    const Json& borders = j.at("borders");
    for (long d = c.lo + 1; d <= c.hi; ++d) {
        Matrix b(c.order, static_cast<std::size_t>(c.rank(d - 1)), static_cast<std::size_t>(c.rank(d)));
        auto key = std::to_string(d);
        if (borders.contains(key)) {
            const Json& rows = borders.at(key);
            if (rows.size() != b.rows()) throw std::invalid_argument("border row count mismatch at degree " + key);
            for (std::size_t i = 0; i < b.rows(); ++i) {
                if (rows[i].size() != b.cols())
                    throw std::invalid_argument("border column count mismatch at degree " + key);
                for (std::size_t k = 0; k < b.cols(); ++k)
                    b.at(i, k) = parse_rational(c.order, rows[i][k].get<std::string>());
            }
        }
        c.borders.push_back(std::move(b));
    }
    return c;
}

Json simplicial_to_json(const SemiSimplicialSet& x) {
    Json j;
    Json cells = Json::object();
    for (long n = 0; n <= x.top_dim(); ++n) cells[std::to_string(n)] = x.cells[static_cast<std::size_t>(n)];
    j["cells"] = std::move(cells);
    Json faces = Json::object();
    for (long n = 1; n <= x.top_dim(); ++n) {
        Json fn = Json::object();
        for (long c = 0; c < x.cell_count(n); ++c) {
            Json images = Json::array();
            for (long i = 0; i <= n; ++i)
                images.push_back(x.cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(x.face(n, i, c))]);
            fn[x.cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)]] = std::move(images);
        }
        faces[std::to_string(n)] = std::move(fn);
    }
    j["faces"] = std::move(faces);
    return j;
}

SemiSimplicialSet simplicial_from_json(const Json& j) {
    SemiSimplicialSet x;
    const Json& cells = j.at("cells");
    long top = -1;
    for (auto it = cells.begin(); it != cells.end(); ++it) top = std::max(top, std::stol(it.key()));
    x.cells.resize(static_cast<std::size_t>(top + 1));
    x.faces.resize(static_cast<std::size_t>(top + 1));
    for (long n = 0; n <= top; ++n) {
        auto key = std::to_string(n);
        if (!cells.contains(key)) throw std::invalid_argument("missing cell list for dimension " + key);
        x.cells[static_cast<std::size_t>(n)] = cells.at(key).get<std::vector<std::string>>();
    }
    const Json faces = j.value("faces", Json::object());
    for (long n = 1; n <= top; ++n) {
        auto key = std::to_string(n);
        if (!faces.contains(key))
            throw std::invalid_argument("missing face table for dimension " + key);
        const Json& fn = faces.at(key);
        for (long c = 0; c < x.cell_count(n); ++c) {
            const std::string& id = x.cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            if (!fn.contains(id)) throw std::invalid_argument("missing faces for cell " + id);
            std::vector<long> images;
            for (const auto& target : fn.at(id)) {
                long idx = x.cell_index(n - 1, target.get<std::string>());
                if (idx < 0)
                    throw std::invalid_argument("face of " + id + " names unknown cell " +
                                                target.get<std::string>());
                images.push_back(idx);
            }
            x.faces[static_cast<std::size_t>(n)].push_back(std::move(images));
        }
    }
    return x;
}

std::optional<std::vector<std::string>> subcomplex_ids_from_json(const Json& j) {
    if (!j.contains("subcomplex")) return std::nullopt;
    return j.at("subcomplex").get<std::vector<std::string>>();
}

Json affine_chain_to_json(const AffineChain& c) {
    Json j;
    j["d"] = c.ambient;
    j["degree"] = c.degree;
    Json terms = Json::array();
    for (const auto& [s, coeff] : c.terms) {
        Json t;
        t["coeff"] = coeff.to_string();
        Json verts = Json::array();
        for (const auto& v : s.vertices) {
            Json point = Json::array();
            for (const auto& coord : v) point.push_back(coord.get_str());
            verts.push_back(std::move(point));
        }
        t["vertices"] = std::move(verts);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

AffineChain affine_chain_from_json(long order, const Json& j) {
    AffineChain c(j.at("d").get<long>(), j.at("degree").get<long>());
    for (const auto& t : j.at("terms")) {
        AffineSimplex s;
        s.ambient = c.ambient;
        for (const auto& point : t.at("vertices")) {
            std::vector<mpq_class> v;
            for (const auto& coord : point) {
                mpq_class value(coord.get<std::string>());
                value.canonicalize();
                v.push_back(value);
            }
            if (static_cast<long>(v.size()) != c.ambient)
                throw std::invalid_argument("vertex does not match the ambient dimension");
            s.vertices.push_back(std::move(v));
        }
        add_term(c, s, parse_rational(order, t.at("coeff").get<std::string>()));
    }
    return c;
}

Json homology_report_to_json(const AmplitudeHomologyReport& rep) {
    Json j;
    j["N"] = rep.order;
    j["lo"] = rep.lo;
    j["hi"] = rep.hi;
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
        Json cell;
        cell["m"] = c.m;
        cell["n"] = c.n;
        cell["dim"] = c.dim;
        cell["reliable"] = c.reliable;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    return j;
}

Json coefficient_table_to_json(const CoefficientTable& t) {
    Json j;
    j["N"] = t.order;
    Json alpha = Json::array();
    for (long k = 0; k < t.order; ++k) {
        Json row = Json::array();
        for (long i = 0; i <= k; ++i)
            row.push_back(t.alpha[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].to_string());
        alpha.push_back(std::move(row));
    }
    j["alpha"] = std::move(alpha);
    Json sums = Json::array();
    for (const auto& s : t.column_sums) sums.push_back(s.to_string());
    j["column_sums"] = std::move(sums);
    Json beta = Json::array();
    for (long s = 1; s < t.order; ++s) beta.push_back(t.beta[static_cast<std::size_t>(s)].to_string());
    j["beta"] = std::move(beta);
    j["sums_vanish"] = t.sums_vanish;
    j["top_is_one"] = t.top_is_one;
    j["recursion_holds"] = t.recursion_holds;
    j["beta_matches_columns"] = t.beta_matches_columns;
    return j;
}

}  // namespace qhom
