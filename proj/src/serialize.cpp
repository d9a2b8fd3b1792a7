#include "cpt/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace cpt {

namespace {

Json simplex_to_json(const Simplex& s)
{
    return Json(s.vertices());
}

Json simplices_to_json(const std::vector<Simplex>& faces)
{
    Json out = Json::array();
    for (const auto& F : faces)
        out.push_back(simplex_to_json(F));
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    throw std::invalid_argument("expected a rational as a \"p/q\" string or an integer");
}

Json vector_to_json(const VectorX<Rational>& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(to_string(v(i)));
    return out;
}

}   // namespace

std::string hex64(std::uint64_t value)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

Json point_to_json(const Point& p)
{
    return vector_to_json(p);
}

Point point_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("expected a point as an array of coordinates");
    Point p(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
        p(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
    return p;
}

Json points_to_json(const PointMatrix& columns)
{
    Json out = Json::array();
    for (Eigen::Index j = 0; j < columns.cols(); ++j)
        out.push_back(point_to_json(columns.col(j)));
    return out;
}

Json config_to_json(const PointConfig& X)
{
    return Json{{"d", X.d}, {"points", points_to_json(X.points)}};
}

PointConfig config_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("d") || !j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("point configuration needs \"d\" and \"points\"");
    std::vector<Point> pts;
    for (const auto& p : j["points"])
        pts.push_back(point_from_json(p));
    return PointConfig(j["d"].get<int>(), pts);
}

Json complex_to_json(const SimplicialComplex& K)
{
    return Json{{"facets", simplices_to_json(K.facets())}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::invalid_argument("complex needs \"facets\"");
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"])
        facets.push_back(Simplex(f.get<std::vector<VertexId> >()));
    return SimplicialComplex(std::move(facets));
}

Json realization_to_json(const Realization& R)
{
    Json points = Json::object();
    for (const auto& [v, p] : R.points)
        points[std::to_string(v)] = point_to_json(p);
    return Json{{"ambient_dim", R.ambient_dim}, {"points", points}};
}

Json z2_to_json(const Z2Complex& X)
{
    return Json{{"facets", simplices_to_json(X.complex.facets())}, {"involution", X.involution}};
}

Z2Complex z2_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("involution"))
        throw std::invalid_argument("Z2 complex needs \"facets\" and \"involution\"");
    Z2Complex X{complex_from_json(j), j["involution"].get<std::vector<VertexId> >()};
    validate(X);
    return X;
}

HPolytopeBody body_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("A") || !j.contains("b"))
        throw std::invalid_argument("body needs \"A\" and \"b\"");
    const Json& rows = j["A"];
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("body: \"A\" must be a nonempty array of rows");
    const auto n = static_cast<Eigen::Index>(rows[0].size());
    MatrixX<Rational> A(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const Point row = point_from_json(rows[i]);
        if (row.size() != n)
            throw std::invalid_argument("body: rows of \"A\" have different lengths");
        A.row(static_cast<Eigen::Index>(i)) = row.transpose();
    }
    return HPolytopeBody(std::move(A), point_from_json(j["b"]));
}

Json to_json(const Halfspace& H)
{
    return Json{{"normal", point_to_json(H.normal)}, {"offset", to_string(H.offset)}};
}

Json to_json(const DepthCertificate& c)
{
    return Json{{"x", point_to_json(c.x)}, {"depth", c.depth}, {"halfspace", to_json(c.witness)}, {"separated", c.separated}};
}

Json to_json(const TverbergCertificate& c)
{
    Json weights = Json::array();
    for (const auto& w : c.weights)
        weights.push_back(vector_to_json(w));
    return Json{{"blocks", c.blocks}, {"x", point_to_json(c.x)}, {"weights", weights}};
}

Json to_json(const ReductionPlan& p)
{
    return Json{{"r", p.r}, {"k", p.k}, {"R", p.R}, {"d", p.d}, {"m", p.m}, {"M", p.M}};
}

Json to_json(const ReductionResult& r)
{
    return Json{{"plan", to_json(r.plan)}, {"lift", r.lift}, {"tverberg", to_json(r.upstairs)}, {"depth", to_json(r.depth)}};
}

Json to_json(const TupleIsolation& t)
{
    return Json{{"faces", simplices_to_json(t.faces)},
                {"isolated", t.isolated},
                {"combinatorial", t.combinatorial},
                {"certificates", t.certificates.size()},
                {"digest", hex64(t.digest)}};
}

Json to_json(const ProbeResult& p)
{
    Json out{{"d", p.d}, {"r", p.r}, {"m", p.m}, {"tuples_examined", p.tuples_examined}, {"found", p.witness.has_value()}};
    if (p.witness)
    {
        out["faces"] = simplices_to_json(p.witness->faces);
        out["polytopes"] = p.witness->polytopes;
        out["point"] = point_to_json(p.witness->point);
    }
    return out;
}

Json to_json(const CoverCertificate& c)
{
    return Json{{"delta", to_string(c.delta)}, {"t", point_to_json(c.t)}, {"tight_facets", c.tight_facets}};
}

Json to_json(const FiberCell& c)
{
    Json cell = Json::array();
    for (const auto& x : c.cell)
        cell.push_back(to_string(x));
    Json out{{"cell", cell}, {"samples", c.samples}};
    out.update(to_json(c.cover));
    return out;
}

}   // namespace cpt
