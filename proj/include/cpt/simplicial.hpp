/**
 * Finite abstract simplicial complexes, barycentric subdivision, rational
 * realizations and PL maps defined on the barycentric subdivision of a
 * simplex.
 *
 * Simplices are nonempty strictly increasing vertex lists. A complex is
 * stored by its maximal simplices; every face is implied. Enumeration order
 * is always (dimension, lexicographic), which makes every output
 * deterministic.
 */

#ifndef CPT_SIMPLICIAL_HPP
#define CPT_SIMPLICIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "cpt/exact_lp.hpp"
#include "cpt/rational.hpp"

namespace cpt {

using VertexId = int;

class Simplex
{
    public:
        /** Sorts the input; throws std::invalid_argument on empty or repeated vertices. */
        explicit Simplex(std::vector<VertexId> vertices);
        Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

        const std::vector<VertexId>& vertices() const { return v_; }
        std::size_t size() const { return v_.size(); }
        int dim() const { return static_cast<int>(v_.size()) - 1; }
        VertexId operator[](std::size_t i) const { return v_[i]; }

        bool contains(VertexId v) const;
        bool is_face_of(const Simplex& other) const;
        bool disjoint_from(const Simplex& other) const;

        /** Codimension-one faces; empty for a vertex. */
        std::vector<Simplex> boundary_faces() const;

        /** Every nonempty face, including the simplex itself, in (dim, lex) order. */
        std::vector<Simplex> all_faces() const;

        Simplex with_vertex(VertexId v) const;

        auto operator<=>(const Simplex&) const = default;

    private:
        struct Trusted {};
        Simplex(std::vector<VertexId> sorted, Trusted) : v_(std::move(sorted)) {}

        std::vector<VertexId> v_;
};

/** (dimension, lexicographic) order; the canonical order for mixed-dimension lists. */
struct DimLexLess
{
    bool operator()(const Simplex& a, const Simplex& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

class SimplicialComplex
{
    public:
        SimplicialComplex() = default;

        /** Any list of simplices; only the maximal ones are kept. */
        explicit SimplicialComplex(std::vector<Simplex> simplices);

        const std::vector<Simplex>& facets() const { return facets_; }
        std::vector<VertexId> vertices() const;
        bool empty() const { return facets_.empty(); }
        int dim() const;

        bool contains(const Simplex& s) const;

        /** All k-dimensional simplices in lex order. */
        std::vector<Simplex> simplices(int k) const;
        std::vector<std::vector<Simplex> > simplices_by_dim() const;
        std::vector<std::int64_t> f_vector() const;
        std::int64_t euler_characteristic() const;

        bool operator==(const SimplicialComplex&) const = default;

    private:
        std::vector<Simplex> facets_;   // sorted by DimLexLess
};

/** The full simplex on vertices 0..m. */
SimplicialComplex simplex_complex(int m);

/** All dim-faces of the m-simplex in lex order; C(m+1, dim+1) of them. */
std::vector<Simplex> faces_of_simplex(int m, int dim);

SimplicialComplex skeleton(const SimplicialComplex& K, int k);

/** K together with the join of every simplex with `apex`. */
SimplicialComplex cone(const SimplicialComplex& K, VertexId apex);

/**
 * Barycentric subdivision: one vertex per face of the base, one simplex per
 * chain of faces. Vertex ids enumerate the base faces in (dim, lex) order.
 */
struct BarycentricComplex
{
    SimplicialComplex base;
    SimplicialComplex complex;
    std::vector<Simplex> tags;   // tags[v]: the base face whose barycenter v is

    VertexId id_of(const Simplex& face) const;
    std::size_t num_vertices() const { return tags.size(); }

    std::map<Simplex, VertexId> index;
};

BarycentricComplex barycentric_subdivision(const SimplicialComplex& K);

struct Realization
{
    Eigen::Index ambient_dim = 0;
    std::map<VertexId, Point> points;

    const Point& at(VertexId v) const;
};

/**
 * Vertex i of the m-simplex goes to e_i in R^{m+1}; vertex m+1 (the cone
 * apex, when present) goes to the barycenter (1/(m+1), ..., 1/(m+1)).
 */
Realization realize_standard(int m);

/** Exact average of the realized vertices of `face`. */
Point barycenter(const Simplex& face, const Realization& realization);

/** Places every subdivision vertex at the barycenter of its tag. */
Realization realize_barycentric(const BarycentricComplex& sd, const Realization& base);

/**
 * A map affine on each simplex of the barycentric subdivision of the
 * m-simplex, given by the images of the subdivision vertices.
 */
struct PLMapSpec
{
    BarycentricComplex source;
    Realization source_realization;
    SimplicialComplex target;
    Realization target_realization;
    std::vector<Point> vertex_images;   // indexed by subdivision vertex id

    int source_dim() const { return source.base.dim(); }
    Eigen::Index target_ambient_dim() const { return target_realization.ambient_dim; }
};

/**
 * The PL map that is affine on the whole m-simplex with the given images of
 * its m+1 vertices (barycenters go to averages).
 */
PLMapSpec affine_pl_map(int m, const std::vector<Point>& base_images, SimplicialComplex target,
                        Realization target_realization);

/**
 * f(|F|) as a union of V-polytopes, one per maximal chain of faces inside F
 * (identical polytopes are reported once). Throws std::invalid_argument when
 * F is not a face of the base.
 */
std::vector<VPolytope<Rational> > pl_image_of_face(const PLMapSpec& f, const Simplex& F);

/**
 * f at the point with barycentric coordinates `weights` (nonnegative,
 * summing to 1) in the base simplex.
 */
Point pl_evaluate(const PLMapSpec& f, const Point& weights);

/** (x_1, ..., x_{m+1}) -> (x_1^2, ..., x_{m+1}^2); requires |x|^2 = 1. */
Point squaring_map(const Point& x);

}   // namespace cpt

#endif
