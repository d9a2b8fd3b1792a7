/**
 * Homological index of finite free simplicial Z2-complexes.
 *
 * For a free action the equivariant cohomology is the cohomology of the
 * quotient, and the index is the largest n for which the n-th cup power of
 * the characteristic class of the double cover X -> X/Z2 is nonzero in
 * H^n(X/Z2; F2).
 *
 * The quotient of a free simplicial action need not be a simplicial complex
 * (two simplices can be identified along the same vertex set), so every
 * computation runs on the barycentric subdivision, where the quotient is
 * always simplicial.
 */

#ifndef CPT_Z2_INDEX_HPP
#define CPT_Z2_INDEX_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cpt/simplicial.hpp"

namespace cpt {

/** A simplicial complex on vertices 0..N-1 with an involution of its vertex set. */
struct Z2Complex
{
    SimplicialComplex complex;
    std::vector<VertexId> involution;

    std::size_t num_vertices() const { return involution.size(); }
};

/** Thrown when some simplex is mapped onto itself; the index is then infinite. */
class FixedSimplexError : public std::domain_error
{
    public:
        explicit FixedSimplexError(const Simplex& s);
        const Simplex& simplex() const { return simplex_; }

    private:
        Simplex simplex_;
};

/**
 * Checks that the involution is a simplicial automorphism of order two on
 * vertices 0..N-1. Throws std::invalid_argument otherwise, and
 * FixedSimplexError when the action is not free.
 */
void validate(const Z2Complex& X);

/**
 * Boundary of the (m+1)-dimensional cross-polytope: vertex 2i is +e_i,
 * vertex 2i+1 is -e_i, simplices are the sign patterns on subsets of
 * coordinates, and the involution flips every sign.
 */
Z2Complex cross_polytope_sphere(int m);

/** Barycentric subdivision with the induced action. */
Z2Complex subdivide(const Z2Complex& X);

/**
 * Subcomplex generated by `generators` and their images, with vertices
 * renumbered 0..N'-1 in increasing order of their old ids.
 */
Z2Complex invariant_subcomplex(const Z2Complex& X, const std::vector<Simplex>& generators);

/** Vertex ids of later parts are shifted past those of earlier parts. */
Z2Complex disjoint_union(const std::vector<Z2Complex>& parts);

struct QuotientData
{
    BarycentricComplex cover;               // subdivision of X
    std::vector<VertexId> cover_involution;
    SimplicialComplex complex;              // the quotient
    std::vector<int> orbit;                 // cover vertex -> quotient vertex
    std::vector<VertexId> section;          // quotient vertex -> representative cover vertex
    std::vector<std::vector<Simplex> > simplices;   // quotient simplices by dimension, lex order
    std::vector<std::map<Simplex, std::size_t> > position;
    std::set<Simplex> cover_edges;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t count(int k) const
    {
        return k >= 0 && k <= dim() ? simplices[k].size() : 0;
    }
};

/** Throws FixedSimplexError for a non-free action. */
QuotientData quotient(const Z2Complex& X);

/** Replace the section; each entry must lie in the corresponding orbit. */
QuotientData with_section(QuotientData q, const std::vector<VertexId>& section);

/**
 * Rename quotient vertex v to permutation[v]. This changes the total vertex
 * order that cup products depend on, but not the cohomology classes.
 */
QuotientData relabel(const QuotientData& q, const std::vector<int>& permutation);

struct F2Cochain
{
    int degree = 0;
    boost::dynamic_bitset<> bits;   // one bit per quotient simplex of this degree

    bool is_zero() const { return bits.none(); }
    bool operator==(const F2Cochain&) const = default;
};

F2Cochain zero_cochain(int degree, const QuotientData& q);
F2Cochain coboundary(const F2Cochain& x, const QuotientData& q);
F2Cochain operator+(const F2Cochain& a, const F2Cochain& b);

/**
 * Edge bit: does the lift of the edge starting at the section representative
 * of its smaller endpoint end outside the section.
 */
F2Cochain characteristic_cocycle(const QuotientData& q);

/** Front-face/back-face cup product under the quotient's vertex order. */
F2Cochain cup_product(const F2Cochain& a, const F2Cochain& b, const QuotientData& q);

/** w^n; w^0 is the unit cochain and powers above the dimension are zero. */
F2Cochain cup_power(const F2Cochain& w, int n, const QuotientData& q);

/** Solves x = delta y over F2. Throws std::invalid_argument if x is not a cocycle. */
bool is_coboundary(const F2Cochain& x, const QuotientData& q);

/** Largest n <= dim X with w^n not a coboundary. */
int hind(const Z2Complex& X);
int hind(const QuotientData& q);

struct UnionIndex
{
    int direct = 0;
    std::vector<int> parts;
    int max_of_parts = 0;
};

/**
 * Index of a disjoint union computed on the union itself and as the maximum
 * over the parts. Throws VerificationFailure if the two disagree.
 */
UnionIndex disjoint_union_index(const std::vector<Z2Complex>& parts);

}   // namespace cpt

#endif
