/**
 * The cone-over-skeleton map from the m-simplex: on the barycentric
 * subdivision, the barycenter of a face of dimension at most d-1 stays where
 * it is and every other barycenter goes to the apex c of the cone over the
 * (d-1)-skeleton. For m = (d+1)r-2 some face of every r-tuple of disjoint
 * faces has an image disjoint from the others; at m = (d+1)r-1 the probe
 * looks for a common point instead.
 */

#ifndef CPT_COUNTEREXAMPLE_HPP
#define CPT_COUNTEREXAMPLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpt/simplicial.hpp"

namespace cpt {

struct CounterexampleSpec
{
    int d = 0;
    int r = 0;
    int m = 0;
    SimplicialComplex W;          // cone over skel_{d-1} of the m-simplex, apex m+1
    Realization W_realization;    // standard simplex, apex at the barycenter
    PLMapSpec f;

    VertexId apex() const { return m + 1; }
    const Point& apex_point() const { return W_realization.at(apex()); }
};

/** The map for an arbitrary m >= 1; m need not be (d+1)r-2. */
CounterexampleSpec skeleton_cone_map(int d, int r, int m);

/** skeleton_cone_map with m = (d+1)r-2. */
CounterexampleSpec build_counterexample(int d, int r);

/**
 * Unordered r-tuples of nonempty, pairwise disjoint faces of the m-simplex.
 * Faces within a tuple increase in (dim, lex) order; tuples are listed
 * lexicographically in that order.
 */
std::vector<std::vector<Simplex> > enumerate_disjoint_tuples(int m, int r);

/**
 * Checks, for every face F: if dim F <= d-1 every image polytope lies in the
 * realized F; otherwise every image polytope contains c; and every image
 * vertex other than c lies in the realized (d-1)-skeleton of F. Throws
 * VerificationFailure naming the face on the first violation.
 */
void check_map_invariants(const CounterexampleSpec& spec);

/** Farkas certificate that polytope a of f(F_i) misses polytope b of f(F_j). */
struct PairCertificate
{
    int j = 0;
    int polytope_i = 0;
    int polytope_j = 0;
    VectorX<Rational> farkas;
};

struct TupleIsolation
{
    std::vector<Simplex> faces;
    int isolated = -1;       // first index whose image misses all other images (LP)
    int combinatorial = -1;  // first face of dimension <= d-1
    std::vector<PairCertificate> certificates;   // for `isolated`
    std::uint64_t digest = 0;                    // FNV-1a of the certificates
};

struct IsolationReport
{
    int d = 0;
    int r = 0;
    int m = 0;
    std::vector<TupleIsolation> tuples;
};

/**
 * Exhaustive isolation check over enumerate_disjoint_tuples(m, r), tuples
 * spread over `jobs` threads. Every Farkas certificate is re-checked. Throws
 * VerificationFailure when a tuple has no isolated face, when no face of a
 * tuple has dimension <= d-1, or when the combinatorial choice is not
 * isolated geometrically.
 */
IsolationReport verify_isolation(const CounterexampleSpec& spec, int jobs = 1);

/** 64-bit FNV-1a. */
std::uint64_t fnv1a(const std::string& bytes);

struct ProbeWitness
{
    std::vector<Simplex> faces;
    std::vector<int> polytopes;   // chosen polytope of each f(F_i)
    Point point;
};

struct ProbeResult
{
    int d = 0;
    int r = 0;
    int m = 0;
    std::size_t tuples_examined = 0;
    std::optional<ProbeWitness> witness;
};

/**
 * Searches the map with m = (d+1)r-1 for disjoint faces F_1..F_r whose
 * images share a point, one polytope per image at a time, in canonical
 * order. Returns the first witness.
 */
ProbeResult probe_tverberg_plus_one(int d, int r);

bool is_prime_power(int n);

}   // namespace cpt

#endif
