#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "subpoly/graph.hpp"
#include "subpoly/hull.hpp"
#include "subpoly/montecarlo.hpp"
#include "subpoly/rational.hpp"
#include "subpoly/report.hpp"

namespace subpoly {

// Symmetric step kernel with `steps` equal-measure steps; entries in [0,1].
struct StepKernel {
    int steps = 0;
    std::vector<std::vector<Rat>> entries;

    StepKernel(int n, std::vector<std::vector<Rat>> m);

    static StepKernel constant(int n, const Rat& c);
    static StepKernel zero(int n) { return constant(n, Rat(0)); }
    static StepKernel one(int n) { return constant(n, Rat(1)); }
};

// Homomorphism density of F in the kernel: the average over all (not
// necessarily injective) vertex maps of the product of entries along edges.
// Guarded: steps^|F| must stay below ~5e6.
Rat p_eval(const Graph& f, const StepKernel& k);

// Splits every step into `factor` equal substeps. Densities are invariant.
StepKernel blow_up(const StepKernel& k, int factor);

struct ZonotopeSample {
    StepKernel kernel;
    Vec point;  // (p_eval(F_1,kernel), ..., p_eval(F_d,kernel))
};

// `count` step kernels with the given step count and their density vectors.
// The all-zero and all-one kernels come first; the rest draw entries uniformly
// from {0/65535, ..., 65535/65535}, so every point is exact. count >= 2.
std::vector<ZonotopeSample> zonotope_sample(const GraphVector& fs, int steps,
                                            int count, std::uint64_t seed);

// Every sampled density vector must lie in the order-n density polytope:
// kernels are limits of growing graphs, so their statistics survive into
// every finite level. Bulk screening runs in doubles against the exact facet
// description when available; anything near a facet is re-checked exactly.
CheckReport check_zonotope_in_polytope(const GraphVector& fs, int n, int steps,
                                       int count, std::uint64_t seed);

struct FullDimWitness {
    bool found = false;
    std::vector<Vec> simplex;  // dim+1 affinely independent sample points
    Rat volume;                // |det| / dim!  (positive iff found)
};

// Greedily grows an affinely independent subset of sampled density vectors
// until it spans a full-dimensional simplex.
FullDimWitness full_dim_witness(const GraphVector& fs, int steps, int count,
                                std::uint64_t seed);

struct ZonotopeVolume {
    bool exact = false;
    Rat volume;    // exact convex hull volume of the samples (dim <= 3)
    McVolume mc;   // estimate otherwise
};

// Volume of the convex hull of the sampled density vectors (an inner
// approximation of the curvy zonotope).
ZonotopeVolume zonotope_hull_volume(const GraphVector& fs, int steps, int count,
                                    std::uint64_t seed, long mc_samples = 4000);

// Random graph on m vertices from the kernel: each vertex draws a uniform
// step, each edge appears independently with the corresponding entry as its
// probability. Returns adjacency bitmasks; m <= 32. Subgraph densities of the
// result are unbiased estimators of p_eval.
std::vector<std::uint32_t> sample_gnw(int m, const StepKernel& k,
                                      std::mt19937_64& rng);

}  // namespace subpoly
