#pragma once

#include <random>

#include "cochain/chain_map.hpp"

// Random instances for property tests and benchmarks. Everything here is
// valid by construction (complexes satisfy d^2 = 0, chain maps commute,
// quasi-isomorphisms are quasi-isomorphisms for structural reasons).
namespace cochain::gen {

using Rng = std::mt19937_64;

// Entries uniform in F_p; small fractions with |num| <= 3, den <= 3 over Q.
// zero_bias is the probability that an entry is forced to zero.
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng,
                     double zero_bias = 0.0);

// Each d^i is drawn from matrices vanishing on im d^{i-1}.
CochainComplex random_complex(const Field& field, int lo, int hi, std::size_t max_dim, Rng& rng);

// Random window inside [min_degree, max_degree].
CochainComplex random_complex_in(const Field& field, int min_degree, int max_degree,
                                 std::size_t max_dim, Rng& rng);

// Uniform combination of a basis of all chain maps a -> b.
ChainMap random_chain_map(const CochainComplex& a, const CochainComplex& b, Rng& rng);

Homotopy random_homotopy(const CochainComplex& a, const CochainComplex& b, Rng& rng);

// MC(id_C) for a random C: contractible, hence acyclic.
CochainComplex random_acyclic(const Field& field, int lo, int hi, std::size_t max_dim, Rng& rng);

// a -> a (+) b and a (+) b -> a.
ChainMap sum_inclusion(const CochainComplex& a, const CochainComplex& b);
ChainMap sum_projection(const CochainComplex& a, const CochainComplex& b);

// A quasi-isomorphism M -> Kbar built as
//   M = M0 (+) P'  --proj-->  M0  --incl-->  M0 (+) P  --(id + dk + kd)-->  M0 (+) P
// with P, P' acyclic. Dimensions of M and Kbar stay <= max_dim.
ChainMap random_quasi_iso(const Field& field, int min_degree, int max_degree, std::size_t max_dim,
                          Rng& rng);

// Same, but with a prescribed source M (no P' summand).
ChainMap random_quasi_iso_from(const CochainComplex& m, std::size_t max_dim, Rng& rng);

}  // namespace cochain::gen
