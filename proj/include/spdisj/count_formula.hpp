#pragma once

// Exact inclusion-exclusion count of disjoint pairs of S-permutation
// matrices, summed over the isomorph-free bipartite graph catalogs:
//
//   omega(g)   = prod_{i=0}^{n-2} ((n-i)!)^{psi_i(g)} / prod_{d in [g]} d!
//   theta(n,k) = sum of omega(g) over graphs with k edges
//   D          = (n!)^{4n} + (n!)^{2(n+1)} * sum_{k=1}^{n^2} (-1)^k theta(n,k)
//   d          = D / 2
//
// The twin-class denominator prod d! only counts automorphisms that permute
// vertices with identical neighbourhoods. Weighting::Automorphisms divides by
// the full automorphism group order |Aut(g)| = (n!)^2 / (labeled copies of g)
// instead, which is what inclusion-exclusion over labeled graphs actually
// requires; the two differ whenever g has a non-twin symmetry (for n=2, the
// perfect matching). Only the automorphism weighting agrees with the census.

#include "spdisj/bigraph.hpp"
#include "spdisj/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace spdisj {

enum class Weighting { TwinClasses, Automorphisms };

Rational omega(const GraphProfile& g, int n);

// prod_v (n - deg v)! / |Aut(g)|, using the entry's labeled orbit size.
Rational omega_automorphism(const CatalogEntry& e, int n);

std::uint64_t automorphism_count(const CatalogEntry& e, int n);

// Same weight with the degree product running over i = 0..n; vertices of
// degree n-1 and n contribute 1! and 0!. Kept as a cross-check.
Rational omega_full_product(const GraphProfile& g, int n);

Rational theta(int n, int k, const GraphCatalog& catalog, Weighting w = Weighting::TwinClasses);

struct ThetaTable {
    int n = 0;
    Weighting weighting = Weighting::TwinClasses;
    std::map<int, Rational> values;  // k = 1..n²
};

ThetaTable theta_table(const GraphCatalog& catalog, Weighting w = Weighting::TwinClasses);

// (n!)^{4n} + (n!)^{2(n+1)} * alternating theta sum, before the integrality
// check; exposed so callers can inspect the intermediate value.
Rational ordered_count_rational(const ThetaTable& table);

// D. Throws ConsistencyError if the rational result is not a non-negative
// even integer; std::invalid_argument for n < 2.
BigInt count_ordered(const GraphCatalog& catalog, Weighting w = Weighting::TwinClasses);
BigInt count_ordered(int n, Weighting w = Weighting::TwinClasses);

BigInt count_unordered(const GraphCatalog& catalog, Weighting w = Weighting::TwinClasses);
BigInt count_unordered(int n, Weighting w = Weighting::TwinClasses);

std::string weighting_name(Weighting w);

}  // namespace spdisj
