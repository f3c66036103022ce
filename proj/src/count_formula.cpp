#include "spdisj/count_formula.hpp"

#include "spdisj/errors.hpp"

#include <stdexcept>
#include <string>

namespace spdisj {

namespace {

Rational class_denominator(const GraphProfile& g) {
    BigInt den = 1;
    for (int d : g.class_multiset) den *= factorial(d);
    return Rational(den);
}

Rational degree_product(const GraphProfile& g, int n, int last_degree) {
    if (static_cast<int>(g.psi.size()) != n + 1)
        throw std::invalid_argument("profile does not match side size " + std::to_string(n));
    BigInt num = 1;
    for (int i = 0; i <= last_degree; ++i)
        num *= boost::multiprecision::pow(factorial(n - i), static_cast<unsigned>(g.psi[i]));
    return Rational(num);
}

void require_formula_order(int n) {
    if (n < 2) throw std::invalid_argument("the pair-count formula needs n >= 2");
}

}  // namespace

Rational omega(const GraphProfile& g, int n) {
    return degree_product(g, n, n - 2) / class_denominator(g);
}

Rational omega_full_product(const GraphProfile& g, int n) {
    return degree_product(g, n, n) / class_denominator(g);
}

std::uint64_t automorphism_count(const CatalogEntry& e, int n) {
    const BigInt group = factorial(n) * factorial(n);
    if (e.labeled_count == 0 || group % e.labeled_count != 0)
        throw ConsistencyError("orbit size " + std::to_string(e.labeled_count) + " does not divide (n!)^2");
    return static_cast<std::uint64_t>(group / e.labeled_count);
}

Rational omega_automorphism(const CatalogEntry& e, int n) {
    return degree_product(e.profile, n, n) / Rational(BigInt(automorphism_count(e, n)));
}

std::string weighting_name(Weighting w) {
    return w == Weighting::Automorphisms ? "automorphism" : "class";
}

Rational theta(int n, int k, const GraphCatalog& catalog, Weighting w) {
    if (catalog.n != n) throw std::invalid_argument("catalog built for a different n");
    if (k < 1 || k > n * n)
        throw std::out_of_range("theta: k=" + std::to_string(k) + " outside 1.." + std::to_string(n * n));
    Rational sum = 0;
    for (const auto& e : catalog.bucket(k))
        sum += w == Weighting::Automorphisms ? omega_automorphism(e, n) : omega(e.profile, n);
    return sum;
}

ThetaTable theta_table(const GraphCatalog& catalog, Weighting w) {
    ThetaTable t;
    t.n = catalog.n;
    t.weighting = w;
    for (int k = 1; k <= t.n * t.n; ++k) t.values[k] = theta(t.n, k, catalog, w);
    return t;
}

Rational ordered_count_rational(const ThetaTable& table) {
    const int n = table.n;
    require_formula_order(n);
    const BigInt nf = factorial(n);
    Rational alternating = 0;
    for (const auto& [k, value] : table.values) alternating += (k % 2 == 0) ? value : -value;
    return Rational(boost::multiprecision::pow(nf, static_cast<unsigned>(4 * n))) +
           Rational(boost::multiprecision::pow(nf, static_cast<unsigned>(2 * (n + 1)))) * alternating;
}

BigInt count_ordered(const GraphCatalog& catalog, Weighting w) {
    require_formula_order(catalog.n);
    const Rational d = ordered_count_rational(theta_table(catalog, w));
    if (boost::multiprecision::denominator(d) != 1)
        throw ConsistencyError("pair-count formula is not integral: " + to_fraction_string(d));
    BigInt out = boost::multiprecision::numerator(d);
    if (out < 0) throw ConsistencyError("pair-count formula is negative: " + out.str());
    if (out % 2 != 0) throw ConsistencyError("ordered pair count is odd: " + out.str());
    return out;
}

BigInt count_ordered(int n, Weighting w) {
    require_formula_order(n);
    return count_ordered(enumerate_catalog(n), w);
}

BigInt count_unordered(const GraphCatalog& catalog, Weighting w) {
    const BigInt ordered = count_ordered(catalog, w);
    return ordered / 2;
}

BigInt count_unordered(int n, Weighting w) {
    require_formula_order(n);
    return count_unordered(enumerate_catalog(n), w);
}

}  // namespace spdisj
