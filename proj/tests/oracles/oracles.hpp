#ifndef GAUGECOHO_TESTS_ORACLES_HPP
#define GAUGECOHO_TESTS_ORACLES_HPP

// Reference computations that share no code with the library: explicit
// polynomials in finitely many variables, partition enumeration, and
// elementary divisors from gcds of minors.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

// Polynomial in explicit variables x_0..x_{N-1}, keyed by the exponent vector.
using Poly = std::map<std::vector<unsigned>, mpz_class>;
using Matrix = std::vector<std::vector<mpz_class>>;

Poly constant(unsigned vars, const mpz_class &c);
Poly add(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly scale(const Poly &a, const mpz_class &c);
// Sum of all t-fold products of distinct variables.
Poly elementary(unsigned vars, unsigned t);
// x_0^i + ... + x_{N-1}^i
Poly power_sum(unsigned vars, unsigned i);

// Partitions of w, parts in descending order.
std::vector<std::vector<unsigned>> partitions(unsigned w, unsigned max_part);
unsigned long count_partitions(unsigned w, unsigned max_part);

// Monomials of weight w over generators with the given weights.
unsigned long count_monomials(unsigned w, const std::vector<unsigned> &generator_weights);

// dim over Q of Z[c_1..c_n, x_1, ...]/(h_n, ...) at weight w, as predicted by
// partitions with parts <= n times partitions with parts <= n - 1.
unsigned long gauge_dimension(unsigned n, unsigned w);

mpz_class determinant(Matrix m);
// d_k / d_{k-1} with d_k the gcd of the k x k minors; only the nonzero ones.
std::vector<mpz_class> elementary_divisors_by_minors(const Matrix &m);

// Nontrivial elementary divisors of the weight-w part of Z[y_1, ...]/(s_n, ...),
// computed in monomial-symmetric coordinates with w explicit variables.
std::vector<mpz_class> bott_torsion(unsigned n, unsigned w);

} // namespace oracle

#endif
