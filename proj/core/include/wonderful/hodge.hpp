#ifndef WONDERFUL_HODGE_HPP
#define WONDERFUL_HODGE_HPP

#include "wonderful/arrangements.hpp"
#include "wonderful/identity.hpp"
#include "wonderful/polynomial.hpp"

namespace wonderful {

/// e(P^n) = 1 + xy + ... + (xy)^n
HodgePolynomial hodge_projective(int n);
/// e(A^n) = (xy)^n
HodgePolynomial hodge_affine(int n);

/// The Hodge realization T -> e(X), L -> xy.
HodgePolynomial realize_hodge(const KPolynomial& p, const HodgePolynomial& eX);

/// Hodge polynomial of the wonderful compactification evaluated directly in
/// Z[x, y], without going through the Grothendieck class.
HodgePolynomial wonderful_hodge(const Graph& g, int d, const HodgePolynomial& eX,
                                EnumerationOptions options = {});

/// Value at x = y = 1.
BigInt euler_characteristic(const HodgePolynomial& h);

/// Factorization through the Grothendieck class and the Hodge image of the
/// stratum expansion, in both indexings.
IdentityReport<HodgePolynomial> verify_hodge_identity(const Graph& g, int d,
                                                      const HodgePolynomial& eX,
                                                      EnumerationOptions options = {});

}  // namespace wonderful

#endif  // WONDERFUL_HODGE_HPP
