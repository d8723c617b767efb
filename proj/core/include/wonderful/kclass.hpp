#ifndef WONDERFUL_KCLASS_HPP
#define WONDERFUL_KCLASS_HPP

#include <string>
#include <vector>

#include "wonderful/arrangements.hpp"
#include "wonderful/graph.hpp"
#include "wonderful/identity.hpp"
#include "wonderful/polynomial.hpp"

namespace wonderful {

/// Class of the configuration space by inclusion-exclusion over edge subsets:
/// sum over S of (-1)^|S| T^{c(S)}. Throws ExplosionGuard when 2^|E|
/// exceeds the budget.
KPolynomial conf_class(const Graph& g, EnumerationOptions options = {});

/// Class of the configuration space of points in affine d-space modulo
/// translations and homotheties: conf_class at T = L^d, divided exactly by
/// L^d (L - 1). Throws NoEdges or DivisionFailure.
KPolynomial c_class(const Graph& g, int d, EnumerationOptions options = {});

struct NestTerm {
  Nest nest;
  KPolynomial term;
};

struct ClassReport {
  int d = 0;
  std::size_t vertex_count = 0;
  KPolynomial wonderful_class;
  KPolynomial conf_class;
  std::vector<NestTerm> per_nest_terms;  // zero terms included
};

/// Blowup formula: T^|V| plus, per nest, T^|V(graph/nest)| times the
/// product over members of (L + ... + L^{r-1}).
ClassReport wonderful_class(const Graph& g, int d, EnumerationOptions options = {});

/// The same class summed over open strata: conf class of each base quotient
/// times the screen-space fibre classes.
KPolynomial wonderful_class_via_strata(const Graph& g, int d, EnumerationOptions options = {});

enum class TargetKind { Symbolic, Projective, Affine };

struct Target {
  TargetKind kind = TargetKind::Symbolic;
  int d = 0;
};

/// T -> 1 + L + ... + L^d (projective) or L^d (affine); symbolic is identity.
KPolynomial specialize_target(const KPolynomial& p, Target target);
/// As above, but throws DimensionMismatch when target.d != report.d.
KPolynomial specialize_target(const ClassReport& report, Target target);

/// Nest in [[1,2],[1,2,3]] notation (members as sorted label lists).
std::string nest_label(const Graph& g, const Nest& nest);

/// Blowup-sum, diagonal-stratification, quotient-stratification,
/// stratum-expansion and engine-equivalence checks.
IdentityReport<KPolynomial> verify_identities(const Graph& g, int d,
                                              EnumerationOptions options = {});

}  // namespace wonderful

#endif  // WONDERFUL_KCLASS_HPP
