#include "wonderful/polynomial.hpp"

#include "wonderful/error.hpp"

namespace wonderful {

KPolynomial lefschetz_range(int a, int b) {
  KPolynomial out;
  for (int k = a; k <= b; ++k) out.add_term(0, k, 1);
  return out;
}

KPolynomial projective_class(int n) { return lefschetz_range(0, n); }

std::vector<BigInt> to_univariate_l(const KPolynomial& p) {
  std::vector<BigInt> out(static_cast<std::size_t>(std::max(p.degree_second(), 0)) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    if (e.first != 0) {
      throw Error(ErrorCode::InvalidArgument, "expected a polynomial in L only, found " + p.to_string());
    }
    out[static_cast<std::size_t>(e.second)] = c;
  }
  return out;
}

KPolynomial from_univariate_l(const std::vector<BigInt>& coeffs) {
  KPolynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.add_term(0, static_cast<int>(k), coeffs[k]);
  return out;
}

std::vector<BigInt> divide_exact(std::vector<BigInt> numerator, const std::vector<BigInt>& divisor) {
  std::vector<BigInt> d = divisor;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw Error(ErrorCode::DivisionFailure, "division by the zero polynomial");
  while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
  if (numerator.empty()) return {};
  if (numerator.size() < d.size()) {
    throw Error(ErrorCode::DivisionFailure, "numerator degree below divisor degree");
  }

  const std::size_t qlen = numerator.size() - d.size() + 1;
  std::vector<BigInt> quotient(qlen, 0);
  const BigInt& lead = d.back();
  for (std::size_t step = qlen; step-- > 0;) {
    const BigInt& top = numerator[step + d.size() - 1];
    if (top % lead != 0) {
      throw Error(ErrorCode::DivisionFailure, "non-integral quotient coefficient");
    }
    const BigInt q = top / lead;
    quotient[step] = q;
    for (std::size_t j = 0; j < d.size(); ++j) numerator[step + j] -= q * d[j];
  }
  for (const BigInt& r : numerator) {
    if (r != 0) throw Error(ErrorCode::DivisionFailure, "division leaves a nonzero remainder");
  }
  return quotient;
}

}  // namespace wonderful
