#ifndef WONDERFUL_POLYNOMIAL_HPP
#define WONDERFUL_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

using BigInt = boost::multiprecision::cpp_int;

struct KSymbols {
  static constexpr const char* first = "T";
  static constexpr const char* second = "L";
};

struct HodgeSymbols {
  static constexpr const char* first = "x";
  static constexpr const char* second = "y";
};

/// Exact polynomial in two commuting symbols with big-integer coefficients.
/// Zero coefficients are never stored, so equality is structural.
template <class Symbols>
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;
  using TermMap = std::map<Exponents, BigInt>;

  BivariatePolynomial() = default;
  BivariatePolynomial(long long constant) { add_term(0, 0, BigInt(constant)); }  // NOLINT

  static BivariatePolynomial monomial(int a, int b, BigInt c = 1) {
    BivariatePolynomial p;
    p.add_term(a, b, std::move(c));
    return p;
  }
  static BivariatePolynomial first_var() { return monomial(1, 0); }
  static BivariatePolynomial second_var() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  int degree_first() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }
  int degree_second() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  void add_term(int a, int b, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a) {
    return BivariatePolynomial() - a;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
      }
    }
    return out;
  }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  BivariatePolynomial pow(unsigned n) const {
    BivariatePolynomial result(1), base = *this;
    while (n > 0) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n > 0) base *= base;
    }
    return result;
  }

  BigInt evaluate(const BigInt& first, const BigInt& second) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
      total += c * boost::multiprecision::pow(first, static_cast<unsigned>(e.first)) *
               boost::multiprecision::pow(second, static_cast<unsigned>(e.second));
    }
    return total;
  }

  /// Ring-homomorphic substitution of both symbols by elements of another
  /// polynomial ring.
  template <class Out>
  Out substitute(const Out& first, const Out& second) const {
    std::map<int, Out> first_pow, second_pow;
    auto power = [](std::map<int, Out>& cache, const Out& base, int k) -> const Out& {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, base.pow(static_cast<unsigned>(k))).first;
      return it->second;
    };
    Out out;
    for (const auto& [e, c] : terms_) {
      Out term = Out::monomial(0, 0, c);
      if (e.first > 0) term *= power(first_pow, first, e.first);
      if (e.second > 0) term *= power(second_pow, second, e.second);
      out += term;
    }
    return out;
  }

  /// Human-readable rendering, terms by descending exponents, e.g.
  /// "T^3 + 3*T^2*L - 2*T".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first_term) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first_term = false;
      std::string body;
      auto factor = [&](const char* sym, int k) {
        if (k == 0) return;
        if (!body.empty()) body += "*";
        body += sym;
        if (k > 1) body += "^" + std::to_string(k);
      };
      factor(Symbols::first, e.first);
      factor(Symbols::second, e.second);
      if (body.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += body;
      } else {
        out += mag.str() + "*" + body;
      }
    }
    return out;
  }

 private:
  TermMap terms_;
};

using KPolynomial = BivariatePolynomial<KSymbols>;
using HodgePolynomial = BivariatePolynomial<HodgeSymbols>;

/// 1 + L + ... + L^n (the class of projective n-space); zero for n < 0.
KPolynomial projective_class(int n);
/// L^a + ... + L^b, zero when a > b.
KPolynomial lefschetz_range(int a, int b);

/// Coefficient vector of a polynomial that only involves L (index = degree).
/// Throws InvalidArgument if T occurs.
std::vector<BigInt> to_univariate_l(const KPolynomial& p);
KPolynomial from_univariate_l(const std::vector<BigInt>& coeffs);

/// Exact division of univariate integer polynomials; throws DivisionFailure on
/// a nonzero remainder or a non-integral quotient coefficient.
std::vector<BigInt> divide_exact(std::vector<BigInt> numerator, const std::vector<BigInt>& divisor);

}  // namespace wonderful

#endif  // WONDERFUL_POLYNOMIAL_HPP
