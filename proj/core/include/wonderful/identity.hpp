#ifndef WONDERFUL_IDENTITY_HPP
#define WONDERFUL_IDENTITY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

enum class IdentityVariant {
  Exact,           // no indexing ambiguity
  SupportIndexed,  // sums run over polydiagonal supports (antichain nests)
  NestIndexed,     // sums run over all nests, as printed; diagnostic only
};

inline std::string_view variant_name(IdentityVariant v) {
  switch (v) {
    case IdentityVariant::Exact: return "exact";
    case IdentityVariant::SupportIndexed: return "support-indexed";
    case IdentityVariant::NestIndexed: return "nest-indexed";
  }
  return "unknown";
}

/// One evaluated identity lhs == rhs. `required` checks must hold; the
/// others are reported so that their failures stay visible.
template <class Poly>
struct IdentityCheck {
  std::string identity;
  IdentityVariant variant = IdentityVariant::Exact;
  std::string scope;  // "graph" or a nest in [[...],...] notation
  bool required = true;
  Poly lhs;
  Poly rhs;

  bool passed() const { return lhs == rhs; }
  Poly discrepancy() const { return rhs - lhs; }
};

template <class Poly>
struct IdentityReport {
  std::vector<IdentityCheck<Poly>> checks;

  bool required_passed() const {
    for (const auto& c : checks) {
      if (c.required && !c.passed()) return false;
    }
    return true;
  }
};

}  // namespace wonderful

#endif  // WONDERFUL_IDENTITY_HPP
