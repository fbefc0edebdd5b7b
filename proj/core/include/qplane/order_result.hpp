#pragma once

#include <string>
#include <ostream>

namespace qplane {

enum class InfinityReason { NonRootOfUnity, TypeRule, AdditiveUnipotent };

// Three-way answer for automorphism and point orders: an exact value, a
// certificate that the order is infinite, or "not decided within cap".
struct OrderResult {
  enum class Kind { Exact, CertifiedInfinite, Unknown };

  Kind kind = Kind::Unknown;
  long value = 0;  // the order for Exact, the cap for Unknown
  InfinityReason reason = InfinityReason::NonRootOfUnity;

  static OrderResult exact(long n) { return {Kind::Exact, n, InfinityReason::NonRootOfUnity}; }
  static OrderResult infinite(InfinityReason r) { return {Kind::CertifiedInfinite, 0, r}; }
  static OrderResult unknown(long cap) { return {Kind::Unknown, cap, InfinityReason::NonRootOfUnity}; }

  bool is_exact() const { return kind == Kind::Exact; }
  bool is_infinite() const { return kind == Kind::CertifiedInfinite; }
  bool is_unknown() const { return kind == Kind::Unknown; }

  friend bool operator==(const OrderResult& a, const OrderResult& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::CertifiedInfinite) return a.reason == b.reason;
    return a.value == b.value;
  }
};

std::string to_string(InfinityReason r);
std::string to_string(const OrderResult& r);  // "Exact(2)", "CertifiedInfinite(TypeRule)", "Unknown(60)"

inline std::ostream& operator<<(std::ostream& os, const OrderResult& r) { return os << to_string(r); }

}  // namespace qplane
