#include "qplane/order_result.hpp"

namespace qplane {

std::string to_string(InfinityReason r) {
  switch (r) {
    case InfinityReason::NonRootOfUnity: return "NonRootOfUnity";
    case InfinityReason::TypeRule: return "TypeRule";
    case InfinityReason::AdditiveUnipotent: return "AdditiveUnipotent";
  }
  return "?";
}

std::string to_string(const OrderResult& r) {
  switch (r.kind) {
    case OrderResult::Kind::Exact: return "Exact(" + std::to_string(r.value) + ")";
    case OrderResult::Kind::CertifiedInfinite: return "CertifiedInfinite(" + to_string(r.reason) + ")";
    case OrderResult::Kind::Unknown: return "Unknown(" + std::to_string(r.value) + ")";
  }
  return "?";
}

}  // namespace qplane
