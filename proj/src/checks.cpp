#include "wilsonlab/check_result.hpp"

#include <utility>

namespace wilsonlab {

std::string value_string(const CheckValue& v) {
  if (const auto* r = std::get_if<TrackedResidue>(&v)) return r->residue().get_str();
  if (const auto* q = std::get_if<ExactRational>(&v)) return q->get_str();
  return "";
}

CongruenceCheckResult CongruenceCheckResult::congruence(std::string id, std::uint64_t p, int k, TrackedResidue lhs,
                                                        TrackedResidue rhs) {
  CongruenceCheckResult out;
  out.check_id = std::move(id);
  out.p = p;
  out.modulus_exp = k;
  const bool ok = agree_at(lhs, rhs, k);
  if (!ok && (lhs.precision() < k || rhs.precision() < k)) {
    out.reason = "insufficient precision: lhs " + std::to_string(lhs.precision()) + ", rhs " +
                 std::to_string(rhs.precision());
  }
  // Report both sides at the stated modulus when they are known that far.
  out.lhs = lhs.precision() >= k ? lhs.truncated(k) : lhs;
  out.rhs = rhs.precision() >= k ? rhs.truncated(k) : rhs;
  out.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

CongruenceCheckResult CongruenceCheckResult::identity(std::string id, std::uint64_t p, ExactRational lhs,
                                                      ExactRational rhs) {
  CongruenceCheckResult out;
  out.check_id = std::move(id);
  out.p = p;
  out.modulus_exp = 0;
  out.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  return out;
}

CongruenceCheckResult CongruenceCheckResult::tally(std::string id, std::uint64_t p, int k, long passed, long tested,
                                                   std::string first_failure) {
  CongruenceCheckResult out;
  out.check_id = std::move(id);
  out.p = p;
  out.modulus_exp = k;
  out.lhs = ExactRational(passed);
  out.rhs = ExactRational(tested);
  out.status = passed == tested ? CheckStatus::Pass : CheckStatus::Fail;
  out.reason = std::move(first_failure);
  return out;
}

CongruenceCheckResult CongruenceCheckResult::skipped(std::string id, std::uint64_t p, int k, std::string reason) {
  CongruenceCheckResult out;
  out.check_id = std::move(id);
  out.p = p;
  out.modulus_exp = k;
  out.status = CheckStatus::Skipped;
  out.reason = std::move(reason);
  return out;
}

CongruenceCheckResult CongruenceCheckResult::failed(std::string id, std::uint64_t p, int k, std::string reason) {
  CongruenceCheckResult out = skipped(std::move(id), p, k, std::move(reason));
  out.status = CheckStatus::Fail;
  return out;
}

}  // namespace wilsonlab
