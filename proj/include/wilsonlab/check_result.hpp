#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "wilsonlab/padic.hpp"

namespace wilsonlab {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

/// One side of a check: a residue, an exact rational (for identities that
/// hold in Q, or for tallies), or nothing (skipped checks).
using CheckValue = std::variant<std::monostate, TrackedResidue, ExactRational>;

/// Residues print as decimal strings, rationals as num/den.
std::string value_string(const CheckValue& v);

/// One verified congruence instance.
///
/// For residue checks the status is pass iff both sides agree modulo
/// p^modulus_exp. modulus_exp = 0 marks an exact identity in Q.
struct CongruenceCheckResult {
  std::string check_id;
  std::uint64_t p = 0;
  int modulus_exp = 0;
  CheckValue lhs;
  CheckValue rhs;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;

  static CongruenceCheckResult congruence(std::string id, std::uint64_t p, int k, TrackedResidue lhs,
                                          TrackedResidue rhs);
  static CongruenceCheckResult identity(std::string id, std::uint64_t p, ExactRational lhs, ExactRational rhs);
  static CongruenceCheckResult tally(std::string id, std::uint64_t p, int k, long passed, long tested,
                                     std::string first_failure);
  static CongruenceCheckResult skipped(std::string id, std::uint64_t p, int k, std::string reason);
  static CongruenceCheckResult failed(std::string id, std::uint64_t p, int k, std::string reason);

  bool passed() const { return status == CheckStatus::Pass; }
};

}  // namespace wilsonlab
