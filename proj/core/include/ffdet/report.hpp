#ifndef FFDET_REPORT_HPP
#define FFDET_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ffdet {

/// Closed enumeration of the claims this library verifies.
enum class ClaimId {
  theorem_1_1,
  corollary_1_1,
  lemma_2_1,
  lemma_2_2,
  lemma_2_3,
  lemma_2_4,
  sun_sp,
  sun_ap,
  carlitz_charpoly,
  remark_rational,
};

/// Serialization tag, e.g. "theorem_1_1".
std::string_view claim_tag(ClaimId id);

std::optional<ClaimId> claim_from_tag(std::string_view tag);

/// Outcome of one verification: the value the library computed, the value
/// the claim predicts (both canonically serialized), and whether they
/// agree.  `matched` is always exactly (computed == predicted).
struct VerificationReport {
  ClaimId claim = ClaimId::theorem_1_1;
  std::map<std::string, std::int64_t> params;
  std::string computed;
  std::string predicted;
  bool matched = false;
  std::int64_t elapsed_ms = 0;
};

/// Builds a report with matched derived from the two strings.
VerificationReport make_report(ClaimId claim,
                               std::map<std::string, std::int64_t> params,
                               std::string computed, std::string predicted,
                               std::int64_t elapsed_ms = 0);

/// A failed report for inputs outside a claim's hypotheses.  `computed`
/// is "precondition-failure: <reason>", `predicted` is empty, matched is
/// false.
VerificationReport precondition_failure(ClaimId claim,
                                        std::map<std::string, std::int64_t> params,
                                        const std::string& reason);

bool is_precondition_failure(const VerificationReport& report);

/// Canonical total order used to emit deterministic report streams:
/// claim tag, then params, then the remaining fields.
bool report_less(const VerificationReport& a, const VerificationReport& b);

}  // namespace ffdet

#endif  // FFDET_REPORT_HPP
