#include "ffdet/report.hpp"

#include <array>
#include <tuple>

namespace ffdet {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 10> kTags{{
    {ClaimId::theorem_1_1, "theorem_1_1"},
    {ClaimId::corollary_1_1, "corollary_1_1"},
    {ClaimId::lemma_2_1, "lemma_2_1"},
    {ClaimId::lemma_2_2, "lemma_2_2"},
    {ClaimId::lemma_2_3, "lemma_2_3"},
    {ClaimId::lemma_2_4, "lemma_2_4"},
    {ClaimId::sun_sp, "sun_sp"},
    {ClaimId::sun_ap, "sun_ap"},
    {ClaimId::carlitz_charpoly, "carlitz_charpoly"},
    {ClaimId::remark_rational, "remark_rational"},
}};

constexpr std::string_view kPreconditionPrefix = "precondition-failure: ";

}  // namespace

std::string_view claim_tag(ClaimId id) {
  for (const auto& [claim, tag] : kTags) {
    if (claim == id) return tag;
  }
  return "unknown";
}

std::optional<ClaimId> claim_from_tag(std::string_view tag) {
  for (const auto& [claim, t] : kTags) {
    if (t == tag) return claim;
  }
  return std::nullopt;
}

VerificationReport make_report(ClaimId claim,
                               std::map<std::string, std::int64_t> params,
                               std::string computed, std::string predicted,
                               std::int64_t elapsed_ms) {
  VerificationReport r;
  r.claim = claim;
  r.params = std::move(params);
  r.computed = std::move(computed);
  r.predicted = std::move(predicted);
  r.matched = r.computed == r.predicted;
  r.elapsed_ms = elapsed_ms;
  return r;
}

VerificationReport precondition_failure(ClaimId claim,
                                        std::map<std::string, std::int64_t> params,
                                        const std::string& reason) {
  VerificationReport r;
  r.claim = claim;
  r.params = std::move(params);
  r.computed = std::string(kPreconditionPrefix) + reason;
  r.predicted.clear();
  r.matched = false;
  r.elapsed_ms = 0;
  return r;
}

bool is_precondition_failure(const VerificationReport& report) {
  return report.computed.rfind(kPreconditionPrefix, 0) == 0;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  auto key = [](const VerificationReport& r) {
    return std::tie(r.params, r.computed, r.predicted);
  };
  std::string_view ta = claim_tag(a.claim);
  std::string_view tb = claim_tag(b.claim);
  if (ta != tb) return ta < tb;
  return key(a) < key(b);
}

}  // namespace ffdet
