#ifndef FFDET_MATRICES_HPP
#define FFDET_MATRICES_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "ffdet/field.hpp"
#include "ffdet/linalg.hpp"
#include "ffdet/poly.hpp"
#include "ffdet/report.hpp"

namespace ffdet {

/// (p, r) with q = p^r, when q is a prime power; nullopt otherwise.
std::optional<std::pair<std::int64_t, int>> prime_power_decompose(std::int64_t q);

/// The (q-1)x(q-1) matrix [1 / (a_i^2 - a_i a_j + a_j^2)] over F_q, where
/// a_1, ..., a_{q-1} are the nonzero elements in canonical order.  The
/// denominators never vanish when q ≡ 2 (mod 3) (T^2+T+1 has no root);
/// other q are rejected with std::invalid_argument.
SquareMatrix build_tq(const FieldCtx& ctx);

/// The rational counterpart for a prime p ≡ 2 (mod 3): the (p-1)x(p-1)
/// matrix [1 / (i^2 - i*j + j^2)] with integer indices 1 <= i, j <= p-1.
RationalMatrix build_tp_rational(std::int64_t p);

/// Predicted determinant (-1)^{(q+1)/2} * 2^{(q-2)/3} as a least
/// nonnegative residue mod p.  Requires q an odd prime power ≡ 2 (mod 3)
/// with p >= 5.
std::int64_t predicted_det_tq(std::int64_t q);

/// Compares det(build_tq) with predicted_det_tq; the determinant must
/// also lie in the prime subfield (the canonical serialization makes a
/// value outside it fail the comparison).  Invalid q yields a
/// precondition-failure report.
VerificationReport check_theorem(std::int64_t q);
VerificationReport check_theorem(const FieldCtx& ctx);

/// For a prime p ≡ 2 (mod 3): with d = det T_p as an integer residue,
/// checks legendre(2d, p) = +1 and legendre(d, p) = legendre(2, p).
VerificationReport check_corollary(std::int64_t p);

/// Four independently computed links of the determinant evaluation, each
/// compared against its other route:
///   a) det T_q versus (-1)^{(q-1)/2} * det[h(a_i/a_j)];
///   b) det[h(a_i/a_j)] versus the cauchy_like_det closed form with
///      x_i = a_i, y_j = 1/a_j;
///   c) prod_{k=2}^{q-2} chi3_bracket(k) versus (-2)^{(q-2)/3} in F_p
///      (including the count of k ≡ 2 (mod 3) being exactly (q-2)/3);
///   d) prod_{i<j} (a_j - a_i)(1/a_j - 1/a_i) versus 1.
VerificationReport theorem_assembly_check(std::int64_t q);
VerificationReport theorem_assembly_check(const FieldCtx& ctx);

/// The ((p-1)/2) x ((p-1)/2) matrix [legendre(i^2 + j^2, p)] for an odd
/// prime p, entries in {-1, 0, +1}.
IntMatrix build_sp(std::int64_t p);

/// Checks that -det S_p is a quadratic residue or zero mod p.  The raw
/// Legendre value is recorded in params["legendre"] (0 passes but is
/// recorded distinctly from +1).
VerificationReport check_sun_sp(std::int64_t p);

/// The ((p-1)/2) x ((p-1)/2) rational matrix [1 / (i^2 + j^2)] for a
/// prime p ≡ 3 (mod 4).
RationalMatrix build_ap_rational(std::int64_t p);

/// Checks that 2 * det A_p reduces mod p to a quadratic residue or zero,
/// after asserting that the reduced denominator of det A_p is not
/// divisible by p.
VerificationReport check_sun_ap(std::int64_t p);

/// The (p-1)x(p-1) integer matrix [lambda + legendre(i - j, p)] for an
/// odd prime p.
IntMatrix build_cp(std::int64_t p, std::int64_t lambda);

/// Computes the characteristic polynomial of build_cp(p, lambda) exactly
/// and compares it against both readings of the closed form
///   (t^2 - (-1)^{(p-1)/2} p)^{(p-3)/2} * (last factor),
/// where the last factor is either t^2 - (p-1)lambda - (-1)^{(p-1)/2}
/// (the "literal" reading, no t in the lambda term) or
/// t^2 - (p-1)lambda t - (-1)^{(p-1)/2} (the "linear" reading).
/// `computed` lists which readings matched; `predicted` is derived from
/// the trace: the coefficient of t^{n-1} must be -(p-1)lambda, so the
/// literal reading can only match when lambda = 0 (where both coincide).
/// Requires p >= 5.
VerificationReport check_carlitz(std::int64_t p, std::int64_t lambda);

/// Exact rational determinant of build_tp_rational(p) against the two
/// frozen reference fractions; defined for p = 5 and p = 11 only.
VerificationReport check_remark_rational(std::int64_t p);

/// Randomized check of the cauchy_like_det closed form against the direct
/// determinant over F_p: `trials` seeded instances with 1 <= n <= n_max.
VerificationReport check_lemma22_field(std::int64_t p, int n_max, int trials,
                                       std::uint64_t seed);

/// The same over the rationals.
VerificationReport check_lemma22_rational(int n_max, int trials, std::uint64_t seed);

/// Exhaustive check of lerch_sign against the brute-force permutation
/// sign for one modulus m: every a in [1, m] coprime to m.
VerificationReport check_lemma23(std::int64_t m);

/// sigma_inverse_sign formula route versus brute-force route on F_{p^r}.
VerificationReport check_lemma24(const FieldCtx& ctx);

}  // namespace ffdet

#endif  // FFDET_MATRICES_HPP
