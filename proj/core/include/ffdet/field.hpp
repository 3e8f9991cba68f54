#ifndef FFDET_FIELD_HPP
#define FFDET_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ffdet {

/// Deterministic trial-division primality test.  Intended for desk-scale
/// inputs (roughly n < 10^6); correct for any nonnegative n.
bool is_prime(std::int64_t n);

/// b^e mod m for m > 0 and e >= 0.  Uses 128-bit intermediates, so any
/// int64 modulus is safe.
std::int64_t powmod_int(std::int64_t b, std::int64_t e, std::int64_t m);

/// Monic polynomial over F_p irreducible?  `poly` lists coefficients
/// constant term first; the leading coefficient must be 1 after reduction
/// mod p and the degree must be at least 1.  Uses the Frobenius criterion:
/// f of degree d is irreducible iff f divides T^{p^d} - T and
/// gcd(f, T^{p^{d/l}} - T) = 1 for every prime l dividing d.
bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p);

/// The first monic irreducible polynomial of degree r over F_p, where
/// candidates are ordered lexicographically by their coefficient vector
/// (c_0, ..., c_{r-1}), constant term first and compared first.
/// Deterministic: repeated calls return the same polynomial.
std::vector<std::int64_t> canonical_irreducible(std::int64_t p, int r);

class FieldElem;

/// An odd-characteristic finite field F_{p^r}, represented as
/// F_p[T]/(modulus).  Cheap to copy (shared immutable state).  Two
/// contexts compare equal iff they have the same p, r and modulus.
class FieldCtx {
 public:
  /// F_p for an odd prime p.
  static FieldCtx prime_field(std::int64_t p);

  /// F_{p^r} with the canonical modulus from canonical_irreducible(p, r).
  /// r = 1 yields the same field as prime_field(p).
  static FieldCtx extension_field(std::int64_t p, int r);

  /// F_{p^r} with an explicit modulus (validated: monic of degree r after
  /// reduction mod p, and irreducible).
  static FieldCtx extension_field(std::int64_t p, int r,
                                  const std::vector<std::int64_t>& modulus);

  std::int64_t p() const { return d_->p; }
  int r() const { return d_->r; }
  std::int64_t q() const { return d_->q; }

  /// Modulus coefficients, constant term first, length r+1, monic.
  const std::vector<std::int64_t>& modulus() const { return d_->modulus; }

  FieldElem zero() const;
  FieldElem one() const;

  /// Embeds k mod p as a constant.
  FieldElem from_int(std::int64_t k) const;

  /// Element with the given coefficient vector (length r, constant term
  /// first); coefficients are reduced mod p.
  FieldElem element(std::vector<std::int64_t> coeffs) const;

  /// Element at position `index` in the canonical order, 0 <= index < q.
  /// The order is lexicographic on coefficient vectors with the constant
  /// coefficient most significant; index 0 is zero.  For prime fields the
  /// nonzero elements in order are simply 1, 2, ..., p-1.
  FieldElem from_index(std::int64_t index) const;

  /// Inverse of from_index.
  std::int64_t index_of(const FieldElem& x) const;

  /// All q-1 nonzero elements in canonical order.
  std::vector<FieldElem> nonzero_elements() const;

  bool operator==(const FieldCtx& other) const;
  bool operator!=(const FieldCtx& other) const { return !(*this == other); }

 private:
  struct Data {
    std::int64_t p;
    int r;
    std::int64_t q;
    std::vector<std::int64_t> modulus;  // constant first, length r+1, monic
  };

  explicit FieldCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FieldCtx make(std::int64_t p, int r, std::vector<std::int64_t> modulus);

  std::shared_ptr<const Data> d_;
  friend class FieldElem;
};

/// Element of a FieldCtx.  Value type; stores its coefficient vector
/// (length r, reduced residues) plus a handle to the field.  Arithmetic
/// between elements of different fields throws std::invalid_argument.
class FieldElem {
 public:
  FieldElem() = default;  // unusable until assigned from a real element

  FieldCtx context() const;
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool is_zero() const;

  /// True when every coefficient above the constant term is zero.
  bool in_prime_subfield() const;

  /// The constant coefficient as a least nonnegative residue.  Throws
  /// unless in_prime_subfield().
  std::int64_t residue() const;

  /// Canonical serialization: the residue when the element lies in the
  /// prime subfield, otherwise the coefficients joined with commas,
  /// constant term first.
  std::string str() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;

  /// x / y = x * y^{-1}; throws std::domain_error when y is zero.
  FieldElem operator/(const FieldElem& o) const;

  /// Multiplicative inverse via the extended Euclidean algorithm.
  /// Throws std::domain_error on zero.
  FieldElem inv() const;

  /// x^e for e >= 0 by square-and-multiply; pow(0, 0) = 1.
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  friend class FieldCtx;
  FieldElem(std::shared_ptr<const FieldCtx::Data> d, std::vector<std::int64_t> c)
      : d_(std::move(d)), c_(std::move(c)) {}

  void require_valid() const;
  static const FieldCtx::Data& common_data(const FieldElem& a, const FieldElem& b);

  std::shared_ptr<const FieldCtx::Data> d_;
  std::vector<std::int64_t> c_;
};

/// True iff x is a square in its field: x = 0 or x^{(q-1)/2} = 1.
bool is_square(const FieldElem& x);

}  // namespace ffdet

#endif  // FFDET_FIELD_HPP
