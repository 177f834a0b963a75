#ifndef ALGWATCH_FIELD_HPP
#define ALGWATCH_FIELD_HPP

#include <cstdint>
#include <span>
#include <string>

namespace algwatch {

/// Parameters of GF(2^n): payload bit-width and the irreducible reduction
/// polynomial, stored as an (n+1)-bit integer (bit n is the leading term).
///
/// n is capped at 20 so that dense 2^n enumerations stay tractable.
class FieldParams {
 public:
  static constexpr int kMaxBits = 20;

  FieldParams(int n, std::uint32_t reduction_poly);

  /// Field with the lexicographically smallest irreducible polynomial of
  /// degree n (x^4+x+1 for n=4, x^10+x^3+1 for n=10, ...).
  static FieldParams with_default_poly(int n);
  static std::uint32_t smallest_irreducible(int n);
  static bool is_irreducible(std::uint32_t poly);

  int n() const { return n_; }
  std::uint32_t reduction_poly() const { return poly_; }
  std::uint32_t size() const { return 1u << n_; }
  std::uint32_t mask() const { return size() - 1u; }

  /// Addition in GF(2^n) is bitwise XOR.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  /// Carry-less polynomial product reduced modulo the reduction polynomial.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.n_ == b.n_ && a.poly_ == b.poly_;
  }

 private:
  int n_;
  std::uint32_t poly_;
};

/// A value in [0, 2^n) bound to its field. Immutable once constructed; the
/// referenced FieldParams must outlive the element.
struct FieldElement {
  std::uint32_t value = 0;
  const FieldParams* field = nullptr;

  FieldElement() = default;
  FieldElement(std::uint32_t v, const FieldParams& f);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value == b.value;
  }
};

FieldElement gf_add(const FieldElement& a, const FieldElement& b);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);

/// Sum of gf_mul(coeffs[k], payloads[k]); lists must be non-empty and of
/// equal length, all over the same field.
FieldElement linear_combination(std::span<const FieldElement> coeffs,
                                std::span<const FieldElement> payloads);

/// A fixed-width bit vector (width <= 20 bits, LSB-first in `bits`).
struct Word {
  std::uint32_t bits = 0;
  int width = 0;

  friend bool operator==(const Word& a, const Word& b) {
    return a.bits == b.bits && a.width == b.width;
  }
};

/// Number of differing bit positions; widths must match.
int hamming(const Word& a, const Word& b);

std::string to_bit_string(const Word& w);

}  // namespace algwatch

#endif  // ALGWATCH_FIELD_HPP
