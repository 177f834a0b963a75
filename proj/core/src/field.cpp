#include "algwatch/field.hpp"

#include <bit>
#include <stdexcept>

namespace algwatch {

namespace {

int poly_degree(std::uint64_t p) {
  return 63 - std::countl_zero(p);
}

// Remainder of carry-less division of a by mod (mod != 0).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = poly_degree(mod);
  while (a != 0 && poly_degree(a) >= dm) {
    a ^= mod << (poly_degree(a) - dm);
  }
  return a;
}

}  // namespace

bool FieldParams::is_irreducible(std::uint32_t poly) {
  const int n = poly_degree(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  if ((poly & 1u) == 0) return false;  // divisible by x
  // Trial division by every polynomial of degree 1..n/2. A composite of
  // degree n always has a factor in that range.
  for (std::uint32_t q = 2; poly_degree(q) <= n / 2; ++q) {
    if (poly_mod(poly, q) == 0) return false;
  }
  return true;
}

std::uint32_t FieldParams::smallest_irreducible(int n) {
  if (n < 1 || n > kMaxBits) {
    throw std::invalid_argument("field width must be in [1, 20]");
  }
  if (n == 1) return 0b11;  // x + 1
  for (std::uint32_t c = (1u << n) + 1; c < (1u << (n + 1)); c += 2) {
    if (is_irreducible(c)) return c;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldParams::FieldParams(int n, std::uint32_t reduction_poly)
    : n_(n), poly_(reduction_poly) {
  if (n < 1 || n > kMaxBits) {
    throw std::invalid_argument("field width must be in [1, 20]");
  }
  if (poly_degree(reduction_poly) != n) {
    throw std::invalid_argument("reduction polynomial degree must equal n");
  }
  if (!is_irreducible(reduction_poly)) {
    throw std::invalid_argument("reduction polynomial is reducible");
  }
}

FieldParams FieldParams::with_default_poly(int n) {
  return FieldParams(n, smallest_irreducible(n));
}

std::uint32_t FieldParams::mul(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t top = 1u << n_;
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly_;
  }
  return acc;
}

FieldElement::FieldElement(std::uint32_t v, const FieldParams& f)
    : value(v), field(&f) {
  if (v >= f.size()) {
    throw std::invalid_argument("field element value out of range");
  }
}

namespace {

const FieldParams& require_same_field(const FieldElement& a,
                                      const FieldElement& b) {
  if (a.field == nullptr || b.field == nullptr) {
    throw std::invalid_argument("field element is unbound");
  }
  if (a.field != b.field && !(*a.field == *b.field)) {
    throw std::invalid_argument("field parameter mismatch");
  }
  return *a.field;
}

}  // namespace

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
  const FieldParams& f = require_same_field(a, b);
  return FieldElement(f.add(a.value, b.value), f);
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
  const FieldParams& f = require_same_field(a, b);
  return FieldElement(f.mul(a.value, b.value), f);
}

FieldElement linear_combination(std::span<const FieldElement> coeffs,
                                std::span<const FieldElement> payloads) {
  if (coeffs.empty() || coeffs.size() != payloads.size()) {
    throw std::invalid_argument(
        "coefficient and payload lists must be non-empty and equal length");
  }
  FieldElement acc = gf_mul(coeffs[0], payloads[0]);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    acc = gf_add(acc, gf_mul(coeffs[k], payloads[k]));
  }
  return acc;
}

int hamming(const Word& a, const Word& b) {
  if (a.width != b.width) {
    throw std::invalid_argument("hamming distance needs equal widths");
  }
  return std::popcount(a.bits ^ b.bits);
}

std::string to_bit_string(const Word& w) {
  std::string s(static_cast<std::size_t>(w.width), '0');
  for (int i = 0; i < w.width; ++i) {
    if (w.bits >> (w.width - 1 - i) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

}  // namespace algwatch
