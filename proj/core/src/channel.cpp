#include "algwatch/channel.hpp"

#include <stdexcept>

namespace algwatch {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kSeedSalt = 0x6A09E667F3BCC908ull;
constexpr std::uint64_t kStreamSalt = 0xBB67AE8584CAA73Bull;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

}  // namespace

Bsc::Bsc(double crossover) : p_(crossover) {
  if (!(crossover >= 0.0 && crossover <= 0.5)) {
    throw std::invalid_argument("BSC crossover must be in [0, 0.5]");
  }
}

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kSeedSalt)), counter_(0) {}

std::uint64_t Rng::next_u64() {
  counter_ += 1;
  return mix64(key_ + counter_ * kGamma);
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
  return next_double() < p;
}

std::uint32_t Rng::next_bits(int width) {
  if (width < 0 || width > 32) {
    throw std::invalid_argument("bit width must be in [0, 32]");
  }
  if (width == 0) return 0;
  return static_cast<std::uint32_t>(next_u64() >> (64 - width));
}

std::uint32_t Rng::next_nonzero_bits(int width) {
  if (width < 1) {
    throw std::invalid_argument("nonzero draw needs width >= 1");
  }
  while (true) {
    const std::uint32_t v = next_bits(width);
    if (v != 0) return v;
  }
}

Rng Rng::substream(std::uint64_t index) const {
  return Rng(FromKey{}, mix64(key_ ^ mix64(index + kStreamSalt)));
}

HashFn::HashFn(std::uint32_t a, std::uint32_t b, int delta)
    : a_(a), b_(b), delta_(delta) {
  if (delta < 0 || delta > FieldParams::kMaxBits) {
    throw std::invalid_argument("digest width must be in [0, 20]");
  }
  if (delta > 0) {
    if (a == 0 || a >= digest_space()) {
      throw std::invalid_argument("hash multiplier must be in [1, 2^delta)");
    }
    if (b >= digest_space()) {
      throw std::invalid_argument("hash offset must be in [0, 2^delta)");
    }
  }
}

HashFn HashFn::random_affine(int delta, Rng& rng) {
  if (delta == 0) return HashFn(1, 0, 0);
  const std::uint32_t a = rng.next_nonzero_bits(delta);
  const std::uint32_t b = rng.next_bits(delta);
  return HashFn(a, b, delta);
}

Word bsc_noise(int width, const Bsc& ch, Rng& rng) {
  std::uint32_t flips = 0;
  for (int i = 0; i < width; ++i) {
    if (rng.bernoulli(ch.crossover())) flips |= 1u << i;
  }
  return Word{flips, width};
}

Word bsc_transmit(const Word& word, const Bsc& ch, Rng& rng) {
  const Word e = bsc_noise(word.width, ch, rng);
  return Word{word.bits ^ e.bits, word.width};
}

double compose_bsc(double p1, double p2) {
  if (!(p1 >= 0.0 && p1 <= 0.5) || !(p2 >= 0.0 && p2 <= 0.5)) {
    throw std::invalid_argument("crossover probabilities must be in [0, 0.5]");
  }
  return p1 + p2 - p1 * p2;
}

HashPartition::HashPartition(const HashFn& h, int n) : h_(h), n_(n) {
  if (n < 1 || n > FieldParams::kMaxBits) {
    throw std::invalid_argument("partition width must be in [1, 20]");
  }
  classes_.resize(h.digest_space());
  const std::uint32_t space = 1u << n;
  for (std::uint32_t x = 0; x < space; ++x) {
    classes_[h.eval(x)].push_back(x);
  }
}

const std::vector<std::uint32_t>& HashPartition::class_of(
    std::uint32_t digest) const {
  if (digest >= classes_.size()) {
    throw std::out_of_range("digest outside the hash range");
  }
  return classes_[digest];
}

}  // namespace algwatch
