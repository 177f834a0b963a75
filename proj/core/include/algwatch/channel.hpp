#ifndef ALGWATCH_CHANNEL_HPP
#define ALGWATCH_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "algwatch/field.hpp"

namespace algwatch {

/// Binary symmetric channel with crossover probability in [0, 0.5].
class Bsc {
 public:
  explicit Bsc(double crossover);
  double crossover() const { return p_; }

 private:
  double p_;
};

/// Counter-based pseudo-random generator. A seed fully determines the
/// stream, and substream(i) derives an independently keyed stream, so
/// per-trial randomness is order-independent and replayable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform double in [0, 1), 53-bit resolution.
  double next_double();
  bool bernoulli(double p);
  /// Uniform value in [0, 2^width); width in [0, 32].
  std::uint32_t next_bits(int width);
  /// Uniform value in [1, 2^width); width >= 1.
  std::uint32_t next_nonzero_bits(int width);

  /// Independent stream keyed by (this stream, index).
  Rng substream(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }

 private:
  struct FromKey {};
  Rng(FromKey, std::uint64_t key) : key_(key), counter_(0) {}

  std::uint64_t key_;
  std::uint64_t counter_;
};

/// The affine digest h(x) = (a*x + b) mod 2^delta over ordinary integers.
/// delta = 0 is the empty digest: every input collides.
class HashFn {
 public:
  HashFn(std::uint32_t a, std::uint32_t b, int delta);

  /// a drawn uniformly from [1, 2^delta), b from [0, 2^delta).
  static HashFn random_affine(int delta, Rng& rng);

  std::uint32_t eval(std::uint32_t x) const {
    if (delta_ == 0) return 0;
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a_) * x + b_) & (digest_space() - 1));
  }

  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  int delta() const { return delta_; }
  std::uint32_t digest_space() const { return 1u << delta_; }

 private:
  std::uint32_t a_;
  std::uint32_t b_;
  int delta_;
};

inline std::uint32_t hash_eval(const HashFn& h, std::uint32_t x) {
  return h.eval(x);
}

/// Flip pattern of width bits, each set with probability ch.crossover().
Word bsc_noise(int width, const Bsc& ch, Rng& rng);

/// Transmit word over the channel: every bit flips independently.
Word bsc_transmit(const Word& word, const Bsc& ch, Rng& rng);

/// Crossover probability seen through two cascaded BSCs:
/// p1 + p2 - p1*p2.
double compose_bsc(double p1, double p2);

/// The partition of {0,1}^n into digest classes of a hash function,
/// enumerated once (cost 2^n) and reused across trials. Classes are not
/// assumed uniform: even multipliers produce unequal (possibly empty)
/// classes and the table reflects that.
class HashPartition {
 public:
  HashPartition(const HashFn& h, int n);

  const std::vector<std::uint32_t>& class_of(std::uint32_t digest) const;
  const HashFn& hash() const { return h_; }
  int n() const { return n_; }
  std::size_t class_count() const { return classes_.size(); }

 private:
  HashFn h_;
  int n_;
  std::vector<std::vector<std::uint32_t>> classes_;
};

}  // namespace algwatch

#endif  // ALGWATCH_CHANNEL_HPP
