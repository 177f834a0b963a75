#include "algwatch/inference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace algwatch {

namespace {

// kernel[k] = p^k * (1-p)^(n-k): probability of a specific n-bit error
// pattern of weight k. No underflow for n <= 20.
std::vector<double> bsc_kernel(double p, int n) {
  std::vector<double> kernel(static_cast<std::size_t>(n) + 1);
  kernel[0] = 1.0;
  for (int k = 0; k < n; ++k) kernel[0] *= 1.0 - p;
  const double ratio = p / (1.0 - p);
  for (int k = 1; k <= n; ++k) kernel[k] = kernel[k - 1] * ratio;
  return kernel;
}

}  // namespace

CandidateSet candidate_set(const Word& observed, std::uint32_t digest,
                           const HashPartition& classes, const Bsc& ch,
                           int source_index) {
  const int n = classes.n();
  if (observed.width != n) {
    throw std::invalid_argument("observed word width differs from partition");
  }
  CandidateSet out;
  out.source_index = source_index;
  out.observed = observed;
  out.digest = digest;

  const double p = ch.crossover();
  if (p == 0.0) {
    if (classes.hash().eval(observed.bits) != digest) {
      throw std::invalid_argument(
          "noiselessly observed word contradicts the claimed digest");
    }
    out.entries.emplace_back(observed.bits, 1.0);
    return out;
  }

  const auto& members = classes.class_of(digest);
  if (members.empty()) {
    throw std::invalid_argument("digest class is empty");
  }
  const auto kernel = bsc_kernel(p, n);
  out.entries.reserve(members.size());
  double total = 0.0;
  for (const std::uint32_t y : members) {
    const double w = kernel[static_cast<std::size_t>(
        std::popcount(y ^ observed.bits))];
    out.entries.emplace_back(y, w);
    total += w;
  }
  for (auto& [y, w] : out.entries) w /= total;
  return out;
}

CandidateSet candidate_set(const Word& observed, std::uint32_t digest,
                           const HashFn& h, const Bsc& ch, int source_index) {
  return candidate_set(observed, digest, HashPartition(h, observed.width), ch,
                       source_index);
}

double LayerWeights::weight_of(std::uint32_t state) const {
  const auto it = std::lower_bound(
      weights.begin(), weights.end(), state,
      [](const auto& entry, std::uint32_t s) { return entry.first < s; });
  if (it == weights.end() || it->first != state) return 0.0;
  return it->second;
}

Trellis build_trellis(const FieldElement& own_coeff,
                      const FieldElement& own_payload,
                      std::span<const TrellisSource> others) {
  if (own_coeff.field == nullptr || own_payload.field == nullptr) {
    throw std::invalid_argument("field element is unbound");
  }
  const FieldParams& f = *own_coeff.field;
  if (!(*own_payload.field == f)) {
    throw std::invalid_argument("field parameter mismatch");
  }
  if (own_coeff.value == 0) {
    throw std::invalid_argument("coding coefficients must be nonzero");
  }

  Trellis t;
  t.own_payload = own_payload;
  t.coeffs.push_back(own_coeff);
  t.layers.push_back(LayerWeights{
      1, {{f.mul(own_coeff.value, own_payload.value), 1.0}}});

  // Sparse accumulator: dense scratch indexed by state, plus the list of
  // touched states. All contributions are positive, so "first touch" is
  // exactly scratch[s] == 0.
  std::vector<double> scratch(f.size(), 0.0);
  std::vector<std::uint32_t> touched;
  std::vector<std::pair<std::uint32_t, double>> scaled;

  for (const TrellisSource& src : others) {
    if (src.coeff.field == nullptr || !(*src.coeff.field == f)) {
      throw std::invalid_argument("field parameter mismatch");
    }
    if (src.coeff.value == 0) {
      throw std::invalid_argument("coding coefficients must be nonzero");
    }
    if (src.candidates.entries.empty()) {
      throw std::invalid_argument("candidate set is empty");
    }

    scaled.clear();
    scaled.reserve(src.candidates.entries.size());
    for (const auto& [y, q] : src.candidates.entries) {
      scaled.emplace_back(f.mul(src.coeff.value, y), q);
    }

    touched.clear();
    for (const auto& [state, w] : t.layers.back().weights) {
      for (const auto& [ys, q] : scaled) {
        const std::uint32_t next = state ^ ys;
        if (scratch[next] == 0.0) touched.push_back(next);
        scratch[next] += w * q;
      }
    }
    std::sort(touched.begin(), touched.end());

    LayerWeights layer;
    layer.layer_index = t.layers.back().layer_index + 1;
    layer.weights.reserve(touched.size());
    for (const std::uint32_t s : touched) {
      layer.weights.emplace_back(s, scratch[s]);
      scratch[s] = 0.0;
    }
    t.coeffs.push_back(src.coeff);
    t.layers.push_back(std::move(layer));
  }
  return t;
}

const LayerWeights& forward_pass(const Trellis& t) {
  if (t.layers.empty()) {
    throw std::invalid_argument("trellis has no layers");
  }
  const LayerWeights& last = t.layers.back();
  double total = 0.0;
  for (const auto& [s, w] : last.weights) total += w;
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::logic_error("final layer drifted off normalization");
  }
  return last;
}

Verdict compute_p_star(const LayerWeights& final_layer,
                       const Word& relay_observed, std::uint32_t relay_digest,
                       const HashPartition& classes, const Bsc& relay_ch) {
  const int n = classes.n();
  if (relay_observed.width != n) {
    throw std::invalid_argument("observed word width differs from partition");
  }
  const HashFn& h = classes.hash();

  Verdict v;
  for (const auto& [s, w] : final_layer.weights) {
    (void)w;
    if (h.eval(s) == relay_digest) v.matched_count += 1;
  }

  const double p = relay_ch.crossover();
  if (p == 0.0) {
    // Point-mass inverse: the only word the relay channel can deliver is
    // the transmitted one.
    v.p_star = h.eval(relay_observed.bits) == relay_digest
                   ? final_layer.weight_of(relay_observed.bits)
                   : 0.0;
  } else {
    const auto& members = classes.class_of(relay_digest);
    if (members.empty()) {
      throw std::invalid_argument("digest class is empty");
    }
    const auto kernel = bsc_kernel(p, n);
    double normalizer = 0.0;
    for (const std::uint32_t y : members) {
      normalizer += kernel[static_cast<std::size_t>(
          std::popcount(y ^ relay_observed.bits))];
    }
    double num = 0.0;
    for (const auto& [s, w] : final_layer.weights) {
      if (h.eval(s) != relay_digest) continue;
      num += w * kernel[static_cast<std::size_t>(
                     std::popcount(s ^ relay_observed.bits))];
    }
    v.p_star = num / normalizer;
  }
  v.threshold = 0.0;
  v.flagged = v.p_star <= v.threshold;
  return v;
}

Verdict compute_p_star(const LayerWeights& final_layer,
                       const Word& relay_observed, std::uint32_t relay_digest,
                       const HashFn& h, const Bsc& relay_ch) {
  return compute_p_star(final_layer, relay_observed, relay_digest,
                        HashPartition(h, relay_observed.width), relay_ch);
}

Verdict decide(Verdict v, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must be in [0, 1]");
  }
  v.threshold = threshold;
  v.flagged = v.p_star <= threshold;
  return v;
}

}  // namespace algwatch
