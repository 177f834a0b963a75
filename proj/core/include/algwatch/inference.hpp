#ifndef ALGWATCH_INFERENCE_HPP
#define ALGWATCH_INFERENCE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "algwatch/channel.hpp"
#include "algwatch/field.hpp"

namespace algwatch {

/// Posterior over the codewords a neighbor may have sent, given the noisy
/// overheard word and the (error-free) digest of the true payload: the one
/// column slice of the transition matrix that a trial actually needs.
///
/// Every stored codeword y satisfies hash(y) == digest; probabilities are
/// strictly positive and sum to 1. Entries are sorted by codeword.
struct CandidateSet {
  int source_index = 0;
  Word observed;
  std::uint32_t digest = 0;
  std::vector<std::pair<std::uint32_t, double>> entries;
};

/// Candidate posterior for one overheard transmission. Weights are
/// p^d * (1-p)^(n-d) over the digest class, normalized. A noiseless
/// channel yields the point mass on `observed`, which must then carry the
/// claimed digest.
CandidateSet candidate_set(const Word& observed, std::uint32_t digest,
                           const HashPartition& classes, const Bsc& ch,
                           int source_index = 0);
/// Convenience overload that enumerates the digest class on the fly.
CandidateSet candidate_set(const Word& observed, std::uint32_t digest,
                           const HashFn& h, const Bsc& ch,
                           int source_index = 0);

/// Aggregate probability per reachable partial-combination state of one
/// trellis layer. States with weight exactly zero are never stored, so the
/// stored support *is* the set of inferred candidates. Sorted by state.
struct LayerWeights {
  int layer_index = 0;  // 1-based
  std::vector<std::pair<std::uint32_t, double>> weights;

  double weight_of(std::uint32_t state) const;
};

/// The m-layer inference trellis: layer i holds the distribution of the
/// partial combination over sources 1..i. Layer 1 is the point mass on
/// coeffs[0] * own_payload (the checker knows its own payload exactly).
struct Trellis {
  std::vector<LayerWeights> layers;
  std::vector<FieldElement> coeffs;
  FieldElement own_payload;
};

/// One coefficient/candidate-set pair for a neighbor the checker overhears.
struct TrellisSource {
  FieldElement coeff;
  CandidateSet candidates;
};

/// Builds all layers, folding each neighbor's candidate set into the
/// running combination. Coefficients must be nonzero (the state update
/// must stay injective in the candidate) and share one field.
Trellis build_trellis(const FieldElement& own_coeff,
                      const FieldElement& own_payload,
                      std::span<const TrellisSource> others);

/// Final layer of the trellis, i.e. the inferred distribution over valid
/// relay outputs. Throws if the trellis is empty or drifted off
/// normalization.
const LayerWeights& forward_pass(const Trellis& t);

/// Outcome of one watchdog check.
struct Verdict {
  double p_star = 0.0;
  std::size_t matched_count = 0;
  double threshold = 0.0;
  bool flagged = false;
};

/// Consistency probability of the overheard relay transmission given the
/// inferred combinations: p* = sum_s w(s) * Tinv(s, observed), where Tinv
/// renormalizes the channel kernel over the relay's digest class.
/// matched_count counts inferred states whose hash equals the relay digest.
Verdict compute_p_star(const LayerWeights& final_layer,
                       const Word& relay_observed, std::uint32_t relay_digest,
                       const HashPartition& classes, const Bsc& relay_ch);
Verdict compute_p_star(const LayerWeights& final_layer,
                       const Word& relay_observed, std::uint32_t relay_digest,
                       const HashFn& h, const Bsc& relay_ch);

/// Applies the threshold rule: flagged iff p* <= threshold (inclusive).
Verdict decide(Verdict v, double threshold);

}  // namespace algwatch

#endif  // ALGWATCH_INFERENCE_HPP
