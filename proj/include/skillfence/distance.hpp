#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "skillfence/cost_matrix.hpp"
#include "skillfence/errors.hpp"
#include "skillfence/phonetics.hpp"

namespace skillfence {

// Distances live on a 0-1000 scale: weighted edit distance divided by the
// longer sequence length, times this constant.
inline constexpr double kDistanceScale = 1000.0;

namespace detail {

// Integer-encoded phoneme sequence for the DP inner loop. Symbols outside
// the cost matrix inventory get fresh negative ids so equality still holds
// while every lookup against a known phoneme costs 1.
struct EncodedSeq {
  std::vector<int> ids;
};

class SeqEncoder {
 public:
  explicit SeqEncoder(const CostMatrix& costs) : costs_(costs) {}

  EncodedSeq encode(const std::vector<Phoneme>& seq) {
    EncodedSeq out;
    out.ids.reserve(seq.size());
    for (const auto& p : seq) {
      int id = costs_.index_of(p);
      if (id < 0) {
        auto [it, inserted] = unknown_.try_emplace(p, -1 - static_cast<int>(unknown_.size()));
        id = it->second;
      }
      out.ids.push_back(id);
    }
    return out;
  }

  double sub_cost(int a, int b) const {
    if (a == b) return 0.0;
    if (a < 0 || b < 0) return 1.0;
    return costs_.sub_at(static_cast<size_t>(a), static_cast<size_t>(b));
  }

  double indel_cost() const { return costs_.indel_cost(); }

 private:
  const CostMatrix& costs_;
  std::unordered_map<Phoneme, int> unknown_;
};

inline double weighted_edit_distance(const EncodedSeq& a, const EncodedSeq& b,
                                     const SeqEncoder& enc) {
  const size_t n = a.ids.size();
  const size_t m = b.ids.size();
  const double indel = enc.indel_cost();

  std::vector<double> prev(m + 1), curr(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j) * indel;
  for (size_t i = 1; i <= n; ++i) {
    curr[0] = static_cast<double>(i) * indel;
    for (size_t j = 1; j <= m; ++j) {
      double sub = prev[j - 1] + enc.sub_cost(a.ids[i - 1], b.ids[j - 1]);
      double del = prev[j] + indel;
      double ins = curr[j - 1] + indel;
      curr[j] = std::min(sub, std::min(del, ins));
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

}  // namespace detail

// Length-normalized weighted edit distance between two phoneme sequences,
// scaled to 0-1000. Symmetric, zero on identical sequences.
inline double phonetic_distance(const PhonemeSeq& a, const PhonemeSeq& b,
                                const CostMatrix& costs) {
  if (a.phonemes.empty() || b.phonemes.empty())
    throw ValidationError("phonetic_distance requires non-empty sequences");
  detail::SeqEncoder enc(costs);
  auto ea = enc.encode(a.phonemes);
  auto eb = enc.encode(b.phonemes);
  double wl = detail::weighted_edit_distance(ea, eb, enc);
  double len = static_cast<double>(std::max(a.phonemes.size(), b.phonemes.size()));
  return kDistanceScale * wl / len;
}

}  // namespace skillfence
