#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skillfence/alignment.hpp"
#include "skillfence/canonical.hpp"
#include "skillfence/errors.hpp"
#include "skillfence/phonetics.hpp"

namespace skillfence {

// Learned per-phoneme-pair substitution costs in [0,1].
//
// Costs come from aligning every alternate-pronunciation pair of the
// dictionary with Needleman-Wunsch (match +1, mismatch -1, gap -1) and
// counting, per mismatch column, how often each phoneme pair substitutes
// for one another:
//
//   sub_cost(a,b) = 1 - (SF(a,b) + SF(b,a)) / (F(a) + F(b))
//
// where F(x) is the number of occurrences of x across both sides of all
// alternate pairs and SF(a,b) the substitution count. Variant pairs are
// unordered, so a mismatch column increments both SF(a,b) and SF(b,a):
// SF is symmetric by construction, and a phoneme pair whose every
// occurrence substitutes gets cost 0 (fully interchangeable). Pairs never
// observed together keep the maximum cost 1. Insertions and deletions cost
// 1: there is no evidence stream for them here.
class CostMatrix {
 public:
  CostMatrix() = default;

  CostMatrix(std::vector<Phoneme> inventory, double indel)
      : inventory_(std::move(inventory)), indel_(indel) {
    std::sort(inventory_.begin(), inventory_.end());
    inventory_.erase(std::unique(inventory_.begin(), inventory_.end()),
                     inventory_.end());
    for (size_t i = 0; i < inventory_.size(); ++i) index_[inventory_[i]] = i;
    sub_.assign(inventory_.size() * inventory_.size(), 1.0);
    for (size_t i = 0; i < inventory_.size(); ++i) sub_[i * inventory_.size() + i] = 0.0;
  }

  const std::vector<Phoneme>& inventory() const { return inventory_; }
  double indel_cost() const { return indel_; }

  // Index of a phoneme in the inventory, or -1 when unknown.
  int index_of(const Phoneme& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : static_cast<int>(it->second);
  }

  double sub_cost(const Phoneme& a, const Phoneme& b) const {
    if (a == b) return 0.0;
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) return 1.0;
    return sub_at(static_cast<size_t>(ia), static_cast<size_t>(ib));
  }

  double sub_at(size_t ia, size_t ib) const {
    return sub_[ia * inventory_.size() + ib];
  }

  void set_sub(const Phoneme& a, const Phoneme& b, double cost) {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw ValidationError("phoneme not in inventory");
    sub_[static_cast<size_t>(ia) * inventory_.size() + static_cast<size_t>(ib)] = cost;
  }

  using FreqCounts = std::map<Phoneme, std::int64_t>;
  using SubCounts = std::map<std::pair<Phoneme, Phoneme>, std::int64_t>;

  const FreqCounts& occurrence_counts() const { return freq_; }
  const SubCounts& substitution_counts() const { return sub_counts_; }

  void set_counts(FreqCounts f, SubCounts sf) {
    freq_ = std::move(f);
    sub_counts_ = std::move(sf);
  }

  Json to_json() const {
    Json j;
    j["indel_cost"] = indel_;
    j["inventory"] = inventory_;
    Json costs = Json::object();
    for (size_t i = 0; i < inventory_.size(); ++i) {
      Json row = Json::object();
      for (size_t k = 0; k < inventory_.size(); ++k) {
        if (i == k) continue;
        double c = sub_at(i, k);
        if (c < 1.0) row[inventory_[k]] = c;  // default off-diagonal cost is 1
      }
      if (!row.empty()) costs[inventory_[i]] = std::move(row);
    }
    j["sub_cost"] = std::move(costs);
    Json f = Json::object();
    for (const auto& [p, n] : freq_) f[p] = n;
    j["counts"]["F"] = std::move(f);
    Json sf = Json::object();
    for (const auto& [pair, n] : sub_counts_) sf[pair.first + " " + pair.second] = n;
    j["counts"]["SF"] = std::move(sf);
    return j;
  }

  static CostMatrix from_json(const Json& j) {
    CostMatrix m(j.at("inventory").get<std::vector<Phoneme>>(),
                 j.at("indel_cost").get<double>());
    for (const auto& [a, row] : j.at("sub_cost").items())
      for (const auto& [b, cost] : row.items())
        m.set_sub(a, b, cost.get<double>());
    if (j.contains("counts")) {
      FreqCounts f;
      for (const auto& [p, n] : j.at("counts").at("F").items())
        f[p] = n.get<std::int64_t>();
      SubCounts sf;
      for (const auto& [key, n] : j.at("counts").at("SF").items()) {
        auto space = key.find(' ');
        sf[{key.substr(0, space), key.substr(space + 1)}] = n.get<std::int64_t>();
      }
      m.set_counts(std::move(f), std::move(sf));
    }
    return m;
  }

 private:
  std::vector<Phoneme> inventory_;
  std::unordered_map<Phoneme, size_t> index_;
  std::vector<double> sub_;
  double indel_ = 1.0;
  FreqCounts freq_;
  SubCounts sub_counts_;
};

inline CostMatrix learn_cost_matrix(const PronunciationDict& dict,
                                    const AlignmentParams& params = {}) {
  auto pairs = dict.alt_pairs();
  if (pairs.empty()) throw ValidationError("no alternate pronunciations");

  CostMatrix::FreqCounts freq;
  CostMatrix::SubCounts sub_counts;

  for (const auto& [first, second] : pairs) {
    for (const auto& p : first.phonemes) ++freq[p];
    for (const auto& p : second.phonemes) ++freq[p];

    Alignment aln = needleman_wunsch(first.phonemes, second.phonemes, params);
    for (const auto& col : aln.columns) {
      if (col.a_index < 0 || col.b_index < 0) continue;
      const Phoneme& a = first.phonemes[static_cast<size_t>(col.a_index)];
      const Phoneme& b = second.phonemes[static_cast<size_t>(col.b_index)];
      if (a == b) continue;
      ++sub_counts[{a, b}];
      ++sub_counts[{b, a}];
    }
  }

  CostMatrix matrix(dict.inventory(), 1.0);
  const auto& inv = matrix.inventory();
  for (size_t i = 0; i < inv.size(); ++i) {
    for (size_t k = i + 1; k < inv.size(); ++k) {
      auto f_it_a = freq.find(inv[i]);
      auto f_it_b = freq.find(inv[k]);
      std::int64_t fa = f_it_a == freq.end() ? 0 : f_it_a->second;
      std::int64_t fb = f_it_b == freq.end() ? 0 : f_it_b->second;
      double cost = 1.0;
      if (fa + fb > 0) {
        auto ab = sub_counts.find({inv[i], inv[k]});
        auto ba = sub_counts.find({inv[k], inv[i]});
        std::int64_t numer = (ab == sub_counts.end() ? 0 : ab->second) +
                             (ba == sub_counts.end() ? 0 : ba->second);
        cost = 1.0 - static_cast<double>(numer) / static_cast<double>(fa + fb);
      }
      cost = std::clamp(cost, 0.0, 1.0);
      matrix.set_sub(inv[i], inv[k], cost);
      matrix.set_sub(inv[k], inv[i], cost);
    }
  }
  matrix.set_counts(std::move(freq), std::move(sub_counts));
  return matrix;
}

}  // namespace skillfence
