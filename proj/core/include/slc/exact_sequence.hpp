#pragma once

// Dimension bookkeeping for long exact sequences of finite-dimensional
// vector spaces 0 -> V_0 -> V_1 -> ... -> V_{n-1} -> 0.
//
// Exactness at V_i gives dim V_i = rank(f_{i-1}) + rank(f_i). Known
// dimensions, zero spaces and explicit rank facts (injective / surjective
// maps) are propagated to a fixed point. Anything still undetermined is
// reported as AmbiguousRank when asked for; nothing is guessed.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace slc {

class ExactSequence {
 public:
  /// Appends V_n. Returns its index.
  std::size_t add_term(std::string name, std::optional<long> dim = std::nullopt);

  /// f_i : V_i -> V_{i+1} is injective / surjective / has the given rank.
  void mark_injective(std::size_t map);
  void mark_surjective(std::size_t map);
  void set_rank(std::size_t map, long rank);

  /// Propagates constraints. Throws InconsistentSequence if a negative or
  /// oversized rank or a violated exactness equation appears.
  void solve();

  std::size_t size() const noexcept { return terms_.size(); }
  const std::string& name(std::size_t i) const { return terms_.at(i).name; }
  std::optional<long> dim(std::size_t i) const { return terms_.at(i).dim; }
  std::optional<long> rank(std::size_t map) const { return ranks_.at(map); }

  /// Dimension of V_i after solve(); throws AmbiguousRank if undetermined.
  long require_dim(std::size_t i) const;

  /// Sum (-1)^i dim V_i; requires every dimension to be known.
  long alternating_sum() const;

  bool fully_determined() const;

 private:
  struct Term {
    std::string name;
    std::optional<long> dim;
    bool injective_out = false;
    bool surjective_out = false;
  };
  std::vector<Term> terms_;
  // ranks_[i] is the rank of V_i -> V_{i+1}; the last one maps to 0.
  std::vector<std::optional<long>> ranks_;

  bool assign_dim(std::size_t i, long v);
  bool assign_rank(std::size_t map, long v);
};

}  // namespace slc
