#include "slc/exact_sequence.hpp"

#include <algorithm>

#include "slc/error.hpp"

namespace slc {

std::size_t ExactSequence::add_term(std::string name, std::optional<long> dim) {
  if (dim && *dim < 0) {
    throw Error(ErrorCode::InconsistentSequence, "negative dimension for " + name);
  }
  terms_.push_back({std::move(name), dim});
  ranks_.emplace_back();
  return terms_.size() - 1;
}

void ExactSequence::mark_injective(std::size_t map) { terms_.at(map).injective_out = true; }
void ExactSequence::mark_surjective(std::size_t map) { terms_.at(map).surjective_out = true; }

void ExactSequence::set_rank(std::size_t map, long rank) {
  (void)ranks_.at(map);
  assign_rank(map, rank);
}

bool ExactSequence::assign_dim(std::size_t i, long v) {
  auto& d = terms_[i].dim;
  if (v < 0) throw Error(ErrorCode::InconsistentSequence, "negative dimension for " + terms_[i].name);
  if (d) {
    if (*d != v) {
      throw Error(ErrorCode::InconsistentSequence,
                  "conflicting dimensions for " + terms_[i].name + ": " + std::to_string(*d) +
                      " vs " + std::to_string(v));
    }
    return false;
  }
  d = v;
  return true;
}

bool ExactSequence::assign_rank(std::size_t map, long v) {
  auto& r = ranks_[map];
  if (v < 0) {
    throw Error(ErrorCode::InconsistentSequence, "negative rank out of " + terms_[map].name);
  }
  if (r) {
    if (*r != v) {
      throw Error(ErrorCode::InconsistentSequence,
                  "conflicting ranks out of " + terms_[map].name);
    }
    return false;
  }
  r = v;
  return true;
}

void ExactSequence::solve() {
  const std::size_t n = terms_.size();
  if (n == 0) return;
  auto in_rank = [&](std::size_t i) -> std::optional<long> {
    return i == 0 ? std::optional<long>(0) : ranks_[i - 1];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    // The map out of the last term lands in 0.
    changed |= assign_rank(n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& t = terms_[i];
      if (t.dim == 0) changed |= assign_rank(i, 0);
      if (i + 1 < n && terms_[i + 1].dim == 0) changed |= assign_rank(i, 0);
      if (t.injective_out && t.dim) changed |= assign_rank(i, *t.dim);
      if (t.surjective_out && i + 1 < n && terms_[i + 1].dim) {
        changed |= assign_rank(i, *terms_[i + 1].dim);
      }

      // dim V_i = rank in + rank out
      const auto rin = in_rank(i);
      const auto rout = ranks_[i];
      if (rin && rout) {
        changed |= assign_dim(i, *rin + *rout);
      } else if (t.dim && rin) {
        changed |= assign_rank(i, *t.dim - *rin);
      } else if (t.dim && rout && i > 0) {
        changed |= assign_rank(i - 1, *t.dim - *rout);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!ranks_[i]) continue;
    const long r = *ranks_[i];
    if (terms_[i].dim && r > *terms_[i].dim) {
      throw Error(ErrorCode::InconsistentSequence, "rank exceeds source dimension at " + terms_[i].name);
    }
    if (i + 1 < n && terms_[i + 1].dim && r > *terms_[i + 1].dim) {
      throw Error(ErrorCode::InconsistentSequence,
                  "rank exceeds target dimension at " + terms_[i + 1].name);
    }
  }
}

long ExactSequence::require_dim(std::size_t i) const {
  const auto& d = terms_.at(i).dim;
  if (!d) {
    throw Error(ErrorCode::AmbiguousRank,
                "dimension of " + terms_[i].name + " is not determined by exactness");
  }
  return *d;
}

long ExactSequence::alternating_sum() const {
  long sum = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    sum += (i % 2 == 0 ? 1 : -1) * require_dim(i);
  }
  return sum;
}

bool ExactSequence::fully_determined() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.dim.has_value(); });
}

}  // namespace slc
