#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wpo/graph.hpp"

namespace wpo {

namespace detail {

// Fixed-length bit row with the shift-or step of the subset-sum recurrence.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset() { std::fill(words_.begin(), words_.end(), 0); }

  // *this |= *this << shift, truncated to size().
  void or_shifted_self(std::size_t shift) {
    if (shift >= bits_) {
      return;
    }
    const std::size_t word_shift = shift / 64;
    const std::size_t bit_shift = shift % 64;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      std::uint64_t moved = words_[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i > word_shift) {
        moved |= words_[i - word_shift - 1] >> (64 - bit_shift);
      }
      words_[i] |= moved;
    }
    trim();
  }

  void assign_or_shifted(const BitRow& src, std::size_t shift) {
    words_ = src.words_;
    or_shifted_self(shift);
  }

 private:
  void trim() {
    if (bits_ % 64 != 0) {
      words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

inline void require_positive_items(std::span<const Weight> items) {
  for (Weight x : items) {
    if (x == 0) {
      throw std::invalid_argument("subset sum items must be positive");
    }
  }
}

}  // namespace detail

/// Reachability only: is there an index subset of `items` summing to `target`?
inline bool subset_sum_reachable(std::span<const Weight> items, Weight target) {
  detail::require_positive_items(items);
  detail::BitRow reach(static_cast<std::size_t>(target) + 1);
  reach.set(0);
  for (Weight x : items) {
    reach.or_shifted_self(static_cast<std::size_t>(std::min<Weight>(x, target + 1)));
  }
  return reach.test(static_cast<std::size_t>(target));
}

/// Pseudo-polynomial subset sum over a multiset.  Returns the indices of one
/// subset whose values sum exactly to `target`, or nullopt.  Keeps one
/// reachability row per item prefix so the witness can be walked back.
inline std::optional<std::vector<std::size_t>> subset_sum(std::span<const Weight> items, Weight target) {
  detail::require_positive_items(items);
  const std::size_t width = static_cast<std::size_t>(target) + 1;
  std::vector<detail::BitRow> rows;
  rows.reserve(items.size() + 1);
  rows.emplace_back(width);
  rows.back().set(0);
  for (Weight x : items) {
    detail::BitRow next(width);
    next.assign_or_shifted(rows.back(), static_cast<std::size_t>(std::min<Weight>(x, target + 1)));
    rows.push_back(std::move(next));
  }
  if (!rows.back().test(static_cast<std::size_t>(target))) {
    return std::nullopt;
  }
  std::vector<std::size_t> chosen;
  std::size_t remaining = static_cast<std::size_t>(target);
  for (std::size_t i = items.size(); i-- > 0;) {
    if (rows[i].test(remaining)) {
      continue;
    }
    chosen.push_back(i);
    remaining -= static_cast<std::size_t>(items[i]);
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace wpo
