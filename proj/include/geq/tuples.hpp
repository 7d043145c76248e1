#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geq/group.hpp"

namespace geq {

/// base^exp, or nullopt when it would exceed `cap`.
std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp, std::size_t cap);

/// Mixed-radix indexing of G^n: x_1 is the most significant digit, x_n the
/// fastest varying one.
class TupleIndexer {
 public:
  TupleIndexer(std::size_t base, std::size_t arity, std::size_t cap);

  std::size_t base() const { return base_; }
  std::size_t arity() const { return arity_; }
  std::size_t count() const { return count_; }

  /// Place value of variable k (1-based).
  std::size_t stride(std::size_t k) const { return strides_[k - 1]; }

  Element digit(std::size_t index, std::size_t k) const {
    return static_cast<Element>((index / strides_[k - 1]) % base_);
  }

  void decode(std::size_t index, std::span<Element> out) const;
  std::vector<Element> decode(std::size_t index) const;
  std::size_t encode(std::span<const Element> tuple) const;

 private:
  std::size_t base_;
  std::size_t arity_;
  std::size_t count_;
  std::vector<std::size_t> strides_;
};

/// Number of words of length <= max_len over `letters` symbols, or nullopt
/// when that exceeds `cap`.
std::optional<std::size_t> count_words(std::size_t letters, std::size_t max_len, std::size_t cap);

/// Visits every word of length <= max_len over {0..letters-1} in
/// length-then-lexicographic order. The visitor returns false to stop.
template <typename Visitor>
void for_each_word(std::size_t letters, std::size_t max_len, Visitor&& visit) {
  std::vector<std::size_t> word;
  for (std::size_t len = 0; len <= max_len; ++len) {
    word.assign(len, 0);
    if (len > 0 && letters == 0) return;
    while (true) {
      if (!visit(std::span<const std::size_t>(word))) return;
      std::size_t pos = len;
      while (pos > 0 && ++word[pos - 1] == letters) {
        word[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

}  // namespace geq
