#include "geq/tuples.hpp"

#include <string>

#include "geq/error.hpp"

namespace geq {

std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return std::nullopt;
    v *= base;
  }
  if (v > cap) return std::nullopt;
  return v;
}

TupleIndexer::TupleIndexer(std::size_t base, std::size_t arity, std::size_t cap)
    : base_(base), arity_(arity), count_(0), strides_(arity) {
  auto count = bounded_power(base, arity, cap);
  if (!count) {
    throw LimitExceeded("|G|^n = " + std::to_string(base) + "^" + std::to_string(arity) +
                        " exceeds the cap of " + std::to_string(cap));
  }
  count_ = *count;
  std::size_t s = 1;
  for (std::size_t k = arity; k > 0; --k) {
    strides_[k - 1] = s;
    s *= base;
  }
}

void TupleIndexer::decode(std::size_t index, std::span<Element> out) const {
  for (std::size_t k = 1; k <= arity_; ++k) out[k - 1] = digit(index, k);
}

std::vector<Element> TupleIndexer::decode(std::size_t index) const {
  std::vector<Element> out(arity_);
  decode(index, out);
  return out;
}

std::size_t TupleIndexer::encode(std::span<const Element> tuple) const {
  std::size_t index = 0;
  for (std::size_t k = 1; k <= arity_; ++k) index += tuple[k - 1] * strides_[k - 1];
  return index;
}

std::optional<std::size_t> count_words(std::size_t letters, std::size_t max_len, std::size_t cap) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (layer > cap || total > cap - layer) return std::nullopt;
    total += layer;
    if (len == max_len) break;
    if (letters != 0 && layer > cap / letters) return std::nullopt;
    layer *= letters;
  }
  return total;
}

}  // namespace geq
