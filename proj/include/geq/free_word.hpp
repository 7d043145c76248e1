#pragma once

#include <cstddef>
#include <vector>

namespace geq {

/// Word in the free group of rank `rank`. Letter +i is generator i, -i its
/// inverse (1 <= i <= rank).
struct FreeWord {
  std::size_t rank = 1;
  std::vector<int> letters;

  bool operator==(const FreeWord&) const = default;
};

/// Cancels adjacent (i, -i) pairs until none remain. Throws InvalidArgument
/// on letters outside the rank.
FreeWord free_reduce(const FreeWord& w);

/// Reversed word with every letter negated.
FreeWord formal_inverse(const FreeWord& w);

}  // namespace geq
