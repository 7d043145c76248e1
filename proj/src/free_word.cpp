#include "geq/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "geq/error.hpp"

namespace geq {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out{w.rank, {}};
  out.letters.reserve(w.letters.size());
  for (int x : w.letters) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > w.rank) {
      throw InvalidArgument("free letter " + std::to_string(x) + " outside rank " + std::to_string(w.rank));
    }
    if (!out.letters.empty() && out.letters.back() == -x) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

FreeWord formal_inverse(const FreeWord& w) {
  FreeWord out{w.rank, {w.letters.rbegin(), w.letters.rend()}};
  std::ranges::transform(out.letters, out.letters.begin(), [](int x) { return -x; });
  return out;
}

}  // namespace geq
