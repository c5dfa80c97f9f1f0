#include "bpe/ssforms/weight.hpp"

#include <string>

#include "bpe/error.hpp"

namespace bpe {

WeightDecomposition weight_decomposition(int k) {
  if (k >= 0 && k % 2 == 0) {
    for (int eps = 0; eps <= 1; ++eps)
      for (int del = 0; del <= 2; ++del) {
        int rest = k - 4 * del - 6 * eps;
        if (rest >= 0 && rest % 12 == 0) return {k, rest / 12, del, eps};
      }
  }
  throw InputError("weight " + std::to_string(k) + " has no decomposition 12m + 4delta + 6epsilon");
}

}  // namespace bpe
