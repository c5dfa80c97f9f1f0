#pragma once

namespace bpe {

// k = 12m + 4*delta + 6*epsilon with delta in {0,1,2}, epsilon in {0,1}.
struct WeightDecomposition {
  int k;
  int m;
  int delta;
  int epsilon;
};

// Unique decomposition of an even weight k >= 4; k = 2 (or odd k) has none.
WeightDecomposition weight_decomposition(int k);

}  // namespace bpe
