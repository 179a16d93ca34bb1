// Single-row KR crystals B^{1,lambda_j} with classical words w_j: builds the
// DARK set, prints its size and the fitted constant C of the character identity.

#include <iostream>
#include <vector>

#include "darkc/dark.hpp"

int main() {
  using namespace darkc;

  struct Case {
    int n;
    std::vector<int> lambda;
    std::vector<ReducedWord> words;
  };
  const std::vector<Case> cases = {
      {1, {1}, {{}}},
      {1, {2, 1}, {{1}, {1}}},
      {2, {2, 1}, {{1, 2, 1}, {2, 1}}},
      {2, {2, 2, 1}, {{1}, {2, 1}, {}}},
      {3, {2, 1}, {{1, 2, 3}, {3, 2}}},
  };

  for (const auto& c : cases) {
    const DarkSpec spec = typeA_rows(c.n, c.lambda, c.words);
    const DarkSet set = build(spec);
    const VerifyResult v = verify(spec);
    std::cout << "n=" << c.n << " lambda=(";
    for (std::size_t j = 0; j < c.lambda.size(); ++j) std::cout << (j ? "," : "") << c.lambda[j];
    std::cout << ") |B|=" << set.elements.size();
    if (v.ok)
      std::cout << " C=" << to_string(*v.C) << "\n";
    else
      std::cout << " identity FAILED (" << v.diff.size() << " terms)\n";
  }
}
