#include "jumploci/fox.hpp"

#include <cstdlib>

namespace jumploci {

std::vector<int> free_reduce(std::vector<int> word) {
  std::vector<int> out;
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

GroupPresentation GroupPresentation::make(int generators,
                                          std::vector<std::vector<int>> relators) {
  if (generators < 0)
    fail("BadPresentation", "generator count must be non-negative");
  GroupPresentation P;
  P.generators = generators;
  for (auto& w : relators) {
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > generators)
        fail("BadPresentation", "relator letter " + std::to_string(letter) +
                                    " is out of range for " +
                                    std::to_string(generators) + " generators");
    P.relators.push_back(free_reduce(std::move(w)));
  }
  return P;
}

DenseMat<Int> GroupPresentation::abelianization_matrix() const {
  DenseMat<Int> m(static_cast<int>(relators.size()), generators, Int(0));
  for (size_t r = 0; r < relators.size(); ++r)
    for (int letter : relators[r])
      m(static_cast<int>(r), std::abs(letter) - 1) += (letter > 0 ? 1 : -1);
  return m;
}

}  // namespace jumploci
