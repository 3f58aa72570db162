#include "jumploci/algebra.hpp"

namespace jumploci {

int exterior_merge(const Monomial& left, const Monomial& right, Monomial* out) {
  out->clear();
  out->reserve(left.size() + right.size());
  size_t i = 0, j = 0;
  int sign = 1;
  // moving right[j] past the remaining elements of `left` costs one swap each
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) return 0;
    if (left[i] < right[j]) {
      out->push_back(left[i++]);
    } else {
      if ((left.size() - i) % 2 == 1) sign = -sign;
      out->push_back(right[j++]);
    }
  }
  while (i < left.size()) out->push_back(left[i++]);
  while (j < right.size()) out->push_back(right[j++]);
  return sign;
}

std::vector<std::vector<int>> exponent_vectors(int m, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  if (m == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  std::vector<int> current(static_cast<size_t>(m), 0);
  // lexicographic enumeration by recursion on the first coordinate
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == m - 1) {
      current[static_cast<size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace jumploci
