#include "corpus.hpp"

#include <algorithm>

namespace shiftkit::testing {

namespace {

void extend(int n, const std::vector<Mask>& order, std::size_t k, std::vector<char>& present,
            std::vector<Mask>& chosen, std::vector<SimplicialComplex>& out) {
  if (k == order.size()) {
    out.push_back(closure_from_faces(n, chosen));
    return;
  }
  const Mask a = order[k];
  extend(n, order, k + 1, present, chosen, out);
  for (int v : vertices(a)) {
    if (!present[a & ~bit(v)]) return;
  }
  present[a] = 1;
  chosen.push_back(a);
  extend(n, order, k + 1, present, chosen, out);
  chosen.pop_back();
  present[a] = 0;
}

}  // namespace

std::vector<SimplicialComplex> all_complexes(int n, bool full_support) {
  std::vector<Mask> order;
  std::vector<char> present(std::size_t{1} << n, 0);
  present[0] = 1;
  std::vector<Mask> chosen;
  for (int d = 1; d <= n; ++d) {
    for (Mask m : monomial_index(n).of_degree(d)) {
      if (d == 1 && full_support) {
        present[m] = 1;
        chosen.push_back(m);
      } else {
        order.push_back(m);
      }
    }
  }
  std::vector<SimplicialComplex> out;
  extend(n, order, 0, present, chosen, out);
  return out;
}

SimplicialComplex random_complex(int n, Rng& rng) {
  std::vector<Mask> gens;
  for (int v = 1; v <= n; ++v) gens.push_back(bit(v));
  const int faces = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n + 2));
  for (int k = 0; k < faces; ++k) {
    Mask m = 0;
    const int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n - 2)));
    while (popcount(m) < std::min(size, n)) m |= bit(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    gens.push_back(m);
  }
  return closure_from_faces(n, gens);
}

MonomialIdeal random_ideal(Ring ring, int n, Rng& rng) {
  std::vector<Mask> gens;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < count; ++k) {
    Mask m = 0;
    while (m == 0) m = rng() & full_mask(n);
    gens.push_back(m);
  }
  return minimalize(ring, n, gens);
}

MonomialIdeal random_strongly_stable(int n, int d, Rng& rng) {
  std::vector<char> in(std::size_t{1} << n, 0);
  std::vector<Mask> stack;
  const auto& monos = monomial_index(n).of_degree(d);
  const int seeds = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < seeds; ++k) stack.push_back(monos[rng() % monos.size()]);
  std::vector<Mask> gens;
  while (!stack.empty()) {
    const Mask a = stack.back();
    stack.pop_back();
    if (in[a]) continue;
    in[a] = 1;
    gens.push_back(a);
    for (int j : vertices(a)) {
      for (int i = j + 1; i <= n; ++i) {
        if ((a & bit(i)) == 0) stack.push_back((a & ~bit(j)) | bit(i));
      }
    }
  }
  return minimalize(Ring::Exterior, n, gens);
}

bool brute_force_stable(const MonomialIdeal& ideal, bool strongly) {
  const int n = ideal.n();
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    if (!ideal.contains(a)) continue;
    const int lo = min_vertex(a);
    for (int j : vertices(a)) {
      if (!strongly && j != lo) continue;
      for (int i = j + 1; i <= n; ++i) {
        if ((a & bit(i)) == 0 && !ideal.contains((a & ~bit(j)) | bit(i))) return false;
      }
    }
  }
  return true;
}

}  // namespace shiftkit::testing
