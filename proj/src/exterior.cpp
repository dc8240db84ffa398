#include "shiftkit/exterior.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "shiftkit/error.hpp"

namespace shiftkit {

std::vector<int> vertices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(min_vertex(m));
    m &= m - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) {
    require(v >= 1 && v <= kMaxVariables, ErrorKind::InvalidArgument,
            "vertex " + std::to_string(v) + " out of range");
    m |= bit(v);
  }
  return m;
}

int wedge_sign(Mask a, Mask b) {
  int inversions = 0;
  while (b) {
    const int y = std::countr_zero(b);
    inversions += popcount(y >= 63 ? 0 : a >> (y + 1));
    b &= b - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

ExtMonomial make_monomial(int n, const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) {
    require(v >= 1 && v <= n, ErrorKind::InvalidArgument,
            "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    require(!(m & bit(v)), ErrorKind::InvalidArgument, "repeated vertex in exterior monomial");
    m |= bit(v);
  }
  return {n, m};
}

SignedMonomial wedge(const ExtMonomial& a, const ExtMonomial& b) {
  require(a.n == b.n, ErrorKind::InvalidArgument, "wedge of monomials over different ambient sizes");
  if (a.support & b.support) return {0, {a.n, 0}};
  return {wedge_sign(a.support, b.support), {a.n, a.support | b.support}};
}

std::strong_ordering cmp_rlex_masks(Mask a, Mask b) {
  if (a == b) return std::strong_ordering::equal;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  return (low & b) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering cmp_rlex(const ExtMonomial& a, const ExtMonomial& b) {
  require(a.n == b.n, ErrorKind::InvalidArgument, "rlex comparison over different ambient sizes");
  require(a.degree() == b.degree(), ErrorKind::InvalidArgument,
          "rlex comparison of monomials of different degrees");
  return cmp_rlex_masks(a.support, b.support);
}

std::strong_ordering cmp_lex_sets(Mask a, Mask b) {
  require(popcount(a) == popcount(b), ErrorKind::InvalidArgument,
          "lex comparison of sets of different sizes");
  if (a == b) return std::strong_ordering::equal;
  const Mask diff = a ^ b;
  const Mask low = diff & (~diff + 1);
  return (low & a) ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::vector<Mask> masks_of_degree(int n, int d) {
  std::vector<Mask> out;
  if (d < 0 || d > n) return out;
  if (d == 0) return {0};
  // Gosper's hack over n-bit words.
  Mask m = full_mask(d);
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return cmp_rlex_masks(a, b) > 0; });
  return out;
}

}  // namespace

std::vector<ExtMonomial> monomials_of_degree(int n, int d) {
  require(n >= 0 && n <= kMaxVariables, ErrorKind::InvalidArgument, "ambient size out of range");
  require(d >= 0 && d <= n, ErrorKind::InvalidArgument,
          "degree " + std::to_string(d) + " outside [0, " + std::to_string(n) + "]");
  std::vector<ExtMonomial> out;
  for (Mask m : masks_of_degree(n, d)) out.push_back({n, m});
  return out;
}

MonomialIndex::MonomialIndex(int n) : n_(n), by_degree_(n + 1), position_(std::size_t{1} << n) {
  for (int d = 0; d <= n; ++d) {
    by_degree_[d] = masks_of_degree(n, d);
    for (std::size_t k = 0; k < by_degree_[d].size(); ++k)
      position_[by_degree_[d][k]] = static_cast<std::uint32_t>(k);
  }
}

const MonomialIndex& monomial_index(int n) {
  constexpr int kMaxIndexed = 20;
  require(n >= 0 && n <= kMaxIndexed, ErrorKind::SizeLimit,
          "monomial index supports n <= 20, got " + std::to_string(n));
  static std::array<std::unique_ptr<MonomialIndex>, kMaxIndexed + 1> cache;
  static std::array<std::once_flag, kMaxIndexed + 1> once;
  std::call_once(once[n], [n] { cache[n] = std::make_unique<MonomialIndex>(n); });
  return *cache[n];
}

std::string render_monomial(Mask m) {
  if (m == 0) return "1";
  std::string out;
  for (int v : vertices(m)) out += "e" + std::to_string(v);
  return out;
}

std::string render_set(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int v : vertices(m)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

}  // namespace shiftkit
