#include "shiftkit/symmetric.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "shiftkit/error.hpp"

namespace shiftkit {

int total_degree(const Exponents& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exponents exponents_of_mask(int n, Mask m) {
  Exponents a(static_cast<std::size_t>(n), 0);
  for (int v : vertices(m)) a[static_cast<std::size_t>(v - 1)] = 1;
  return a;
}

Mask support_of(const Exponents& a) {
  Mask m = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) m |= bit(static_cast<int>(k) + 1);
  return m;
}

int min_variable(const Exponents& a) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0) return static_cast<int>(k) + 1;
  fail(ErrorKind::InvalidArgument, "min of the unit monomial");
}

std::strong_ordering cmp_revlex_sym(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate(int n, int d, std::size_t k, Exponents& cur, std::vector<Exponents>& out) {
  if (k + 1 == static_cast<std::size_t>(n)) {
    cur[k] = d;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[k] = e;
    enumerate(n, d - e, k + 1, cur, out);
  }
  cur[k] = 0;
}

}  // namespace

SymIndex::SymIndex(int n, int d) : n_(n), d_(d) {
  require(n >= 1 && n <= kMaxSymmetricVariables, ErrorKind::SizeLimit,
          "symmetric computations support 1 <= n <= 8, got " + std::to_string(n));
  require(d >= 0 && d <= kMaxSymmetricDegree, ErrorKind::SizeLimit, "degree out of range");
  Exponents cur(static_cast<std::size_t>(n), 0);
  enumerate(n, d, 0, cur, monomials_);
  std::sort(monomials_.begin(), monomials_.end(),
            [](const Exponents& a, const Exponents& b) { return cmp_revlex_sym(a, b) > 0; });
  for (std::size_t k = 0; k < monomials_.size(); ++k) position_.emplace(key(monomials_[k]), k);
}

std::uint64_t SymIndex::key(const Exponents& a) {
  std::uint64_t k = 0;
  for (int e : a) k = (k << 8) | static_cast<std::uint64_t>(e);
  return k;
}

std::size_t SymIndex::position(const Exponents& a) const {
  const auto it = position_.find(key(a));
  require(it != position_.end(), ErrorKind::InvalidArgument, "monomial not in index");
  return it->second;
}

const SymIndex& sym_index(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SymIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_unique<SymIndex>(n, d);
  return *slot;
}

std::string render_sym_monomial(const Exponents& a) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    out += "x" + std::to_string(k + 1);
    if (a[k] > 1) out += "^" + std::to_string(a[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace shiftkit
