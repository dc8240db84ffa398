#include "shiftkit/ideals.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "shiftkit/error.hpp"

namespace shiftkit {

const char* to_string(Ring ring) {
  switch (ring) {
    case Ring::Exterior: return "E";
    case Ring::SymmetricSquarefree: return "S";
    case Ring::SymmetricGeneral: return "S-general";
  }
  return "?";
}

namespace {

bool size_then_lex(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return cmp_lex_sets(a, b) < 0;
}

bool degree_then_revlex(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return cmp_revlex_sym(a, b) > 0;
}

}  // namespace

const std::vector<Mask>& MonomialIdeal::masks() const {
  require(squarefree(), ErrorKind::InvalidArgument, "masks() on a general symmetric ideal");
  return masks_;
}

std::vector<Exponents> MonomialIdeal::exponents() const {
  if (!squarefree()) return exponents_;
  std::vector<Exponents> out;
  for (Mask m : masks_) out.push_back(exponents_of_mask(n_, m));
  return out;
}

int MonomialIdeal::min_degree() const {
  int d = std::numeric_limits<int>::max();
  if (squarefree())
    for (Mask m : masks_) d = std::min(d, popcount(m));
  else
    for (const auto& a : exponents_) d = std::min(d, total_degree(a));
  return is_zero() ? 0 : d;
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  if (squarefree())
    for (Mask m : masks_) d = std::max(d, popcount(m));
  else
    for (const auto& a : exponents_) d = std::max(d, total_degree(a));
  return d;
}

bool MonomialIdeal::contains(Mask m) const {
  if (squarefree()) {
    for (Mask g : masks_)
      if ((g & m) == g) return true;
    return false;
  }
  return contains(exponents_of_mask(n_, m));
}

bool MonomialIdeal::contains(const Exponents& a) const {
  if (squarefree()) {
    const Mask s = support_of(a);
    for (Mask g : masks_)
      if ((g & s) == g) return true;
    return false;
  }
  for (const auto& g : exponents_)
    if (divides(g, a)) return true;
  return false;
}

std::vector<Mask> MonomialIdeal::squarefree_members(int d) const {
  std::vector<Mask> out;
  if (d < 0 || d > n_) return out;
  for (Mask m : monomial_index(n_).of_degree(d))
    if (contains(m)) out.push_back(m);
  return out;
}

MonomialIdeal MonomialIdeal::as_ring(Ring ring) const {
  require(squarefree() && ring != Ring::SymmetricGeneral, ErrorKind::InvalidArgument,
          "as_ring converts between squarefree flavors only");
  MonomialIdeal copy = *this;
  copy.ring_ = ring;
  return copy;
}

std::string MonomialIdeal::render() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& a : exponents()) {
    if (!first) out += ", ";
    first = false;
    if (ring_ == Ring::Exterior)
      out += render_monomial(support_of(a));
    else
      out += render_sym_monomial(a);
  }
  return out + ")";
}

MonomialIdeal minimalize(Ring ring, int n, std::vector<Mask> generators) {
  if (ring == Ring::SymmetricGeneral) {
    std::vector<Exponents> exps;
    for (Mask m : generators) {
      require((m & ~full_mask(n)) == 0, ErrorKind::InvalidArgument, "generator outside [n]");
      exps.push_back(exponents_of_mask(n, m));
    }
    return minimalize(n, std::move(exps));
  }
  require(n >= 0 && n <= kMaxVariables, ErrorKind::InvalidArgument, "ambient size out of range");
  for (Mask m : generators) {
    require(m != 0, ErrorKind::InvalidArgument, "unit generator: the ideal is not proper");
    require((m & ~full_mask(n)) == 0, ErrorKind::InvalidArgument,
            "generator " + render_set(m) + " outside [" + std::to_string(n) + "]");
  }
  std::sort(generators.begin(), generators.end(), size_then_lex);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  MonomialIdeal ideal(ring, n);
  for (Mask g : generators) {
    bool redundant = false;
    for (Mask h : ideal.masks_)
      if ((h & g) == h) {
        redundant = true;
        break;
      }
    if (!redundant) ideal.masks_.push_back(g);
  }
  return ideal;
}

MonomialIdeal minimalize(int n, std::vector<Exponents> generators) {
  for (const auto& a : generators) {
    require(static_cast<int>(a.size()) == n, ErrorKind::InvalidArgument,
            "exponent vector length differs from n");
    for (int e : a) require(e >= 0, ErrorKind::InvalidArgument, "negative exponent");
    require(total_degree(a) > 0, ErrorKind::InvalidArgument,
            "unit generator: the ideal is not proper");
  }
  std::sort(generators.begin(), generators.end(), degree_then_revlex);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  MonomialIdeal ideal(Ring::SymmetricGeneral, n);
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : ideal.exponents_)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) ideal.exponents_.push_back(g);
  }
  return ideal;
}

MonomialIdeal face_ideal(const SimplicialComplex& delta, Ring ring) {
  require(ring != Ring::SymmetricGeneral, ErrorKind::InvalidArgument,
          "face ideals are squarefree");
  return minimalize(ring, delta.n(), minimal_nonfaces(delta));
}

SimplicialComplex complex_of(const MonomialIdeal& ideal) {
  return complex_from_nonfaces(ideal.n(), ideal.masks());
}

namespace {

// Generators suffice for these exchange conditions: a multiple of a
// generator either keeps its minimum or already contains the generator
// after the exchange.
std::pair<bool, bool> squarefree_exchange(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  bool stable = true, strongly = true;
  for (Mask u : ideal.masks()) {
    const int lo = min_vertex(u);
    for (int i = lo + 1; i <= n; ++i)
      if (!(u & bit(i)) && !ideal.contains((u & ~bit(lo)) | bit(i))) stable = false;
    for (int j : vertices(u))
      for (int i = j + 1; i <= n; ++i)
        if (!(u & bit(i)) && !ideal.contains((u & ~bit(j)) | bit(i))) strongly = false;
  }
  return {stable, strongly};
}

std::pair<bool, bool> general_exchange(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  bool stable = true, strongly = true;
  for (auto u : ideal.exponents()) {
    const int lo = min_variable(u);
    for (int j = 1; j <= n; ++j) {
      if (u[static_cast<std::size_t>(j - 1)] == 0) continue;
      for (int i = j + 1; i <= n; ++i) {
        Exponents w = u;
        --w[static_cast<std::size_t>(j - 1)];
        ++w[static_cast<std::size_t>(i - 1)];
        if (ideal.contains(w)) continue;
        strongly = false;
        if (j == lo) stable = false;
      }
    }
  }
  return {stable, strongly};
}

bool squarefree_stable_exhaustive(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  const Mask top = full_mask(n);
  for (Mask u = 1; u <= top; ++u) {
    if (!ideal.contains(u)) continue;
    const int lo = min_vertex(u);
    for (int i = lo + 1; i <= n; ++i)
      if (!(u & bit(i)) && !ideal.contains((u & ~bit(lo)) | bit(i))) return false;
  }
  return true;
}

}  // namespace

StabilityFlags stability_flags(const MonomialIdeal& ideal) {
  StabilityFlags flags;
  switch (ideal.ring()) {
    case Ring::Exterior: {
      auto [stable, strongly] = squarefree_exchange(ideal);
      flags = {stable, strongly, stable};
      break;
    }
    case Ring::SymmetricSquarefree: {
      auto [stable, strongly] = general_exchange(ideal);
      flags = {stable, strongly, squarefree_exchange(ideal).first};
      break;
    }
    case Ring::SymmetricGeneral: {
      auto [stable, strongly] = general_exchange(ideal);
      flags = {stable, strongly, squarefree_stable_exhaustive(ideal)};
      break;
    }
  }
  return flags;
}

StableInvariants stable_invariants(const MonomialIdeal& ideal) {
  const int n = ideal.n();
  StableInvariants out;
  const auto flags = stability_flags(ideal);
  const auto gens = ideal.exponents();
  switch (ideal.ring()) {
    case Ring::Exterior: {
      require(flags.stable, ErrorKind::StabilityViolation, "ideal " + ideal.render() + " is not stable");
      int lo = n + 1;
      for (const auto& u : gens) lo = std::min(lo, min_variable(u));
      out.depth_E = gens.empty() ? n : lo - 1;
      break;
    }
    case Ring::SymmetricSquarefree: {
      require(flags.squarefree_stable, ErrorKind::StabilityViolation,
              "ideal " + ideal.render() + " is not squarefree stable");
      int lo = std::numeric_limits<int>::max();
      for (const auto& u : gens) lo = std::min(lo, min_variable(u) + total_degree(u));
      out.depth_S = gens.empty() ? n : lo - 2;
      out.reg_S = gens.empty() ? 0 : ideal.max_degree() - 1;
      break;
    }
    case Ring::SymmetricGeneral: {
      require(flags.stable, ErrorKind::StabilityViolation, "ideal " + ideal.render() + " is not stable");
      int lo = n + 1;
      for (const auto& u : gens) lo = std::min(lo, min_variable(u));
      out.depth_S = gens.empty() ? n : lo - 1;
      out.reg_S = gens.empty() ? 0 : ideal.max_degree() - 1;
      break;
    }
  }
  return out;
}

std::uint64_t BettiTable::at(int i, int degree) const {
  const auto it = entries_.find({i, degree});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int degree, std::uint64_t value) {
  if (value == 0)
    entries_.erase({i, degree});
  else
    entries_[{i, degree}] = value;
}

int BettiTable::projdim() const {
  int p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

int BettiTable::max_degree() const {
  int d = 0;
  for (const auto& [key, v] : entries_) d = std::max(d, key.second);
  return d;
}

BettiTable betti_S_eliahou_kervaire(const MonomialIdeal& ideal) {
  require(ideal.squarefree(), ErrorKind::InvalidArgument, "Eliahou-Kervaire needs a squarefree ideal");
  require(stability_flags(ideal).squarefree_stable, ErrorKind::StabilityViolation,
          "ideal " + ideal.render() + " is not squarefree stable");
  const int n = ideal.n();
  BettiTable table;
  table.set(0, 0, 1);
  for (Mask u : ideal.masks()) {
    const int j = popcount(u) - 1;
    for (int i = 1; i <= n; ++i) table.add(i, i + j, binomial(n - min_vertex(u) - j, i - 1));
  }
  return table;
}

int depth_S_via_auslander_buchsbaum(const BettiTable& table, int n) {
  require(!table.empty(), ErrorKind::InvalidArgument, "empty Betti table");
  return n - table.projdim();
}

BettiTable koszul_betti_oracle(const MonomialIdeal& ideal, const PrimeField& field, int i_max,
                               int d_max) {
  require(ideal.ring() != Ring::Exterior, ErrorKind::InvalidArgument,
          "the Koszul oracle works over S");
  const int n = ideal.n();
  require(n >= 0 && n <= kMaxKoszulVariables, ErrorKind::SizeLimit,
          "Koszul oracle supports n <= 6, got " + std::to_string(n));
  const auto gens = ideal.exponents();
  Exponents lcm(static_cast<std::size_t>(n), 0);
  for (const auto& g : gens)
    for (int k = 0; k < n; ++k) lcm[k] = std::max(lcm[k], g[k]);

  BettiTable table;
  Exponents b(static_cast<std::size_t>(n), 0);
  // Tor is supported on multidegrees below the lcm of the generators.
  for (;;) {
    const int deg = total_degree(b);
    if (deg <= d_max) {
      const Mask supp = support_of(b);
      const int top = popcount(supp);
      // chains[s]: sets A of size s with x^{b - 1_A} outside the ideal.
      std::vector<std::vector<Mask>> chains(static_cast<std::size_t>(top + 2));
      Mask a = supp;
      for (;;) {
        Exponents c = b;
        for (int v : vertices(a)) --c[static_cast<std::size_t>(v - 1)];
        if (!ideal.contains(c)) chains[static_cast<std::size_t>(popcount(a))].push_back(a);
        if (a == 0) break;
        a = (a - 1) & supp;
      }
      auto boundary_rank = [&](int s) -> std::size_t {
        if (s <= 0 || s > top) return 0;
        const auto& src = chains[static_cast<std::size_t>(s)];
        const auto& dst = chains[static_cast<std::size_t>(s - 1)];
        if (src.empty() || dst.empty()) return 0;
        MatrixFp m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
          int pos = 0;
          for (int v : vertices(src[col])) {
            const auto it = std::find(dst.begin(), dst.end(), src[col] & ~bit(v));
            if (it != dst.end())
              m.at(static_cast<std::size_t>(it - dst.begin()), col) = pos % 2 == 0 ? 1 : field.neg(1);
            ++pos;
          }
        }
        return rank(m, field);
      };
      std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
      for (int s = 1; s <= top; ++s) ranks[static_cast<std::size_t>(s)] = boundary_rank(s);
      for (int i = 0; i <= std::min(i_max, top); ++i) {
        const std::size_t c = chains[static_cast<std::size_t>(i)].size();
        const std::size_t h = c - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)];
        table.add(i, deg, h);
      }
    }
    int k = 0;
    while (k < n && b[k] == lcm[k]) b[k++] = 0;
    if (k == n) break;
    ++b[k];
  }
  return table;
}

std::uint64_t quotient_dim_degree(const MonomialIdeal& ideal, const std::vector<int>& prefix, int d) {
  const int n = ideal.n();
  Mask killed = 0;
  for (int v : prefix) {
    require(v >= 1 && v <= n, ErrorKind::InvalidArgument, "prefix index out of range");
    require(!(killed & bit(v)), ErrorKind::InvalidArgument, "repeated prefix index");
    killed |= bit(v);
  }
  if (d < 0) return 0;
  std::uint64_t count = 0;
  if (ideal.ring() == Ring::Exterior) {
    if (d > n) return 0;
    for (Mask m : monomial_index(n).of_degree(d))
      if (!(m & killed) && !ideal.contains(m)) ++count;
    return count;
  }
  if (n == 0) return d == 0 ? 1 : 0;
  for (const auto& a : sym_index(n, d).monomials())
    if (!(support_of(a) & killed) && !ideal.contains(a)) ++count;
  return count;
}

}  // namespace shiftkit
