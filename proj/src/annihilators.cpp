#include "shiftkit/annihilators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "shiftkit/error.hpp"

namespace shiftkit {

std::uint64_t AnnihilatorTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void AnnihilatorTable::set(int i, int j, std::uint64_t value) {
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

bool AnnihilatorTable::row_zero(int i) const {
  for (const auto& [key, value] : entries_) {
    if (key.first == i && value != 0) return false;
  }
  return true;
}

SequenceSpec SequenceSpec::standard(int n) {
  SequenceSpec s;
  s.sigma.resize(static_cast<std::size_t>(n));
  std::iota(s.sigma.begin(), s.sigma.end(), 1);
  return s;
}

SequenceSpec SequenceSpec::permutation(std::vector<int> sigma) {
  SequenceSpec s;
  s.sigma = std::move(sigma);
  return s;
}

SequenceSpec SequenceSpec::transform(MatrixFp gamma) {
  SequenceSpec s = standard(static_cast<int>(gamma.rows()));
  s.gamma = std::move(gamma);
  return s;
}

void SequenceSpec::validate(const PrimeField& field) const {
  const int n = this->n();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : sigma) {
    require(v >= 1 && v <= n && !seen[static_cast<std::size_t>(v)], ErrorKind::InvalidArgument,
            "sequence order is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (gamma) {
    require(gamma->rows() == static_cast<std::size_t>(n) && gamma->cols() == gamma->rows(),
            ErrorKind::InvalidArgument, "sequence transform has the wrong size");
    require(determinant(*gamma, field) != 0, ErrorKind::InvalidArgument,
            "sequence transform is singular");
  }
}

namespace {

void check_order(const std::vector<int>& order, int n) {
  require(static_cast<int>(order.size()) == n, ErrorKind::InvalidArgument,
          "sequence order has the wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : order) {
    require(v >= 1 && v <= n && !seen[static_cast<std::size_t>(v)], ErrorKind::InvalidArgument,
            "sequence order is not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string table_diff(const AnnihilatorTable& a, const AnnihilatorTable& b) {
  std::ostringstream out;
  auto keys = a.entries();
  for (const auto& [k, v] : b.entries()) keys[k] = v;
  for (const auto& [k, v] : keys) {
    (void)v;
    if (a.at(k.first, k.second) != b.at(k.first, k.second)) {
      out << " alpha_{" << k.first << "," << k.second << "}: " << a.at(k.first, k.second) << " vs "
          << b.at(k.first, k.second);
      break;
    }
  }
  return out.str();
}

}  // namespace

SequenceQuotients::SequenceQuotients(const MonomialIdeal& ideal, const SequenceSpec& seq,
                                     const PrimeField& field)
    : n_(ideal.n()), field_(&field), ideal_(ideal), monomial_(!seq.gamma), order_(seq.sigma) {
  require(ideal.ring() == Ring::Exterior, ErrorKind::InvalidArgument,
          "exterior annihilator numbers need an exterior ideal");
  require(seq.n() == n_, ErrorKind::InvalidArgument, "sequence length differs from n");
  require(n_ <= 20, ErrorKind::SizeLimit, "too many variables for annihilator numbers");
  seq.validate(field);
  const MonomialIndex& index = monomial_index(n_);
  span_.resize(static_cast<std::size_t>(n_) + 1);
  if (monomial_) {
    for (int d = 0; d <= n_; ++d) {
      const auto members = ideal.squarefree_members(d);
      MatrixFp m(members.size(), index.count(d));
      for (std::size_t r = 0; r < members.size(); ++r) m.at(r, index.position(members[r])) = 1;
      span_[static_cast<std::size_t>(d)] = std::move(m);
    }
  } else {
    ExteriorImage image(inverse(*seq.gamma, field), field);
    for (int d = 0; d <= n_; ++d) {
      const auto members = ideal.squarefree_members(d);
      MatrixFp m(members.size(), index.count(d));
      for (std::size_t r = 0; r < members.size(); ++r) {
        const ExtVector& v = image.of(members[r]);
        std::copy(v.coeffs.begin(), v.coeffs.end(), m.row(r).begin());
      }
      span_[static_cast<std::size_t>(d)] = std::move(m);
    }
  }
}

const SequenceQuotients::Restricted& SequenceQuotients::restricted(Mask killed, int d) {
  auto key = std::make_pair(killed, d);
  auto it = restricted_.find(key);
  if (it != restricted_.end()) return it->second;
  Restricted r;
  const MonomialIndex& index = monomial_index(n_);
  std::vector<std::size_t> keep;
  for (Mask m : index.of_degree(d)) {
    if ((m & killed) != 0) continue;
    r.position[m] = r.columns.size();
    r.columns.push_back(m);
    keep.push_back(index.position(m));
  }
  MatrixFp projected = span_[static_cast<std::size_t>(d)].select_columns(keep);
  r.red = rref(projected, *field_);
  std::size_t p = 0;
  for (std::size_t c = 0; c < r.columns.size(); ++c) {
    if (p < r.red.pivots.size() && r.red.pivots[p] == c) {
      ++p;
    } else {
      r.standard.push_back(c);
    }
  }
  return restricted_.emplace(key, std::move(r)).first->second;
}

std::uint64_t SequenceQuotients::dim(Mask killed, int d) {
  if (d < 0 || d > n_) return 0;
  if (monomial_) return quotient_dim_degree(ideal_, vertices(killed), d);
  return restricted(killed, d).standard.size();
}

std::uint64_t SequenceQuotients::multiplication_rank(Mask killed, int var, int d) {
  if (d < 0 || d + 1 > n_) return 0;
  auto key = std::make_tuple(killed, var, d);
  auto it = mult_.find(key);
  if (it != mult_.end()) return it->second;
  const Restricted& src = restricted(killed, d);
  const Restricted& dst = restricted(killed, d + 1);
  const PrimeField& f = *field_;
  const Mask v = bit(var);
  // Rows: source standard monomials; columns: target standard monomials.
  std::vector<std::size_t> target_slot(dst.columns.size(), dst.standard.size());
  for (std::size_t q = 0; q < dst.standard.size(); ++q) target_slot[dst.standard[q]] = q;
  std::vector<std::size_t> pivot_row(dst.columns.size(), dst.red.rank());
  for (std::size_t k = 0; k < dst.red.rank(); ++k) pivot_row[dst.red.pivots[k]] = k;

  MatrixFp m(src.standard.size(), dst.standard.size());
  for (std::size_t q = 0; q < src.standard.size(); ++q) {
    const Mask g = src.columns[src.standard[q]];
    if ((g & v) != 0) continue;
    const Mask target = g | v;
    const std::uint64_t sign = wedge_sign(v, g) > 0 ? 1 : f.neg(1);
    const std::size_t col = dst.position.at(target);
    if (target_slot[col] < dst.standard.size()) {
      m.at(q, target_slot[col]) = sign;
    } else {
      // Pivot column: subtract sign times the reduced row.
      auto row = dst.red.reduced.row(pivot_row[col]);
      for (std::size_t s = 0; s < dst.standard.size(); ++s) {
        m.at(q, s) = f.neg(f.mul(sign, row[dst.standard[s]]));
      }
    }
  }
  const std::uint64_t result = rank(m, f);
  mult_.emplace(key, result);
  return result;
}

std::uint64_t SequenceQuotients::homology(Mask killed, int var, int d) {
  require((killed & bit(var)) == 0, ErrorKind::InvalidArgument,
          "multiplication by a killed variable");
  if (d < 0 || d > n_) return 0;
  const std::uint64_t size = restricted(killed, d).standard.size();
  return size - multiplication_rank(killed, var, d) - multiplication_rank(killed, var, d - 1);
}

std::uint64_t SequenceQuotients::alpha(const std::vector<int>& order, int i, int j) {
  check_order(order, n_);
  require(i >= 1 && i <= n_, ErrorKind::IndexOutOfRange,
          "alpha row " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  require(j >= 0, ErrorKind::IndexOutOfRange, "alpha column must be nonnegative");
  if (j > n_) return 0;
  Mask prev = 0;
  for (int k = 0; k < i - 1; ++k) prev |= bit(order[static_cast<std::size_t>(k)]);
  const int var = order[static_cast<std::size_t>(i - 1)];
  const Mask cur = prev | bit(var);
  const auto formula = static_cast<std::int64_t>(dim(cur, j)) -
                       (static_cast<std::int64_t>(dim(prev, j + 1)) -
                        static_cast<std::int64_t>(dim(cur, j + 1)));
  const std::uint64_t h = homology(prev, var, j);
  if (formula != static_cast<std::int64_t>(h)) {
    fail(ErrorKind::ConsistencyFailure,
         "alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}: dimension count " +
             std::to_string(formula) + " but homology " + std::to_string(h));
  }
  return h;
}

AnnihilatorTable SequenceQuotients::table(const std::vector<int>& order) {
  AnnihilatorTable t(Ring::Exterior, n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 0; j <= n_; ++j) t.set(i, j, alpha(order, i, j));
  }
  return t;
}

std::uint64_t alpha_E_sequence(const MonomialIdeal& ideal, const SequenceSpec& seq, int i, int j,
                               const PrimeField& field) {
  SequenceQuotients q(ideal, seq, field);
  return q.alpha(seq.sigma, i, j);
}

AnnihilatorTable alpha_E_table(const MonomialIdeal& ideal, const SequenceSpec& seq,
                               const PrimeField& field) {
  SequenceQuotients q(ideal, seq, field);
  return q.table();
}

AnnihilatorTable alpha_E_generic_with_gin(const MonomialIdeal& ideal, const MonomialIdeal& gin,
                                          const GenericContext& ctx) {
  ctx.validate();
  const int n = ideal.n();
  require(gin.n() == n && gin.ring() == Ring::Exterior, ErrorKind::InvalidArgument,
          "gin does not match the ideal");
  AnnihilatorTable reference = alpha_E_table(gin, SequenceSpec::standard(n), ctx.field);
  if (n == 0) return reference;
  ctx.field.require_exceeds(static_cast<std::uint64_t>(n));
  for (int t = 0; t < ctx.trials; ++t) {
    MatrixFp gamma = random_invertible(static_cast<std::size_t>(n), ctx.field,
                                       ctx.rng(purpose::kAlphaTransform, t));
    AnnihilatorTable other = alpha_E_table(ideal, SequenceSpec::transform(std::move(gamma)), ctx.field);
    if (!(other == reference)) {
      fail(ErrorKind::GenericityFailure, "annihilator numbers differ between gin and trial " +
                                             std::to_string(t) + ":" + table_diff(reference, other));
    }
  }
  return reference;
}

AnnihilatorTable alpha_E_generic(const MonomialIdeal& ideal, const GenericContext& ctx) {
  return alpha_E_generic_with_gin(ideal, gin_rlex(ideal, ctx), ctx);
}

std::uint64_t alpha_from_standard_monomials(const MonomialIdeal& gin, int i, int j) {
  const int n = gin.n();
  require(gin.ring() == Ring::Exterior, ErrorKind::InvalidArgument, "expected an exterior ideal");
  require(stability_flags(gin).strongly_stable, ErrorKind::StabilityViolation,
          "ideal is not strongly stable");
  require(i >= 1 && i <= n, ErrorKind::IndexOutOfRange, "alpha row out of range");
  require(j >= 0, ErrorKind::IndexOutOfRange, "alpha column must be nonnegative");
  if (j > n) return 0;
  const Mask low = full_mask(i);
  std::uint64_t count = 0;
  for (Mask f : monomial_index(n).of_degree(j)) {
    if ((f & low) != 0) continue;
    if (!gin.contains(f) && gin.contains(f | bit(i))) ++count;
  }
  return count;
}

AnnihilatorTable alpha_from_standard_monomials_table(const MonomialIdeal& gin) {
  const int n = gin.n();
  AnnihilatorTable t(Ring::Exterior, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) t.set(i, j, alpha_from_standard_monomials(gin, i, j));
  }
  return t;
}

AnnihilatorTable alpha_complex_shifted(const SimplicialComplex& shifted) {
  require(is_shifted(shifted), ErrorKind::NotShifted, "complex is not shifted");
  const int n = shifted.n();
  AnnihilatorTable t(Ring::Exterior, n);
  for (int i = 1; i <= n; ++i) {
    const Mask low = full_mask(i);
    for (int j = 0; j <= n; ++j) {
      std::uint64_t count = 0;
      if (j == 0) {
        if (!shifted.contains(bit(i))) count = 1;
      } else if (j <= shifted.dim() + 1) {
        for (Mask f : shifted.faces_of_size(j)) {
          if ((f & low) == 0 && !shifted.contains(f | bit(i))) ++count;
        }
      }
      t.set(i, j, count);
    }
  }
  return t;
}

AnnihilatorTable alpha_complex(const SimplicialComplex& delta, const GenericContext& ctx) {
  return alpha_complex_shifted(exterior_shift(delta, ctx));
}

int depth_from_alpha(const AnnihilatorTable& table, int n) {
  int r = 0;
  while (r < n && table.row_zero(r + 1)) ++r;
  return r;
}

BettiTable betti_S_from_alpha_table(const AnnihilatorTable& alpha, int n) {
  BettiTable b;
  b.set(0, 0, 1);
  for (const auto& [key, value] : alpha.entries()) {
    const auto [l, j] = key;
    if (l < 1 || l > n) continue;
    for (int i = 1; i <= n; ++i) {
      const int top = n - l - j;
      if (top < i - 1) continue;
      b.add(i, i + j, binomial(top, i - 1) * value);
    }
  }
  return b;
}

BettiTable betti_S_from_alpha(const SimplicialComplex& delta, const GenericContext& ctx) {
  ShiftResult sr = exterior_shift_with_gin(delta, ctx);
  const MonomialIdeal j = face_ideal(delta, Ring::Exterior);
  const AnnihilatorTable alpha = alpha_E_generic_with_gin(j, sr.gin, ctx);
  BettiTable from_alpha = betti_S_from_alpha_table(alpha, delta.n());
  BettiTable ek = betti_S_eliahou_kervaire(face_ideal(sr.shifted, Ring::SymmetricSquarefree));
  require(from_alpha == ek, ErrorKind::ConsistencyFailure,
          "Betti numbers from annihilator numbers disagree with the shifted resolution");
  return from_alpha;
}

BoundReport cartan_betti_bound_check(const MonomialIdeal& ideal, const GenericContext& ctx, int i_max,
                                     int j_max, int r_max, const CartanLimits& limits) {
  ctx.validate();
  const int n = ideal.n();
  require(n >= 1, ErrorKind::InvalidArgument, "bound check needs at least one variable");
  require(n <= limits.max_n, ErrorKind::SizeLimit,
          "n = " + std::to_string(n) + " exceeds the Cartan limit " + std::to_string(limits.max_n));
  require(i_max >= 1 && i_max <= limits.max_i, ErrorKind::SizeLimit,
          "homological window exceeds the Cartan limit");
  require(j_max >= 0, ErrorKind::InvalidArgument, "degree window must be nonnegative");
  if (r_max == 0) r_max = n;
  require(r_max >= 1 && r_max <= n, ErrorKind::InvalidArgument, "sequence length out of range");
  ctx.field.require_exceeds(static_cast<std::uint64_t>(n));

  BoundReport report;
  report.alpha = alpha_E_generic(ideal, ctx);
  std::vector<std::uint64_t> first;
  for (int t = 0; t < ctx.trials; ++t) {
    MatrixFp gamma = random_invertible(static_cast<std::size_t>(n), ctx.field,
                                       ctx.rng(purpose::kCartanPartial, t));
    std::vector<std::uint64_t> values;
    for (int r = 1; r <= r_max; ++r) {
      MatrixFp v(static_cast<std::size_t>(n), static_cast<std::size_t>(r));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < r; ++b) v.at(a, b) = gamma.at(a, b);
      }
      CartanComplex complex(ideal, v, ctx.field);
      for (int i = 1; i <= i_max; ++i) {
        for (int j = 0; j <= j_max; ++j) values.push_back(complex.homology(i, i + j));
      }
    }
    if (t == 0) {
      first = std::move(values);
    } else if (values != first) {
      fail(ErrorKind::GenericityFailure, "Cartan homology differs between trials");
    }
  }

  std::size_t idx = 0;
  for (int r = 1; r <= r_max; ++r) {
    for (int i = 1; i <= i_max; ++i) {
      for (int j = 0; j <= j_max; ++j) {
        BoundEntry e;
        e.i = i;
        e.j = j;
        e.r = r;
        e.h = first[idx++];
        for (int k = 1; k <= r; ++k) {
          e.bound += binomial(r + i - k - 1, i - 1) * report.alpha.at(k, j);
        }
        e.equal = e.h == e.bound;
        if (e.h > e.bound) {
          fail(ErrorKind::VerificationFailure,
               "h_{" + std::to_string(i) + "," + std::to_string(i + j) + "}(" + std::to_string(r) +
                   ") = " + std::to_string(e.h) + " exceeds the bound " + std::to_string(e.bound));
        }
        report.equality_everywhere = report.equality_everywhere && e.equal;
        report.entries.push_back(e);
      }
    }
  }
  return report;
}

namespace {

// dim (S/(I + (forms)))_d by the rank of the degree-d span.
std::uint64_t symmetric_quotient_dim(const MonomialIdeal& ideal,
                                     const std::vector<std::vector<std::uint64_t>>& forms, int d,
                                     const PrimeField& field) {
  if (d < 0) return 0;
  const int n = ideal.n();
  const SymIndex& index = sym_index(n, d);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Exponents& a : index.monomials()) {
    if (ideal.contains(a)) {
      std::vector<std::uint64_t> row(index.count(), 0);
      row[index.position(a)] = 1;
      rows.push_back(std::move(row));
    }
  }
  if (d >= 1 && !forms.empty()) {
    const SymIndex& lower = sym_index(n, d - 1);
    for (const Exponents& c : lower.monomials()) {
      for (const auto& form : forms) {
        std::vector<std::uint64_t> row(index.count(), 0);
        for (int k = 0; k < n; ++k) {
          const std::uint64_t coeff = form[static_cast<std::size_t>(k)];
          if (coeff == 0) continue;
          Exponents e = c;
          ++e[static_cast<std::size_t>(k)];
          std::uint64_t& slot = row[index.position(e)];
          slot = field.add(slot, coeff);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return index.count();
  return index.count() - rank(MatrixFp::from_rows(rows, index.count()), field);
}

void check_symmetric(const MonomialIdeal& ideal) {
  require(ideal.ring() != Ring::Exterior, ErrorKind::InvalidArgument,
          "symmetric annihilator numbers need a symmetric ideal");
  require(ideal.n() <= kMaxSymmetricVariables, ErrorKind::SizeLimit,
          "too many variables for symmetric annihilator numbers");
}

}  // namespace

std::uint64_t alpha_S_sequence(const MonomialIdeal& ideal, const SequenceSpec& seq, int i, int j,
                               int degree_cap, const PrimeField& field) {
  check_symmetric(ideal);
  const int n = ideal.n();
  require(seq.n() == n, ErrorKind::InvalidArgument, "sequence length differs from n");
  require(i >= 1 && i <= n + 1, ErrorKind::IndexOutOfRange,
          "alpha row " + std::to_string(i) + " outside 1.." + std::to_string(n + 1));
  require(j >= 0, ErrorKind::IndexOutOfRange, "alpha column must be nonnegative");
  require(j + 1 <= degree_cap, ErrorKind::InvalidArgument,
          "alpha_{" + std::to_string(i) + "," + std::to_string(j) +
              "} needs degree " + std::to_string(j + 1) + "; raise the degree cap");
  if (i == n + 1) return j == 0 ? 1 : 0;

  std::int64_t m_j = 0;
  std::int64_t m_next = 0;
  std::int64_t mv_next = 0;
  if (!seq.gamma) {
    check_order(seq.sigma, n);
    std::vector<int> prev(seq.sigma.begin(), seq.sigma.begin() + (i - 1));
    std::vector<int> cur(seq.sigma.begin(), seq.sigma.begin() + i);
    m_j = static_cast<std::int64_t>(quotient_dim_degree(ideal, prev, j));
    m_next = static_cast<std::int64_t>(quotient_dim_degree(ideal, prev, j + 1));
    mv_next = static_cast<std::int64_t>(quotient_dim_degree(ideal, cur, j + 1));
  } else {
    seq.validate(field);
    std::vector<std::vector<std::uint64_t>> forms;
    for (int k = 0; k < i; ++k) {
      const int col = seq.sigma[static_cast<std::size_t>(k)] - 1;
      std::vector<std::uint64_t> form(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) {
        form[static_cast<std::size_t>(a)] = seq.gamma->at(static_cast<std::size_t>(a), static_cast<std::size_t>(col));
      }
      forms.push_back(std::move(form));
    }
    std::vector<std::vector<std::uint64_t>> prev(forms.begin(), forms.end() - 1);
    m_j = static_cast<std::int64_t>(symmetric_quotient_dim(ideal, prev, j, field));
    m_next = static_cast<std::int64_t>(symmetric_quotient_dim(ideal, prev, j + 1, field));
    mv_next = static_cast<std::int64_t>(symmetric_quotient_dim(ideal, forms, j + 1, field));
  }
  const std::int64_t value = m_j - (m_next - mv_next);
  require(value >= 0, ErrorKind::ConsistencyFailure, "negative annihilator dimension");
  return static_cast<std::uint64_t>(value);
}

AnnihilatorTable alpha_S_table(const MonomialIdeal& ideal, const SequenceSpec& seq, int degree_cap,
                               const PrimeField& field) {
  check_symmetric(ideal);
  const int n = ideal.n();
  AnnihilatorTable t(ideal.ring(), n);
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 0; j < degree_cap; ++j) t.set(i, j, alpha_S_sequence(ideal, seq, i, j, degree_cap, field));
  }
  return t;
}

AnnihilatorTable alpha_S_generic(const MonomialIdeal& ideal, const GenericContext& ctx, int degree_cap) {
  check_symmetric(ideal);
  if (degree_cap == 0) degree_cap = ideal.is_zero() ? 1 : ideal.max_degree() + 1;
  require(degree_cap >= 1, ErrorKind::InvalidArgument, "degree cap must be positive");
  const MonomialIdeal gin = gin_rlex(ideal, ctx, degree_cap);
  AnnihilatorTable t = alpha_S_table(gin, SequenceSpec::standard(ideal.n()), degree_cap, ctx.field);
  AnnihilatorTable out(ideal.ring(), ideal.n());
  for (const auto& [key, value] : t.entries()) out.set(key.first, key.second, value);
  return out;
}

std::vector<int> swapped_order(int n, int i) {
  require(i >= 2 && i <= n, ErrorKind::InvalidArgument, "swap position out of range");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::swap(order[static_cast<std::size_t>(i - 2)], order[static_cast<std::size_t>(i - 1)]);
  return order;
}

CounterexampleReport counterexample_E(int n, int i, int j, const GenericContext& ctx) {
  require(n >= 1 && n <= kMaxVariables, ErrorKind::InvalidArgument, "n out of range");
  require(i >= 2 && j >= 1 && i + j <= n, ErrorKind::ParameterInfeasible,
          "exterior counterexample needs i >= 2, j >= 1, i + j <= n; got n=" + std::to_string(n) +
              " i=" + std::to_string(i) + " j=" + std::to_string(j));
  require(n <= 12, ErrorKind::SizeLimit, "exterior counterexample limited to n <= 12");
  const Mask tail = full_mask(n) & ~full_mask(i - 1);
  std::vector<Mask> gens;
  for (Mask m : monomial_index(n).of_degree(j + 1)) {
    if ((m & ~tail) == 0) gens.push_back(m);
  }
  CounterexampleReport rep;
  rep.ring = Ring::Exterior;
  rep.n = n;
  rep.i = i;
  rep.j = j;
  rep.ideal = minimalize(Ring::Exterior, n, gens);
  const MonomialIdeal gin = gin_rlex(rep.ideal, ctx);
  rep.gin_fixed = gin == rep.ideal;
  const AnnihilatorTable generic = alpha_E_generic_with_gin(rep.ideal, gin, ctx);
  rep.generic_i = generic.at(i, j);
  rep.generic_prev = generic.at(i - 1, j);
  SequenceQuotients swapped(rep.ideal, SequenceSpec::permutation(swapped_order(n, i)), ctx.field);
  const auto order = swapped_order(n, i);
  rep.swapped_i = swapped.alpha(order, i, j);
  rep.swapped_prev = swapped.alpha(order, i - 1, j);
  require(rep.swapped_i < rep.generic_i, ErrorKind::VerificationFailure,
          "swapped sequence does not lower alpha_{i,j}");
  return rep;
}

CounterexampleReport counterexample_S(int n, int i, int j, const GenericContext& ctx) {
  require(n >= 1 && n <= kMaxSymmetricVariables, ErrorKind::SizeLimit,
          "symmetric counterexample limited to n <= " + std::to_string(kMaxSymmetricVariables));
  require(i >= 2 && i <= n && j >= 1 && j <= n, ErrorKind::ParameterInfeasible,
          "symmetric counterexample needs 2 <= i <= n, 1 <= j <= n; got n=" + std::to_string(n) +
              " i=" + std::to_string(i) + " j=" + std::to_string(j));
  const Mask tail = full_mask(n) & ~full_mask(i - 1);
  std::vector<Exponents> gens;
  for (const Exponents& a : sym_index(n, j + 1).monomials()) {
    if ((support_of(a) & ~tail) == 0) gens.push_back(a);
  }
  CounterexampleReport rep;
  rep.ring = Ring::SymmetricGeneral;
  rep.n = n;
  rep.i = i;
  rep.j = j;
  rep.ideal = minimalize(n, gens);
  const int cap = j + 1;
  const MonomialIdeal gin = gin_rlex(rep.ideal, ctx, cap);
  rep.gin_fixed = gin == rep.ideal;
  const auto standard = SequenceSpec::standard(n);
  rep.generic_i = alpha_S_sequence(gin, standard, i, j, cap);
  rep.generic_prev = alpha_S_sequence(gin, standard, i - 1, j, cap);
  const auto swapped = SequenceSpec::permutation(swapped_order(n, i));
  rep.swapped_i = alpha_S_sequence(rep.ideal, swapped, i, j, cap);
  rep.swapped_prev = alpha_S_sequence(rep.ideal, swapped, i - 1, j, cap);
  require(rep.swapped_i < rep.generic_i, ErrorKind::VerificationFailure,
          "swapped sequence does not lower alpha_{i,j}");
  return rep;
}

PermutationReport permutation_invariance_check(const MonomialIdeal& ideal,
                                               const AnnihilatorTable& reference,
                                               const GenericContext& ctx, int n_cap) {
  ctx.validate();
  const int n = ideal.n();
  require(n <= n_cap, ErrorKind::SizeLimit,
          "permutation check limited to n <= " + std::to_string(n_cap));
  PermutationReport rep;
  rep.reference = reference;
  if (n == 0) return rep;
  ctx.field.require_exceeds(static_cast<std::uint64_t>(n));
  MatrixFp gamma = random_invertible(static_cast<std::size_t>(n), ctx.field,
                                     ctx.rng(purpose::kPermutation, 0));
  SequenceQuotients q(ideal, SequenceSpec::transform(std::move(gamma)), ctx.field);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  do {
    AnnihilatorTable t = q.table(order);
    if (!(t == reference)) {
      std::ostringstream o;
      o << "annihilator numbers change under the column order (";
      for (std::size_t k = 0; k < order.size(); ++k) o << (k ? " " : "") << order[k];
      o << "):" << table_diff(reference, t);
      fail(ErrorKind::VerificationFailure, o.str());
    }
    ++rep.permutations;
  } while (std::next_permutation(order.begin(), order.end()));
  return rep;
}

PermutationReport permutation_invariance_check(const MonomialIdeal& ideal, const GenericContext& ctx,
                                               int n_cap) {
  const int n = ideal.n();
  require(n <= n_cap, ErrorKind::SizeLimit,
          "permutation check limited to n <= " + std::to_string(n_cap));
  return permutation_invariance_check(ideal, alpha_E_generic(ideal, ctx), ctx, n_cap);
}

}  // namespace shiftkit
