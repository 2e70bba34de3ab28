#include "lexstate/semihoop.hpp"

#include <algorithm>

namespace lexstate {

FiniteSemihoop::FiniteSemihoop(Table times, Table impl, Table meet, Index top)
    : times_(std::move(times)), impl_(std::move(impl)), meet_(std::move(meet)), top_(top) {
  const std::size_t n = times_.size();
  if (n == 0) throw StructuralError("semihoop carrier is empty");
  if (impl_.size() != n || meet_.size() != n) {
    throw StructuralError("semihoop tables 'times', 'impl', 'meet' differ in size");
  }
  require_index(top_, n, "top");
}

std::vector<Index> FiniteSemihoop::carrier() const {
  std::vector<Index> c(size());
  for (Index i = 0; i < c.size(); ++i) c[i] = i;
  return c;
}

Table FiniteSemihoop::join_table() const {
  Table t(size());
  for (Index x = 0; x < size(); ++x) {
    for (Index y = 0; y < size(); ++y) t.at(x, y) = pseudo_join(*this, x, y);
  }
  return t;
}

SymbolicConeHoop::SymbolicConeHoop(std::size_t rank) : rank_(rank) {
  if (rank == 0 || rank > kMaxRank) {
    throw StructuralError("cone hoop rank must be in 1.." + std::to_string(kMaxRank));
  }
}

FiniteLMonoid lmonoid_reduct(const FiniteSemihoop& h) {
  return FiniteLMonoid(h.times_table(), h.meet_table(), h.join_table(), h.top());
}

SymbolicCancellativeMonoid lmonoid_reduct(const SymbolicConeHoop& h) {
  return SymbolicCancellativeMonoid(h.rank(), ConeOrder::reversed);
}

Rational WeightState::operator()(const IntTuple& m) const {
  if (m.size() != lambda.size()) throw StructuralError("state weights do not match the cone rank");
  Rational acc(0);
  for (std::size_t i = 0; i < m.size(); ++i) acc -= lambda[i] * Rational(m[i]);
  return acc;
}

ValidationReport validate_semihoop(const FiniteSemihoop& h) {
  const auto c = h.carrier();
  return validate_semihoop(h, std::span<const Index>(c));
}

ValidationReport validate_semihoop(const SymbolicConeHoop& h, int bound) {
  const auto w = h.window(bound);
  return validate_semihoop(h, std::span<const IntTuple>(w), bound);
}

// ---------------------------------------------------------------------------

namespace {

/// Rank of a rational matrix by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<TableState> enumerate_states_finite(const FiniteSemihoop& h) {
  const std::size_t n = h.size();
  std::vector<std::vector<Rational>> rows;
  {
    std::vector<Rational> v1(n, Rational(0));
    v1[h.top()] = Rational(1);
    rows.push_back(std::move(v1));
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = x; y < n; ++y) {
      std::vector<Rational> row(n, Rational(0));
      row[h.mul(x, y)] += Rational(1);
      row[x] -= Rational(1);
      row[y] -= Rational(1);
      if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return !q.is_zero(); })) {
        rows.push_back(std::move(row));
      }
    }
  }
  if (exact_rank(rows, n) != n) {
    throw ConsistencyError("(v1)+(v2) leave a nontrivial solution space; not a finite semihoop state set");
  }
  TableState zero{std::vector<Rational>(n, Rational(0))};
  const auto carrier = h.carrier();
  if (!validate_state(h, zero, std::span<const Index>(carrier)).ok()) {
    throw ConsistencyError("the zero map fails the state axioms");
  }
  return {zero};
}

// ---------------------------------------------------------------------------

FiniteGroupStateResult state_to_kgroup_state(const FiniteSemihoop& h, const TableState& w) {
  if (w.values.size() != h.size()) throw StructuralError("state table does not cover the carrier");
  FiniteKGroup k(lmonoid_reduct(h));
  const Index n = static_cast<Index>(h.size());
  std::vector<std::optional<Rational>> values(k.class_count());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const FinitePair e{x, y};
      const Rational v = w(x) - w(y);
      auto& slot = values[k.class_of(e)];
      if (!slot) {
        slot = v;
      } else if (*slot != v) {
        throw ConsistencyError("class of " + pair_str(e) + " gets both " + slot->str() + " and " + v.str());
      }
    }
  }
  FiniteGroupState sigma{k, {}};
  for (auto& v : values) sigma.values.push_back(*v);

  ValidationReport r("envelope state");
  const auto& reps = k.representatives();
  {
    CheckResult& c = r.add("additive");
    for (const auto& a : reps) {
      for (const auto& b : reps) {
        ++c.instances;
        Rational l = sigma(k.add(a, b)), rr = sigma(a) + sigma(b);
        if (l != rr) c.fail({pair_str(a), pair_str(b)}, l.str(), rr.str());
      }
    }
  }
  {
    CheckResult& c = r.add("positive");
    for (const auto& a : reps) {
      ++c.instances;
      if (k_leq(k, k.zero(), a) && sigma(a) < Rational(0)) c.fail({pair_str(a)}, sigma(a).str(), "0");
    }
  }
  {
    CheckResult& c = r.add("sigma o h = w");
    for (Index x = 0; x < n; ++x) {
      ++c.instances;
      if (sigma(k.embed(x)) != w(x)) c.fail({std::to_string(x)}, sigma(k.embed(x)).str(), w(x).str());
    }
  }
  return {std::move(sigma), std::move(r)};
}

Rational SymbolicGroupState::operator()(const TuplePair& e) const {
  const IntTuple c = group.canonical(e);
  if (c.size() != lambda.size()) throw StructuralError("group state weights do not match the rank");
  Rational acc(0);
  for (std::size_t i = 0; i < c.size(); ++i) acc -= lambda[i] * Rational(c[i]);
  return acc;
}

SymbolicGroupState state_to_kgroup_state(const SymbolicConeHoop& h, const WeightState& w) {
  if (w.lambda.size() != h.rank()) throw StructuralError("state weights do not match the cone rank");
  return {k_envelope(lmonoid_reduct(h)).group, w.lambda};
}

RecoveredState kgroup_state_to_state(const FiniteSemihoop& h, const FiniteGroupState& sigma) {
  TableState w;
  for (Index x = 0; x < h.size(); ++x) w.values.push_back(sigma(sigma.group.embed(x)));
  const auto carrier = h.carrier();
  ValidationReport r = validate_state(h, w, std::span<const Index>(carrier));
  return {std::move(w), std::move(r)};
}

RecoveredWeights kgroup_state_to_state(const SymbolicConeHoop& h, const SymbolicGroupState& sigma, int bound) {
  if (sigma.lambda.size() != h.rank()) throw StructuralError("group state weights do not match the cone rank");
  // w(g_i) = σ(h(g_i)) determines the weights; w(m) = -<lambda, m>.
  WeightState w;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    const IntTuple g = unit_tuple(h.rank(), i);
    w.lambda.push_back(-sigma(sigma.group.embed(g)));
  }
  const auto window = h.window(bound);
  ValidationReport r = validate_state(h, w, std::span<const IntTuple>(window), bound);
  {
    CheckResult& c = r.add("w = sigma o h");
    for (const auto& m : window) {
      ++c.instances;
      if (w(m) != sigma(sigma.group.embed(m))) c.fail({tuple_str(m)}, w(m).str(), sigma(sigma.group.embed(m)).str());
    }
  }
  return {std::move(w), std::move(r)};
}

}  // namespace lexstate
