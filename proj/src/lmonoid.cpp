#include "lexstate/lmonoid.hpp"

namespace lexstate {

namespace {

std::string idx(Index i) { return std::to_string(i); }

}  // namespace

FiniteLMonoid::FiniteLMonoid(Table add, Table meet, Table join, Index unit)
    : add_(std::move(add)), meet_(std::move(meet)), join_(std::move(join)), unit_(unit) {
  const std::size_t n = add_.size();
  if (n == 0) throw StructuralError("l-monoid carrier is empty");
  if (meet_.size() != n || join_.size() != n) {
    throw StructuralError("l-monoid tables 'add', 'meet', 'join' differ in size");
  }
  require_index(unit_, n, "unit");
}

SymbolicCancellativeMonoid::SymbolicCancellativeMonoid(std::size_t rank, ConeOrder order)
    : rank_(rank), order_(order) {
  if (rank == 0 || rank > kMaxRank) {
    throw StructuralError("symbolic monoid rank must be in 1.." + std::to_string(kMaxRank));
  }
}

IntTuple SymbolicCancellativeMonoid::meet(const IntTuple& x, const IntTuple& y) const {
  return order_ == ConeOrder::natural ? pointwise_min(x, y) : pointwise_max(x, y);
}

IntTuple SymbolicCancellativeMonoid::join(const IntTuple& x, const IntTuple& y) const {
  return order_ == ConeOrder::natural ? pointwise_max(x, y) : pointwise_min(x, y);
}

bool SymbolicCancellativeMonoid::leq(const IntTuple& x, const IntTuple& y) const {
  return order_ == ConeOrder::natural ? pointwise_leq(x, y) : pointwise_leq(y, x);
}

void SymbolicCancellativeMonoid::require_element(const IntTuple& x) const {
  if (x.size() != rank_ || !is_nonnegative(x)) {
    throw StructuralError("'" + tuple_str(x) + "' is not an element of N^" + std::to_string(rank_));
  }
}

ValidationReport validate_lmonoid(const FiniteLMonoid& m) {
  ValidationReport r("l-monoid");
  const Index n = static_cast<Index>(m.size());

  auto binary = [&](const std::string& name, auto holds, auto lhs, auto rhs) {
    CheckResult& c = r.add(name);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        ++c.instances;
        if (!holds(x, y)) c.fail({idx(x), idx(y)}, idx(lhs(x, y)), idx(rhs(x, y)));
      }
    }
  };
  auto ternary = [&](const std::string& name, auto lhs, auto rhs) {
    CheckResult& c = r.add(name);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        for (Index z = 0; z < n; ++z) {
          ++c.instances;
          Index l = lhs(x, y, z), rr = rhs(x, y, z);
          if (l != rr) c.fail({idx(x), idx(y), idx(z)}, idx(l), idx(rr));
        }
      }
    }
  };

  ternary("add associativity", [&](Index x, Index y, Index z) { return m.add(m.add(x, y), z); },
          [&](Index x, Index y, Index z) { return m.add(x, m.add(y, z)); });
  binary("add commutativity", [&](Index x, Index y) { return m.add(x, y) == m.add(y, x); },
         [&](Index x, Index y) { return m.add(x, y); }, [&](Index x, Index y) { return m.add(y, x); });
  {
    CheckResult& c = r.add("unit");
    for (Index x = 0; x < n; ++x) {
      ++c.instances;
      if (m.add(x, m.unit()) != x) c.fail({idx(x)}, idx(m.add(x, m.unit())), idx(x));
    }
  }
  for (auto [name, op] : {std::pair{"meet", &FiniteLMonoid::meet}, std::pair{"join", &FiniteLMonoid::join}}) {
    auto f = [&m, op = op](Index x, Index y) { return (m.*op)(x, y); };
    ternary(std::string(name) + " associativity", [&](Index x, Index y, Index z) { return f(f(x, y), z); },
            [&](Index x, Index y, Index z) { return f(x, f(y, z)); });
    binary(std::string(name) + " commutativity", [&](Index x, Index y) { return f(x, y) == f(y, x); },
           [&](Index x, Index y) { return f(x, y); }, [&](Index x, Index y) { return f(y, x); });
    CheckResult& c = r.add(std::string(name) + " idempotence");
    for (Index x = 0; x < n; ++x) {
      ++c.instances;
      if (f(x, x) != x) c.fail({idx(x)}, idx(f(x, x)), idx(x));
    }
  }
  binary("absorption meet/join", [&](Index x, Index y) { return m.meet(x, m.join(x, y)) == x; },
         [&](Index x, Index y) { return m.meet(x, m.join(x, y)); }, [](Index x, Index) { return x; });
  binary("absorption join/meet", [&](Index x, Index y) { return m.join(x, m.meet(x, y)) == x; },
         [&](Index x, Index y) { return m.join(x, m.meet(x, y)); }, [](Index x, Index) { return x; });
  ternary("D1", [&](Index x, Index y, Index z) { return m.add(x, m.meet(y, z)); },
          [&](Index x, Index y, Index z) { return m.meet(m.add(x, y), m.add(x, z)); });
  ternary("D2", [&](Index x, Index y, Index z) { return m.add(x, m.join(y, z)); },
          [&](Index x, Index y, Index z) { return m.join(m.add(x, y), m.add(x, z)); });
  return r;
}

bool is_cancellative(const FiniteLMonoid& m) {
  const Index n = static_cast<Index>(m.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (a == b) continue;
      for (Index c = 0; c < n; ++c) {
        if (m.add(a, c) == m.add(b, c)) return false;
      }
    }
  }
  return true;
}

bool is_cancellative(const SymbolicCancellativeMonoid&) { return true; }

bool is_integral(const FiniteLMonoid& m) {
  for (Index x = 0; x < m.size(); ++x) {
    if (!m.leq(x, m.unit())) return false;
  }
  return true;
}

bool is_positive(const FiniteLMonoid& m) {
  for (Index x = 0; x < m.size(); ++x) {
    if (!m.leq(m.unit(), x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FiniteKGroup::FiniteKGroup(FiniteLMonoid base) : base_(std::move(base)) {
  const Index n = static_cast<Index>(base_.size());
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  class_id_.assign(static_cast<std::size_t>(n) * n, kUnassigned);
  // Pairs are visited in lexicographic order, so the first member found for a
  // class is its least pair.
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (class_id_[x * n + y] != kUnassigned) continue;
      const FinitePair rep{x, y};
      const std::size_t id = reps_.size();
      reps_.push_back(rep);
      for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
          if (class_id_[u * n + v] == kUnassigned && equal_witness(rep, {u, v})) class_id_[u * n + v] = id;
        }
      }
    }
  }
}

FinitePair FiniteKGroup::add(const FinitePair& a, const FinitePair& b) const {
  return {base_.add(a.pos, b.pos), base_.add(a.neg, b.neg)};
}

std::optional<Index> FiniteKGroup::equal_witness(const FinitePair& a, const FinitePair& b) const {
  const Index l = base_.add(a.pos, b.neg);
  const Index r = base_.add(b.pos, a.neg);
  for (Index z = 0; z < base_.size(); ++z) {
    if (base_.add(z, l) == base_.add(z, r)) return z;
  }
  return std::nullopt;
}

std::optional<Index> FiniteKGroup::leq_witness(const FinitePair& a, const FinitePair& b) const {
  const Index l = base_.add(a.pos, b.neg);
  const Index r = base_.add(a.neg, b.pos);
  for (Index z = 0; z < base_.size(); ++z) {
    if (base_.leq(base_.add(z, l), base_.add(z, r))) return z;
  }
  return std::nullopt;
}

bool FiniteKGroup::h_injective() const {
  const Index n = static_cast<Index>(base_.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = x + 1; y < n; ++y) {
      if (class_of(embed(x)) == class_of(embed(y))) return false;
    }
  }
  return true;
}

FiniteEnvelope k_envelope(const FiniteLMonoid& m) {
  FiniteEnvelope env{FiniteKGroup(m), {}};
  for (Index x = 0; x < m.size(); ++x) env.embedding.push_back(env.group.embed(x));
  return env;
}

bool k_equal(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b) {
  return k.equal_witness(a, b).has_value();
}

bool k_leq(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b) {
  return k.leq_witness(a, b).has_value();
}

FinitePair k_join(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b) {
  const FiniteLMonoid& m = k.base();
  return k.canonical({m.add(a.pos, b.pos), m.meet(m.add(a.pos, b.neg), m.add(b.pos, a.neg))});
}

FinitePair k_meet(const FiniteKGroup& k, const FinitePair& a, const FinitePair& b) {
  const FiniteLMonoid& m = k.base();
  return k.canonical({m.meet(m.add(a.pos, b.neg), m.add(b.pos, a.neg)), m.add(a.neg, b.neg)});
}

FinitePair image_bound(const FiniteKGroup& k, const FinitePair& e) {
  const FiniteLMonoid& m = k.base();
  if (is_integral(m)) return k.canonical(k.embed(m.meet(e.pos, e.neg)));
  if (is_positive(m)) return k.canonical(k.negate(k.embed(e.neg)));
  throw PreconditionError("image_bound needs the monoid unit to be its top or bottom element");
}

std::string pair_str(const FinitePair& e) { return "[" + idx(e.pos) + "," + idx(e.neg) + "]"; }

// ---------------------------------------------------------------------------

SymbolicEnvelope k_envelope(const SymbolicCancellativeMonoid& m) { return {SymbolicKGroup(m)}; }

bool k_equal(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b) {
  return k.canonical(a) == k.canonical(b);
}

bool k_leq(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b) {
  // z + x1 + y2 <= z + y1 + x2 for some z; translations are order
  // isomorphisms of N^k, so z = 0 decides it.
  const SymbolicCancellativeMonoid& m = k.base();
  return m.leq(a.pos + b.neg, a.neg + b.pos);
}

TuplePair k_join(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b) {
  const SymbolicCancellativeMonoid& m = k.base();
  return {a.pos + b.pos, m.meet(a.pos + b.neg, b.pos + a.neg)};
}

TuplePair k_meet(const SymbolicKGroup& k, const TuplePair& a, const TuplePair& b) {
  const SymbolicCancellativeMonoid& m = k.base();
  return {m.meet(a.pos + b.neg, b.pos + a.neg), a.neg + b.neg};
}

TuplePair image_bound(const SymbolicKGroup& k, const TuplePair& e) {
  const SymbolicCancellativeMonoid& m = k.base();
  if (m.order() == ConeOrder::reversed) return k.embed(m.meet(e.pos, e.neg));
  return k.negate(k.embed(e.neg));
}

std::string pair_str(const TuplePair& e) { return "[" + tuple_str(e.pos) + "," + tuple_str(e.neg) + "]"; }

}  // namespace lexstate
