#include "lexstate/ibp0.hpp"

#include <mutex>
#include <random>
#include <unordered_set>

#include "interned.hpp"

namespace lexstate {

namespace {

using detail::InternedAlgebra;

/// Algebra with the element type spelled out, for the scan templates.
struct AlgebraOps {
  using element_type = Element;
  const Algebra& a;
  Element mul(const Element& x, const Element& y) const { return a.mul(x, y); }
  Element impl(const Element& x, const Element& y) const { return a.impl(x, y); }
  Element meet(const Element& x, const Element& y) const { return a.meet(x, y); }
  Element join(const Element& x, const Element& y) const { return a.join(x, y); }
  Element bot() const { return a.bot(); }
  Element top() const { return a.top(); }
  bool leq(const Element& x, const Element& y) const { return a.leq(x, y); }
  std::string label(const Element& x) const { return a.label(x); }
};

/// Iterates units, pairs and triples of a carrier, either exhaustively or as
/// a fixed number of seeded random draws.
template <class E>
class Scan {
 public:
  Scan(std::span<const E> carrier, std::optional<std::size_t> samples = std::nullopt, std::uint64_t seed = 0)
      : carrier_(carrier), samples_(samples), rng_(seed) {}

  template <class F>
  void units(CheckResult& c, F f) {
    for (const auto& x : carrier_) {
      ++c.instances;
      f(x);
    }
  }

  template <class F>
  void pairs(CheckResult& c, F f) {
    if (samples_) {
      for (std::size_t i = 0; i < *samples_; ++i) {
        ++c.instances;
        const E& x = pick();
        f(x, pick());
      }
      return;
    }
    for (const auto& x : carrier_) {
      for (const auto& y : carrier_) {
        ++c.instances;
        f(x, y);
      }
    }
  }

  template <class F>
  void triples(CheckResult& c, F f) {
    if (samples_) {
      for (std::size_t i = 0; i < *samples_; ++i) {
        ++c.instances;
        const E& x = pick();
        const E& y = pick();
        f(x, y, pick());
      }
      return;
    }
    for (const auto& x : carrier_) {
      for (const auto& y : carrier_) {
        for (const auto& z : carrier_) {
          ++c.instances;
          f(x, y, z);
        }
      }
    }
  }

 private:
  const E& pick() {
    std::uniform_int_distribution<std::size_t> d(0, carrier_.size() - 1);
    return carrier_[d(rng_)];
  }

  std::span<const E> carrier_;
  std::optional<std::size_t> samples_;
  std::mt19937_64 rng_;
};

template <class O>
void mtl_checks(const O& a, Scan<typename O::element_type>& scan, ValidationReport& r) {
  using E = typename O::element_type;
  auto L = [&](std::initializer_list<E> xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(a.label(x));
    return out;
  };
  const E zero = a.bot();
  const E one = a.top();

  auto commutative = [&](const char* name, auto op) {
    CheckResult& c = r.add(name);
    scan.pairs(c, [&](const E& x, const E& y) {
      E l = op(x, y), rr = op(y, x);
      if (l != rr) c.fail(L({x, y}), a.label(l), a.label(rr));
    });
  };
  auto associative = [&](const char* name, auto op) {
    CheckResult& c = r.add(name);
    scan.triples(c, [&](const E& x, const E& y, const E& z) {
      E l = op(op(x, y), z), rr = op(x, op(y, z));
      if (l != rr) c.fail(L({x, y, z}), a.label(l), a.label(rr));
    });
  };
  auto meet = [&](const E& x, const E& y) { return a.meet(x, y); };
  auto join = [&](const E& x, const E& y) { return a.join(x, y); };
  auto mul = [&](const E& x, const E& y) { return a.mul(x, y); };

  commutative("meet commutative", meet);
  associative("meet associative", meet);
  commutative("join commutative", join);
  associative("join associative", join);
  {
    CheckResult& c = r.add("absorption");
    scan.pairs(c, [&](const E& x, const E& y) {
      E l = a.meet(x, a.join(x, y));
      if (l != x) return c.fail(L({x, y}), a.label(l), a.label(x));
      l = a.join(x, a.meet(x, y));
      if (l != x) c.fail(L({x, y}), a.label(l), a.label(x));
    });
  }
  {
    CheckResult& c = r.add("bounds");
    scan.units(c, [&](const E& x) {
      if (a.meet(zero, x) != zero) return c.fail(L({x}), a.label(a.meet(zero, x)), a.label(zero));
      if (a.meet(x, one) != x) c.fail(L({x}), a.label(a.meet(x, one)), a.label(x));
    });
  }
  commutative("product commutative", mul);
  associative("product associative", mul);
  {
    CheckResult& c = r.add("product unit");
    scan.units(c, [&](const E& x) {
      if (a.mul(x, one) != x) c.fail(L({x}), a.label(a.mul(x, one)), a.label(x));
    });
  }
  {
    CheckResult& c = r.add("residuation");
    scan.triples(c, [&](const E& x, const E& y, const E& z) {
      const bool l = a.leq(a.mul(x, y), z);
      const bool rr = a.leq(y, a.impl(x, z));
      if (l != rr) c.fail(L({x, y, z}), l ? "x*y<=z" : "not x*y<=z", rr ? "y<=x->z" : "not y<=x->z");
    });
  }
  {
    CheckResult& c = r.add("prelinearity");
    scan.pairs(c, [&](const E& x, const E& y) {
      E l = a.join(a.impl(x, y), a.impl(y, x));
      if (l != one) c.fail(L({x, y}), a.label(l), a.label(one));
    });
  }
}

/// Exhaustive MTL checks over interned ids.
void exhaustive_mtl_checks(const Algebra& a, std::span<const Element> carrier, ValidationReport& r) {
  const InternedAlgebra ia(a, carrier);
  std::vector<InternedAlgebra::Id> ids(carrier.size());
  for (InternedAlgebra::Id i = 0; i < ids.size(); ++i) ids[i] = i;
  Scan<InternedAlgebra::Id> scan(ids);
  mtl_checks(ia, scan, r);
}

void ibp0_checks(const Algebra& a, std::span<const Element> carrier, ValidationReport& r) {
  {
    CheckResult& c = r.add("(DL)");
    for (const auto& x : carrier) {
      ++c.instances;
      Element l = a.square(a.twice(x)), rr = a.twice(a.square(x));
      if (l != rr) c.fail({a.label(x)}, a.label(l), a.label(rr));
    }
  }
  {
    CheckResult& c = r.add("(Inv)");
    for (const auto& x : carrier) {
      ++c.instances;
      Element l = a.neg(a.neg(x));
      if (l != x) c.fail({a.label(x)}, a.label(l), a.label(x));
    }
  }
}

std::optional<int> window_of(const Algebra& a, int bound) {
  if (a.is_finite()) return std::nullopt;
  return bound;
}

ValidationReport compute_ibp0(const Algebra& a, int bound, const ScanPolicy& policy);

}  // namespace

ValidationReport validate_mtl(const Algebra& a, std::span<const Element> carrier, std::optional<int> window) {
  ValidationReport r("MTL", window);
  exhaustive_mtl_checks(a, carrier, r);
  return r;
}

ValidationReport validate_ibp0(const Algebra& a, int bound, const ScanPolicy& policy) {
  if (bound < 1) throw PreconditionError("window bound must be at least 1");
  // Reports are memoized per (algebra, bound, policy).
  struct Entry {
    Algebra algebra;
    int bound;
    ScanPolicy policy;
    ValidationReport report;
  };
  static std::mutex mu;
  static std::vector<Entry> cache;
  auto same = [&](const Entry& e) {
    return e.bound == bound && e.policy.triple_budget == policy.triple_budget && e.policy.samples == policy.samples &&
           e.policy.seed == policy.seed && e.algebra == a;
  };
  {
    std::lock_guard lock(mu);
    for (const auto& e : cache) {
      if (same(e)) return e.report;
    }
  }
  ValidationReport r = compute_ibp0(a, bound, policy);
  std::lock_guard lock(mu);
  cache.push_back({a, bound, policy, r});
  return r;
}

namespace {

ValidationReport compute_ibp0(const Algebra& a, int bound, const ScanPolicy& policy) {
  const auto carrier = a.window(bound);
  ValidationReport r("IBP0", window_of(a, bound));
  const double cube = static_cast<double>(carrier.size()) * carrier.size() * carrier.size();
  if (!a.is_product() || cube <= static_cast<double>(policy.triple_budget)) {
    exhaustive_mtl_checks(a, carrier, r);
  } else {
    const auto& factors = a.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Algebra f = std::visit([](const auto& x) { return Algebra(x); }, factors[i]);
      ValidationReport fr = validate_ibp0(f, bound, policy);
      r.merge(fr, "factor " + std::to_string(i) + ": ");
    }
    ValidationReport mixed("mixed");
    Scan<Element> scan(carrier, policy.samples, policy.seed);
    mtl_checks(AlgebraOps{a}, scan, mixed);
    r.merge(mixed, "sampled: ");
  }
  ibp0_checks(a, carrier, r);
  return r;
}

}  // namespace

void require_ibp0(const Algebra& a, int bound) {
  // Validation results are memoized per (algebra, bound).
  static std::mutex mu;
  static std::vector<std::pair<Algebra, int>> validated;
  {
    std::lock_guard lock(mu);
    for (const auto& [alg, b] : validated) {
      if (b == bound && alg == a) return;
    }
  }
  ValidationReport r = validate_ibp0(a, bound);
  if (!r.ok()) {
    const CheckResult* f = r.first_failure();
    std::string witness;
    for (const auto& w : f->violations.front().witness) witness += (witness.empty() ? "" : ",") + w;
    throw PreconditionError("not an IBP0-algebra: " + f->axiom + " fails at " + witness);
  }
  std::lock_guard lock(mu);
  validated.emplace_back(a, bound);
}

// ---------------------------------------------------------------------------

bool in_skeleton(const Algebra& a, const Element& x) { return a.join(x, a.neg(x)) == a.top(); }
bool in_radical(const Algebra& a, const Element& x) { return a.lt(a.neg(x), x); }
bool in_coradical(const Algebra& a, const Element& x) { return a.lt(x, a.neg(x)); }

Skeleton boolean_skeleton(const Algebra& a, int bound) {
  Skeleton s;
  s.report = ValidationReport("Boolean skeleton", window_of(a, bound));
  for (auto& x : a.window(bound)) {
    if (in_skeleton(a, x)) s.elements.push_back(std::move(x));
  }
  const Element zero = a.bot();
  for (const auto& x : s.elements) {
    if (x == zero) continue;
    bool minimal = true;
    for (const auto& y : s.elements) {
      if (y != zero && y != x && a.leq(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) s.atoms.push_back(x);
  }

  auto member = [&](const Element& x) { return in_skeleton(a, x); };
  CheckResult& neg = s.report.add("closed under negation");
  for (const auto& x : s.elements) {
    ++neg.instances;
    if (!member(a.neg(x))) neg.fail({a.label(x)}, a.label(a.neg(x)), "complemented");
  }
  CheckResult& prod = s.report.add("product is meet");
  CheckResult& sum = s.report.add("oplus is join");
  for (const auto& x : s.elements) {
    for (const auto& y : s.elements) {
      ++prod.instances;
      ++sum.instances;
      Element p = a.mul(x, y);
      if (p != a.meet(x, y) || !member(p)) prod.fail({a.label(x), a.label(y)}, a.label(p), a.label(a.meet(x, y)));
      Element q = a.oplus(x, y);
      if (q != a.join(x, y) || !member(q)) sum.fail({a.label(x), a.label(y)}, a.label(q), a.label(a.join(x, y)));
    }
  }
  CheckResult& comp = s.report.add("complement");
  for (const auto& x : s.elements) {
    ++comp.instances;
    if (a.meet(x, a.neg(x)) != zero) comp.fail({a.label(x)}, a.label(a.meet(x, a.neg(x))), a.label(zero));
  }
  return s;
}

Radical radical(const Algebra& a, int bound) {
  require_ibp0(a, bound);
  Radical rad;
  const auto window = a.window(bound);
  for (const auto& x : window) {
    if (in_radical(a, x)) {
      rad.elements.push_back(x);
      rad.coradical.push_back(a.neg(x));
    }
  }

  // Keep the semihoop triple scan affordable by shrinking the window.
  const ScanPolicy policy;
  int scan_bound = bound;
  std::vector<Element> scanned = rad.elements;
  while (!a.is_finite() && scan_bound > 1 &&
         static_cast<double>(scanned.size()) * scanned.size() * scanned.size() > policy.triple_budget) {
    --scan_bound;
    scanned.clear();
    for (const auto& x : a.window(scan_bound)) {
      if (in_radical(a, x)) scanned.push_back(x);
    }
  }
  const InternedAlgebra h(a, scanned);
  std::vector<InternedAlgebra::Id> ids(scanned.size());
  for (InternedAlgebra::Id i = 0; i < ids.size(); ++i) ids[i] = i;
  rad.report = validate_semihoop(h, std::span<const InternedAlgebra::Id>(ids), window_of(a, scan_bound));
  if (!a.is_finite() && scan_bound != bound) {
    rad.report.add("scan window").note = "semihoop axioms scanned at bound " + std::to_string(scan_bound);
  }

  CheckResult& closed = rad.report.add("b v c in radical");
  for (const auto& b : window) {
    if (!in_skeleton(a, b)) continue;
    for (const auto& c : rad.elements) {
      ++closed.instances;
      if (!in_radical(a, a.join(b, c))) closed.fail({a.label(b), a.label(c)}, a.label(a.join(b, c)), "radical");
    }
  }

  if (a.is_finite()) {
    const std::size_t n = rad.elements.size();
    auto position = [&](const Element& x) -> Index {
      for (Index i = 0; i < n; ++i) {
        if (rad.elements[i] == x) return i;
      }
      throw ConsistencyError("radical not closed: " + a.label(x));
    };
    Table times(n), impl(n), meet(n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        times.at(i, j) = position(a.mul(rad.elements[i], rad.elements[j]));
        impl.at(i, j) = position(a.impl(rad.elements[i], rad.elements[j]));
        meet.at(i, j) = position(a.meet(rad.elements[i], rad.elements[j]));
      }
    }
    rad.table.emplace(std::move(times), std::move(impl), std::move(meet), position(a.top()));
  }
  return rad;
}

IntTuple radical_coordinates(const Algebra& a, const Element& x) {
  IntTuple out;
  for (std::size_t i = 0; i < a.factors().size(); ++i) {
    if (!std::holds_alternative<RotationAlgebra>(a.factors()[i])) continue;
    const auto& s = std::get<SignedTuple>(x[i]);
    if (!s.radical) throw PreconditionError(a.label(x) + " is not a radical element");
    for (auto v : s.exponent) {
      if (out.size() == kMaxRank) throw PreconditionError("total cone rank exceeds " + std::to_string(kMaxRank));
      out.push_back(v);
    }
  }
  return out;
}

Element radical_element(const Algebra& a, const IntTuple& coords) {
  if (coords.size() != a.cone_rank()) throw StructuralError("coordinate count does not match the cone rank");
  Element out;
  std::size_t pos = 0;
  for (const auto& f : a.factors()) {
    if (const auto* fin = std::get_if<FiniteMTL>(&f)) {
      out.push_back(fin->top());
    } else {
      const auto& rot = std::get<RotationAlgebra>(f);
      SignedTuple s{true, {}};
      for (std::size_t k = 0; k < rot.rank(); ++k) s.exponent.push_back(coords[pos++]);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Decomposition decompose_element(const Algebra& a, const Element& x) {
  Decomposition d{a.neg(a.square(a.neg(a.square(x)))), a.join(x, a.neg(x))};
  if (!in_skeleton(a, d.b)) throw ConsistencyError("b of " + a.label(x) + " = " + a.label(d.b) + " is not complemented");
  if (!in_radical(a, d.c)) throw ConsistencyError("c of " + a.label(x) + " = " + a.label(d.c) + " is not radical");
  if (recompose(a, d) != x) {
    throw ConsistencyError("recomposition of " + a.label(x) + " gives " + a.label(recompose(a, d)));
  }
  return d;
}

Element recompose(const Algebra& a, const Decomposition& d) {
  return a.meet(a.join(d.b, a.neg(d.c)), a.join(a.neg(d.b), d.c));
}

// ---------------------------------------------------------------------------

FiniteMTL rotate(const FiniteSemihoop& h) {
  const Index n = static_cast<Index>(h.size());
  struct Signed {
    bool radical;
    Index x;
  };
  auto decode = [n](Index i) { return i < n ? Signed{true, i} : Signed{false, i - n}; };
  auto encode = [n](Signed s) { return s.radical ? s.x : s.x + n; };
  const Index one = h.top();

  Table times(2 * n), impl(2 * n), meet(2 * n), join(2 * n);
  for (Index i = 0; i < 2 * n; ++i) {
    for (Index j = 0; j < 2 * n; ++j) {
      const Signed p = decode(i), q = decode(j);
      Signed t{}, r{}, m{}, jn{};
      if (p.radical && q.radical) {
        t = {true, h.mul(p.x, q.x)};
        r = {true, h.impl(p.x, q.x)};
        m = {true, h.meet(p.x, q.x)};
        jn = {true, pseudo_join(h, p.x, q.x)};
      } else if (p.radical) {
        t = {false, h.impl(p.x, q.x)};
        r = {false, h.mul(p.x, q.x)};
        m = q;
        jn = p;
      } else if (q.radical) {
        t = {false, h.impl(q.x, p.x)};
        r = {true, one};
        m = p;
        jn = q;
      } else {
        t = {false, one};
        r = {true, h.impl(q.x, p.x)};
        m = {false, pseudo_join(h, p.x, q.x)};
        jn = {false, h.meet(p.x, q.x)};
      }
      times.at(i, j) = encode(t);
      impl.at(i, j) = encode(r);
      meet.at(i, j) = encode(m);
      join.at(i, j) = encode(jn);
    }
  }
  FiniteMTL out(std::move(times), std::move(impl), std::move(meet), std::move(join), n + one, one);
  ValidationReport r = validate_ibp0(Algebra(out));
  if (!r.ok()) {
    const CheckResult* f = r.first_failure();
    std::string witness;
    for (const auto& w : f->violations.front().witness) witness += (witness.empty() ? "" : ",") + w;
    throw PreconditionError("rotation rejected: " + f->axiom + " fails at " + witness);
  }
  return out;
}

Algebra rotate(const SymbolicConeHoop& h) {
  Algebra out{RotationAlgebra(h.rank())};
  int bound = kDefaultWindow;
  auto size = [&](int b) {
    double s = 2;
    for (std::size_t i = 0; i < h.rank(); ++i) s *= (b + 1);
    return s;
  };
  while (bound > 1 && size(bound) > 162) --bound;
  require_ibp0(out, bound);
  return out;
}

Algebra product(const std::vector<Algebra>& factors, int bound) {
  if (factors.empty()) throw PreconditionError("product of an empty factor list");
  for (const auto& f : factors) require_ibp0(f, bound);
  return Algebra::product(factors);
}

}  // namespace lexstate
