#include <doctest.h>

#include <set>

#include "lexstate/corpus.hpp"
#include "lexstate/lmonoid.hpp"
#include "envelope_oracle.hpp"
#include "oracles.hpp"

using namespace lexstate;

namespace {

using Oracle = oracle::Envelope;

FiniteLMonoid with_add_entry(const FiniteLMonoid& m, Index x, Index y, Index value) {
  Table add = m.add_table();
  add.at(x, y) = value;
  return FiniteLMonoid(add, m.meet_table(), m.join_table(), m.unit());
}

}  // namespace

TEST_CASE("validate_lmonoid") {
  CHECK(validate_lmonoid(corpus::truncated_addition(4)).ok());
  CHECK(validate_lmonoid(corpus::trivial_lmonoid()).ok());
  CHECK(validate_lmonoid(corpus::idempotent_pair()).ok());

  // 1 + 1 = 0 breaks associativity: (1 + 1) + 2 = 2 but 1 + (1 + 2) = 3.
  const auto bad = with_add_entry(corpus::truncated_addition(4), 1, 1, 0);
  const ValidationReport r = validate_lmonoid(bad);
  CHECK_FALSE(r.ok());
  const CheckResult* assoc = r.find("add associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->passed());
  REQUIRE_FALSE(assoc->violations.empty());
  CHECK(assoc->violations.front().witness.size() == 3);
}

TEST_CASE("malformed tables are structural errors") {
  Table add(2), meet(2), join(3);
  CHECK_THROWS_AS(FiniteLMonoid(add, meet, join, 0), StructuralError);
  CHECK_THROWS_AS(FiniteLMonoid(add, meet, Table(2), 5), StructuralError);
  CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}, "add"), StructuralError);
  CHECK_THROWS_AS(Table::from_rows({{0, 2}, {1, 0}}, "add"), StructuralError);
}

TEST_CASE("is_cancellative") {
  CHECK_FALSE(is_cancellative(corpus::truncated_addition(4)));
  CHECK(is_cancellative(SymbolicCancellativeMonoid(2)));
  CHECK(is_cancellative(corpus::trivial_lmonoid()));
}

TEST_CASE("envelope of the idempotent pair is trivial") {
  const auto env = k_envelope(corpus::idempotent_pair());
  CHECK(env.group.class_count() == 1);
  CHECK_FALSE(env.group.h_injective());
  // [a, 1] ~ [1, 1] with witness z = a.
  const FinitePair a1{1, 0}, one{0, 0};
  CHECK(k_equal(env.group, a1, one));
  auto z = env.group.equal_witness(a1, one);
  REQUIRE(z.has_value());
  CHECK(*z == 1);
}

TEST_CASE("symbolic rank-1 envelope is Z") {
  const auto env = k_envelope(SymbolicCancellativeMonoid(1));
  const SymbolicKGroup& k = env.group;
  CHECK(k_equal(k, {{3}, {1}}, {{4}, {2}}));
  CHECK_FALSE(k_equal(k, {{3}, {1}}, {{4}, {1}}));
  CHECK(k_leq(k, {{1}, {0}}, {{3}, {0}}));
  CHECK(k.canonical(k_join(k, {{2}, {0}}, {{5}, {0}})) == IntTuple{5});
  CHECK(k.canonical(k_meet(k, {{2}, {0}}, {{5}, {0}})) == IntTuple{2});
  for (std::int64_t x = 0; x <= 8; ++x) {
    CHECK(k.canonical(k.embed({x})) == IntTuple{x});
    for (std::int64_t y = 0; y <= 8; ++y) {
      if (x != y) CHECK_FALSE(k_equal(k, k.embed({x}), k.embed({y})));
    }
  }
  CHECK(k_equal(k, k.embed(k.base().unit()), k.zero()));
}

TEST_CASE("image_bound on the symbolic rank-1 monoid") {
  for (auto order : {ConeOrder::natural, ConeOrder::reversed}) {
    const auto env = k_envelope(SymbolicCancellativeMonoid(1, order));
    const TuplePair e{{1}, {4}};
    const TuplePair bound = image_bound(env.group, e);
    CHECK(k_leq(env.group, bound, e));
    // The inequality [a,b] >= [(a∧b)+(a∧b), a∧b] in the reversed (integral) order.
    if (order == ConeOrder::reversed) CHECK(k_leq(env.group, env.group.embed({4}), e));
  }
  oracle::Gen g(5);
  for (auto order : {ConeOrder::natural, ConeOrder::reversed}) {
    const auto env = k_envelope(SymbolicCancellativeMonoid(3, order));
    for (int i = 0; i < 500; ++i) {
      const IntTuple a = [&] { auto v = g.cone_element(3, 6); return IntTuple(v.begin(), v.end()); }();
      const IntTuple b = [&] { auto v = g.cone_element(3, 6); return IntTuple(v.begin(), v.end()); }();
      CHECK(k_leq(env.group, image_bound(env.group, {a, b}), {a, b}));
    }
  }
}

TEST_CASE("symbolic universal property") {
  // f: N^2 -> Z^2 given by a matrix; the induced map on Z^2 is the same
  // matrix, so it agrees with f through h and is fixed on the generators.
  const std::int64_t A[2][2] = {{2, -1}, {0, 3}};
  auto apply = [&](const IntTuple& v) {
    return IntTuple{A[0][0] * v[0] + A[0][1] * v[1], A[1][0] * v[0] + A[1][1] * v[1]};
  };
  const auto env = k_envelope(SymbolicCancellativeMonoid(2));
  for (const IntTuple& x : tuple_window(2, 5)) {
    CHECK(apply(env.group.canonical(env.group.embed(x))) == apply(x));
  }
  CHECK(env.group.canonical(env.group.embed(unit_tuple(2, 0))) == unit_tuple(2, 0));
  CHECK(env.group.canonical(env.group.embed(unit_tuple(2, 1))) == unit_tuple(2, 1));
}

TEST_CASE("symbolic envelope lattice and distributivity") {
  oracle::Gen g(9);
  for (auto order : {ConeOrder::natural, ConeOrder::reversed}) {
    const auto env = k_envelope(SymbolicCancellativeMonoid(2, order));
    const SymbolicKGroup& k = env.group;
    auto rnd = [&] {
      auto p = g.cone_element(2, 5), q = g.cone_element(2, 5);
      return TuplePair{IntTuple(p.begin(), p.end()), IntTuple(q.begin(), q.end())};
    };
    for (int i = 0; i < 300; ++i) {
      const TuplePair a = rnd(), b = rnd(), c = rnd();
      const TuplePair j = k_join(k, a, b), mt = k_meet(k, a, b);
      CHECK(k_leq(k, a, j));
      CHECK(k_leq(k, b, j));
      CHECK(k_leq(k, mt, a));
      CHECK(k_leq(k, mt, b));
      if (k_leq(k, a, c) && k_leq(k, b, c)) CHECK(k_leq(k, j, c));
      CHECK(k_equal(k, k.add(a, k_join(k, b, c)), k_join(k, k.add(a, b), k.add(a, c))));
    }
  }
}

TEST_CASE("finite envelopes agree with the brute-force oracle") {
  for (const auto& [name, m] : corpus::small_lmonoids()) {
    CAPTURE(name);
    REQUIRE(validate_lmonoid(m).ok());
    const Oracle o{m};
    const auto env = k_envelope(m);
    const FiniteKGroup& k = env.group;
    const auto ps = o.pairs();

    std::set<std::size_t> ids;
    for (const auto& a : ps) {
      ids.insert(k.class_of(a));
      for (const auto& b : ps) {
        REQUIRE(k_equal(k, a, b) == o.equal(a, b));
        REQUIRE(k_leq(k, a, b) == o.leq(a, b));
        REQUIRE((k.class_of(a) == k.class_of(b)) == o.equal(a, b));
      }
    }
    CHECK(ids.size() == k.class_count());
    for (std::size_t id = 0; id < k.class_count(); ++id) {
      const FinitePair rep = k.representatives()[id];
      for (const auto& a : ps) {
        if (k.class_of(a) == id) CHECK_FALSE(a < rep);
      }
    }

    // ~ is an equivalence.
    for (const auto& a : ps) {
      CHECK(o.equal(a, a));
      for (const auto& b : ps) {
        if (!o.equal(a, b)) continue;
        CHECK(o.equal(b, a));
        for (const auto& c : ps) {
          if (o.equal(b, c)) CHECK(o.equal(a, c));
        }
      }
    }

    // Class operations do not depend on the representative.
    for (const auto& a : ps) {
      for (const auto& a2 : ps) {
        if (!o.equal(a, a2)) continue;
        for (const auto& b : ps) {
          CHECK(o.equal(k.add(a, b), k.add(a2, b)));
          CHECK(o.equal(k_join(k, a, b), k_join(k, a2, b)));
          CHECK(o.equal(k_meet(k, a, b), k_meet(k, a2, b)));
          CHECK(o.equal(k.negate(a), k.negate(a2)));
        }
      }
    }

    // Least upper and greatest lower bounds, distributivity.
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        const FinitePair j = k_join(k, a, b), mt = k_meet(k, a, b);
        CHECK(o.leq(a, j));
        CHECK(o.leq(b, j));
        CHECK(o.leq(mt, a));
        CHECK(o.leq(mt, b));
        for (const auto& c : ps) {
          if (o.leq(a, c) && o.leq(b, c)) CHECK(o.leq(j, c));
          if (o.leq(c, a) && o.leq(c, b)) CHECK(o.leq(c, mt));
          CHECK(o.equal(k.add(a, k_join(k, b, c)), k_join(k, k.add(a, b), k.add(a, c))));
        }
      }
    }

    // h is a homomorphism, injective iff M is cancellative.
    CHECK(o.equal(env.embedding[m.unit()], k.zero()));
    for (Index x = 0; x < m.size(); ++x) {
      for (Index y = 0; y < m.size(); ++y) {
        CHECK(o.equal(k.embed(m.add(x, y)), k.add(k.embed(x), k.embed(y))));
        CHECK(o.equal(k.embed(m.meet(x, y)), k_meet(k, k.embed(x), k.embed(y))));
        CHECK(o.equal(k.embed(m.join(x, y)), k_join(k, k.embed(x), k.embed(y))));
      }
    }
    CHECK(k.h_injective() == o.cancellative());
    CHECK(is_cancellative(m) == o.cancellative());
  }
}

TEST_CASE("truncated addition: antisymmetric order on classes") {
  const auto m = corpus::truncated_addition(4);
  const auto env = k_envelope(m);
  const Oracle o{m};
  for (const auto& a : env.group.representatives()) {
    for (const auto& b : env.group.representatives()) {
      if (o.leq(a, b) && o.leq(b, a)) CHECK(a == b);
    }
  }
}

TEST_CASE("image_bound lies in the image subgroup and below its argument") {
  for (const auto& [name, m] : corpus::small_lmonoids()) {
    CAPTURE(name);
    const auto env = k_envelope(m);
    const FiniteKGroup& k = env.group;
    const Oracle o{m};
    // Subgroup generated by h[M], as a set of class ids.
    std::set<std::size_t> sub{k.class_of(k.zero())};
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::size_t> cur(sub.begin(), sub.end());
      for (std::size_t id : cur) {
        const FinitePair e = k.representatives()[id];
        for (const FinitePair& hx : env.embedding) {
          for (const FinitePair& t : {k.add(e, hx), k.add(e, k.negate(hx))}) {
            if (sub.insert(k.class_of(t)).second) grew = true;
          }
        }
      }
    }
    for (const auto& e : o.pairs()) {
      const FinitePair bound = image_bound(k, e);
      CHECK(sub.count(k.class_of(bound)) == 1);
      CHECK(o.leq(bound, e));
    }
  }
}
