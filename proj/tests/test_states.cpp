#include <doctest.h>

#include "lexstate/corpus.hpp"
#include "lexstate/states.hpp"
#include "oracles.hpp"

using namespace lexstate;

namespace {

Algebra chang(std::size_t k) { return Algebra(RotationAlgebra(k)); }

const SignedTuple& rot(const Element& x, std::size_t i = 0) { return std::get<SignedTuple>(x[i]); }

std::int64_t dot(const std::vector<std::int64_t>& lambda, const IntTuple& m) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < m.size(); ++i) acc += lambda[i] * m[i];
  return acc;
}

// Chang algebra of rank k with skeleton {0, 1}: s(+m) = 1 - <lambda,m> ε and
// s(-m) = <lambda,m> ε.
HyperstateTable chang_table(const Algebra& a, int bound, const std::vector<std::int64_t>& lambda) {
  HyperstateTable t;
  for (const Element& x : a.window(bound)) {
    const SignedTuple& z = rot(x);
    const Rational v(dot(lambda, z.exponent));
    t.values.emplace(x, z.radical ? DualRational(1, -v) : DualRational(0, v));
  }
  return t;
}

// Boolean algebra on bitmasks: s(x) = sum of the atom weights in x.
HyperstateTable boolean_table(std::size_t atoms, const std::vector<Rational>& weights) {
  const Algebra a = corpus::boolean_algebra(atoms);
  HyperstateTable t;
  for (const Element& x : a.window(1)) {
    Rational v(0);
    for (std::size_t i = 0; i < atoms; ++i) {
      if (x.index() & (1u << i)) v += weights[i];
    }
    t.values.emplace(x, DualRational(v, 0));
  }
  return t;
}

std::vector<Rational> weights_of(const ProbabilityMeasure& p) { return p.weights; }

ProbabilityMeasure measure(const Frame& f, std::vector<Rational> weights) {
  return {f.skeleton().atoms, std::move(weights)};
}

}  // namespace

TEST_CASE("validate_probability") {
  const Frame f(corpus::boolean_algebra(2), 1);
  REQUIRE(f.skeleton().atoms.size() == 2);
  const ProbabilityMeasure u = uniform_measure(f);
  CHECK(validate_probability(f, u).ok());
  CHECK(u.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(measure_of(f, u, *f.find(Element(Component(Index(1))))) == Rational(1, 2));

  const ProbabilityMeasure third = measure(f, {Rational(1, 3), Rational(2, 3)});
  CHECK(validate_probability(f, third).ok());
  CHECK(measure_of(f, third, f.top()) == Rational(1));

  const ValidationReport bad = validate_probability(f, measure(f, {Rational(1, 2), Rational(1, 3)}));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.passed("normalization"));
  CHECK(bad.find("normalization")->violations.front().lhs == "5/6");

  CHECK_FALSE(validate_probability(f, measure(f, {Rational(3, 2), Rational(-1, 2)})).passed("nonnegative weights"));
  CHECK_THROWS_AS(validate_probability(f, ProbabilityMeasure{std::vector<Element>(1, f.element(f.top())), std::vector<Rational>(1, Rational(1))}), StructuralError);
}

TEST_CASE("measures on Boolean algebras are hyperstates") {
  std::int64_t common = 0;
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    const Frame f(corpus::boolean_algebra(atoms), 1);
    for (const auto& point : oracle::simplex_points(atoms, 4, common)) {
      std::vector<Rational> w;
      for (auto v : point) w.emplace_back(v, common);
      const Hyperstate s{boolean_table(atoms, w)};
      CHECK(validate_hyperstate(f, s).ok());
      const Tabulation t = tabulate(f, s);
      const ValidationReport props = hyperstate_properties(f, t);
      CHECK(props.ok());
      CHECK(props.find("(iv) multiplicative on covering pairs")->instances > 0);
      const SplitResult split = split_hyperstate(f, s);
      CHECK(split.p.weights == w);
    }
  }
}

TEST_CASE("Chang rank 1 hyperstate with lambda 2") {
  const Algebra a = chang(1);
  const Frame f(a, 8);
  const Hyperstate s{chang_table(a, 8, {2})};
  const ValidationReport v = validate_hyperstate(f, s);
  CHECK(v.ok());
  CHECK(v.verdict() == "window-verified (8)");

  const Tabulation t = tabulate(f, s);
  CHECK(hyperstate_properties(f, t).ok());

  const SplitResult split = split_hyperstate(f, s);
  CHECK(split.p.atoms == std::vector<Element>(1, a.top()));
  CHECK(split.p.weights == std::vector<Rational>{Rational(1)});
  CHECK(split.lambda == std::vector<Rational>{Rational(2)});
  REQUIRE(split.w.size() == 9);
  for (const auto& [x, w] : split.w) CHECK(w == Rational(-2 * rot(x).exponent[0]));
  for (const auto& [x, r] : split.residuals) CHECK(r == LexValue{});

  const JoinResult j = join_hyperstate(f, split.p, split.lambda);
  CHECK(j.report.ok());
  const Tabulation tj = tabulate(f, j.s);
  for (Frame::Id x = 0; x < f.window_size(); ++x) CHECK(tj[x] == t[x]);
}

TEST_CASE("invalid hyperstates") {
  const Algebra b = corpus::boolean_algebra(1);
  const Frame f(b, 1);
  HyperstateTable zero;
  for (const Element& x : b.window(1)) zero.values.emplace(x, DualRational::zero());
  const ValidationReport v = validate_hyperstate(f, Hyperstate{zero});
  CHECK_FALSE(v.passed("(s1)"));
  CHECK_THROWS_AS(split_hyperstate(f, Hyperstate{zero}), PreconditionError);

  HyperstateTable partial;
  partial.values.emplace(b.top(), DualRational::one());
  CHECK_THROWS_AS(validate_hyperstate(f, Hyperstate{partial}), StructuralError);

  // A nonzero infinitesimal part on a complemented element breaks (s3).
  const Algebra c = chang(1);
  const Frame fc(c, 2);
  HyperstateTable t = chang_table(c, 2, {1});
  t.values.at(c.top()) = DualRational(1, -1);
  CHECK_FALSE(validate_hyperstate(fc, Hyperstate{t}).ok());
}

TEST_CASE("hyperstates on finite corpus algebras have no infinitesimal part") {
  for (const auto& [name, a] : corpus::base_algebras()) {
    if (!a.is_finite()) continue;
    CAPTURE(name);
    const Frame f(a, 1);
    const ProbabilityMeasure p = uniform_measure(f);
    const JoinResult j = join_hyperstate(f, p, {});
    CHECK(j.report.ok());
    const SplitResult split = split_hyperstate(f, j.s);
    for (const auto& [x, w] : split.w) CHECK(w.is_zero());
    const Tabulation t = tabulate(f, j.s);
    for (Frame::Id x = 0; x < f.window_size(); ++x) {
      CHECK(t[x]->infinitesimal.is_zero());
      CHECK(t[x]->standard == measure_of(f, p, f.parts(x).b));
    }
    CHECK(hyperstate_properties(f, t).ok());
  }
}

TEST_CASE("Boolean 4 x Chang 1 agrees with the componentwise oracle") {
  const Algebra a = product({corpus::boolean_algebra(2), chang(1)});
  const Frame f(a, 3);
  std::vector<std::string> atoms;
  for (const Element& x : f.skeleton().atoms) atoms.push_back(a.label(x));
  REQUIRE(atoms == std::vector<std::string>{"(0;+[0])", "(1;-[0])", "(2;-[0])"});
  CHECK(f.skeleton_ids().size() == 8);

  const std::vector<Rational> weights{Rational(1, 2), Rational(1, 6), Rational(1, 3)};
  const Rational lambda(3, 2);
  const JoinResult j = join_hyperstate(f, measure(f, weights), {lambda});
  REQUIRE(j.report.ok());
  const Tabulation t = tabulate(f, j.s);
  for (Frame::Id id = 0; id < f.window_size(); ++id) {
    const Element& x = f.element(id);
    const Index beta = std::get<Index>(x[0]);
    const SignedTuple& z = rot(x, 1);
    const Rational m(z.exponent[0]);
    const Rational bits = ((beta & 1u) ? weights[1] : Rational(0)) + ((beta & 2u) ? weights[2] : Rational(0));
    const LexValue expected = z.radical ? LexValue{weights[0] + bits, -lambda * m} : LexValue{bits, lambda * m};
    CAPTURE(a.label(x));
    CHECK(*t[id] == expected);
  }
  const SplitResult split = split_hyperstate(f, j.s);
  CHECK(split.p.weights == weights);
  CHECK(split.lambda == std::vector<Rational>{lambda});
  CHECK(hyperstate_properties(f, t).ok());
}

TEST_CASE("zero weights join to p of the skeleton part on every corpus algebra") {
  std::vector<corpus::Named<Algebra>> all = corpus::base_algebras();
  for (auto& named : corpus::pairwise_products()) all.push_back(named);
  for (const auto& [name, a] : all) {
    CAPTURE(name);
    const Frame f(a, a.is_product() ? 1 : 3);
    const ProbabilityMeasure p = uniform_measure(f);
    const JoinResult j = join_hyperstate(f, p, std::vector<Rational>(a.cone_rank(), Rational(0)));
    CHECK(j.report.ok());
    const Tabulation t = tabulate(f, j.s);
    for (Frame::Id x = 0; x < f.window_size(); ++x) {
      CHECK(*t[x] == LexValue{measure_of(f, p, f.parts(x).b), Rational(0)});
    }
  }
}

TEST_CASE("join then split is the identity on Chang rank 2") {
  const Algebra a = chang(2);
  const Frame f(a, 3);
  oracle::Gen g(3);
  for (int i = 0; i < 10; ++i) {
    const std::vector<std::int64_t> l{g.integer(0, 5), g.integer(0, 5)};
    const std::vector<Rational> lambda{Rational(l[0]), Rational(l[1], 2)};
    const JoinResult j = join_hyperstate(f, uniform_measure(f), lambda);
    REQUIRE(j.report.ok());
    const SplitResult split = split_hyperstate(f, j.s);
    CHECK(split.lambda == lambda);
    CHECK(weights_of(split.p) == std::vector<Rational>{Rational(1)});
    // Split of the explicit table built by the oracle gives the same result.
    HyperstateTable table;
    for (const Element& x : a.window(3)) {
      const SignedTuple& z = rot(x);
      const Rational v = lambda[0] * Rational(z.exponent[0]) + lambda[1] * Rational(z.exponent[1]);
      table.values.emplace(x, z.radical ? DualRational(1, -v) : DualRational(0, v));
    }
    const SplitResult split2 = split_hyperstate(f, Hyperstate{table});
    CHECK(split2.lambda == lambda);
  }
}

TEST_CASE("join reports failures as data") {
  const Algebra a = chang(1);
  const Frame f(a, 2);
  const JoinResult j = join_hyperstate(f, uniform_measure(f), {Rational(-1)});
  CHECK_FALSE(j.report.ok());
  CHECK_FALSE(j.report.passed("weights nonnegative"));
  CHECK_THROWS_AS(join_hyperstate(f, uniform_measure(f), {Rational(1), Rational(1)}), StructuralError);
}

TEST_CASE("cancellative_form") {
  SUBCASE("Chang rank 1, lambda 2") {
    const Algebra a = chang(1);
    const Frame f(a, 8);
    const CancellativeForm c = cancellative_form(f, Hyperstate{chang_table(a, 8, {2})});
    CHECK(c.report.ok());
    CHECK(c.sigma.lambda == std::vector<Rational>{Rational(2)});
    for (std::int64_t n = -8; n <= 8; ++n) {
      const TuplePair e = n >= 0 ? TuplePair{{n}, {0}} : TuplePair{{0}, {-n}};
      CHECK(c.sigma(e) == Rational(-2 * n));
    }
  }
  SUBCASE("zero functional") {
    const Algebra a = chang(2);
    const Frame f(a, 3);
    const JoinResult j = join_hyperstate(f, uniform_measure(f), {Rational(0), Rational(0)});
    const CancellativeForm c = cancellative_form(f, j.s);
    CHECK(c.report.ok());
    for (const Rational& l : c.sigma.lambda) CHECK(l.is_zero());
  }
  SUBCASE("rotated Goedel chain has a non-cancellative radical") {
    const Algebra a = rotate(corpus::godel_semihoop(3));
    const Frame f(a, 1);
    const JoinResult j = join_hyperstate(f, uniform_measure(f), {});
    CHECK_THROWS_AS(cancellative_form(f, j.s), PreconditionError);
  }
}

TEST_CASE("frame bookkeeping") {
  const Algebra a = chang(1);
  const Frame f(a, 4);
  CHECK(f.window_size() == 10);
  CHECK(f.radical_ids().size() == 5);
  CHECK(f.coradical_ids().size() == 5);
  CHECK(f.skeleton_ids().size() == 2);
  for (Frame::Id x = 0; x < f.window_size(); ++x) {
    const auto& p = f.parts(x);
    const Decomposition d = decompose_element(a, f.element(x));
    CHECK(f.element(p.b) == d.b);
    CHECK(f.element(p.c) == d.c);
    CHECK(f.element(f.neg(x)) == a.neg(f.element(x)));
  }
  CHECK_THROWS_AS(Frame(corpus::lukasiewicz_chain(3), 1), PreconditionError);
}
