#include "lexstate/corpus.hpp"

#include <algorithm>

#include "lexstate/ibp0.hpp"

namespace lexstate::corpus {

namespace {

template <class F>
Table tabulate(std::size_t n, F f) {
  Table t(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) t.at(x, y) = static_cast<Index>(f(x, y));
  }
  return t;
}

FiniteSemihoop chain_semihoop(std::size_t n, auto mul, auto impl) {
  return FiniteSemihoop(tabulate(n, mul), tabulate(n, impl), tabulate(n, [](Index x, Index y) { return std::min(x, y); }),
                        static_cast<Index>(n - 1));
}

}  // namespace

FiniteMTL boolean_algebra(std::size_t atoms) {
  const std::size_t n = std::size_t{1} << atoms;
  const Index mask = static_cast<Index>(n - 1);
  auto meet = [](Index x, Index y) { return x & y; };
  return FiniteMTL(tabulate(n, meet), tabulate(n, [mask](Index x, Index y) { return (~x | y) & mask; }),
                   tabulate(n, meet), tabulate(n, [](Index x, Index y) { return x | y; }), 0, mask);
}

FiniteMTL lukasiewicz_chain(std::size_t n) {
  const auto top = static_cast<std::int64_t>(n - 1);
  return FiniteMTL(tabulate(n, [top](std::int64_t x, std::int64_t y) { return std::max<std::int64_t>(0, x + y - top); }),
                   tabulate(n, [top](std::int64_t x, std::int64_t y) { return std::min(top, top - x + y); }),
                   tabulate(n, [](Index x, Index y) { return std::min(x, y); }),
                   tabulate(n, [](Index x, Index y) { return std::max(x, y); }), 0, static_cast<Index>(top));
}

FiniteSemihoop godel_semihoop(std::size_t n) {
  const auto top = static_cast<Index>(n - 1);
  return chain_semihoop(
      n, [](Index x, Index y) { return std::min(x, y); }, [top](Index x, Index y) { return x <= y ? top : y; });
}

FiniteSemihoop lukasiewicz_semihoop(std::size_t n) {
  const FiniteMTL l = lukasiewicz_chain(n);
  return FiniteSemihoop(l.times_table(), l.impl_table(), l.meet_table(), l.top());
}

FiniteSemihoop nilpotent_minimum_semihoop(std::size_t n) {
  const auto top = static_cast<Index>(n - 1);
  return chain_semihoop(
      n, [top](Index x, Index y) { return x + y > top ? std::min(x, y) : Index{0}; },
      [top](Index x, Index y) { return x <= y ? top : std::max(top - x, y); });
}

FiniteSemihoop product_semihoop(const FiniteSemihoop& a, const FiniteSemihoop& b) {
  const std::size_t m = b.size();
  const std::size_t n = a.size() * m;
  auto lift = [&](auto op) {
    return tabulate(n, [&](Index x, Index y) {
      return op(a, x / m, y / m) * m + op(b, x % m, y % m);
    });
  };
  return FiniteSemihoop(lift([](const FiniteSemihoop& h, Index x, Index y) { return h.mul(x, y); }),
                        lift([](const FiniteSemihoop& h, Index x, Index y) { return h.impl(x, y); }),
                        lift([](const FiniteSemihoop& h, Index x, Index y) { return h.meet(x, y); }),
                        static_cast<Index>(a.top() * m + b.top()));
}

FiniteLMonoid truncated_addition(std::size_t n) {
  const auto top = static_cast<Index>(n - 1);
  return FiniteLMonoid(tabulate(n, [top](Index x, Index y) { return std::min(x + y, top); }),
                       tabulate(n, [](Index x, Index y) { return std::min(x, y); }),
                       tabulate(n, [](Index x, Index y) { return std::max(x, y); }), 0);
}

FiniteLMonoid idempotent_pair() {
  // 0 is the unit 1, 1 is a.
  return FiniteLMonoid(tabulate(2, [](Index x, Index y) { return x | y; }),
                       tabulate(2, [](Index x, Index y) { return x | y; }),
                       tabulate(2, [](Index x, Index y) { return x & y; }), 0);
}

FiniteLMonoid trivial_lmonoid() { return FiniteLMonoid(Table(1), Table(1), Table(1), 0); }

FiniteLMonoid boolean_square() {
  auto join = [](Index x, Index y) { return x | y; };
  return FiniteLMonoid(tabulate(4, join), tabulate(4, [](Index x, Index y) { return x & y; }), tabulate(4, join), 0);
}

std::vector<Named<FiniteSemihoop>> finite_semihoops() {
  std::vector<Named<FiniteSemihoop>> out;
  out.push_back({"trivial-semihoop", godel_semihoop(1)});
  for (std::size_t n = 2; n <= 6; ++n) {
    out.push_back({"godel" + std::to_string(n), godel_semihoop(n)});
    out.push_back({"lukasiewicz-semihoop" + std::to_string(n), lukasiewicz_semihoop(n)});
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    out.push_back({"nilpotent-minimum" + std::to_string(n), nilpotent_minimum_semihoop(n)});
  }
  out.push_back({"godel2xgodel2", product_semihoop(godel_semihoop(2), godel_semihoop(2))});
  out.push_back({"godel2xgodel3", product_semihoop(godel_semihoop(2), godel_semihoop(3))});
  out.push_back({"godel2xlukasiewicz3", product_semihoop(godel_semihoop(2), lukasiewicz_semihoop(3))});
  out.push_back({"lukasiewicz2xlukasiewicz3", product_semihoop(lukasiewicz_semihoop(2), lukasiewicz_semihoop(3))});
  return out;
}

std::vector<Named<FiniteLMonoid>> small_lmonoids() {
  std::vector<Named<FiniteLMonoid>> out{
      {"trivial", trivial_lmonoid()},
      {"idempotent2", idempotent_pair()},
      {"truncated-addition2", truncated_addition(2)},
      {"truncated-addition3", truncated_addition(3)},
      {"truncated-addition4", truncated_addition(4)},
      {"boolean-square", boolean_square()},
  };
  for (const auto& h : finite_semihoops()) {
    if (h.value.size() <= 4) out.push_back({h.name + "-reduct", lmonoid_reduct(h.value)});
  }
  return out;
}

std::vector<Named<Algebra>> base_algebras() {
  return {
      {"boolean2", boolean_algebra(1)},
      {"boolean4", boolean_algebra(2)},
      {"boolean8", boolean_algebra(3)},
      {"rotated-godel3", rotate(godel_semihoop(3))},
      {"rotated-godel4", rotate(godel_semihoop(4))},
      {"chang1", RotationAlgebra(1)},
      {"chang2", RotationAlgebra(2)},
  };
}

std::vector<Named<Algebra>> pairwise_products() {
  const auto base = base_algebras();
  std::vector<Named<Algebra>> out;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      out.push_back({base[i].name + "x" + base[j].name, Algebra::product({base[i].value, base[j].value})});
    }
  }
  return out;
}

}  // namespace lexstate::corpus
