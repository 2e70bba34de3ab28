#include "lexstate/algebra.hpp"

#include <charconv>

namespace lexstate {

FiniteMTL::FiniteMTL(Table times, Table impl, Table meet, Table join, Index bot, Index top)
    : times_(std::move(times)),
      impl_(std::move(impl)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bot_(bot),
      top_(top) {
  const std::size_t n = times_.size();
  if (n == 0) throw StructuralError("algebra carrier is empty");
  if (impl_.size() != n || meet_.size() != n || join_.size() != n) {
    throw StructuralError("algebra tables 'times', 'impl', 'meet', 'join' differ in size");
  }
  require_index(bot_, n, "bot");
  require_index(top_, n, "top");
}

// ---------------------------------------------------------------------------

SignedTuple RotationAlgebra::mul(const SignedTuple& x, const SignedTuple& y) const {
  if (x.radical && y.radical) return {true, core_.mul(x.exponent, y.exponent)};
  if (x.radical) return {false, core_.impl(x.exponent, y.exponent)};
  if (y.radical) return {false, core_.impl(y.exponent, x.exponent)};
  return bot();
}

SignedTuple RotationAlgebra::impl(const SignedTuple& x, const SignedTuple& y) const {
  if (x.radical && y.radical) return {true, core_.impl(x.exponent, y.exponent)};
  if (x.radical) return {false, core_.mul(x.exponent, y.exponent)};
  if (y.radical) return top();
  return {true, core_.impl(y.exponent, x.exponent)};
}

SignedTuple RotationAlgebra::meet(const SignedTuple& x, const SignedTuple& y) const {
  if (x.radical && y.radical) return {true, core_.meet(x.exponent, y.exponent)};
  if (x.radical) return y;
  if (y.radical) return x;
  return {false, pseudo_join(core_, x.exponent, y.exponent)};
}

SignedTuple RotationAlgebra::join(const SignedTuple& x, const SignedTuple& y) const {
  if (x.radical && y.radical) return {true, pseudo_join(core_, x.exponent, y.exponent)};
  if (x.radical) return x;
  if (y.radical) return y;
  return {false, core_.meet(x.exponent, y.exponent)};
}

std::vector<SignedTuple> RotationAlgebra::window(int bound) const {
  std::vector<SignedTuple> out;
  const auto cone = core_.window(bound);
  for (const auto& m : cone) out.push_back({false, m});
  for (const auto& m : cone) out.push_back({true, m});
  return out;
}

// ---------------------------------------------------------------------------

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = e.arity();
  for (const auto& c : e) {
    if (const Index* i = std::get_if<Index>(&c)) {
      h = h * 1000003u ^ *i;
    } else {
      const auto& s = std::get<SignedTuple>(c);
      h = h * 1000003u ^ (IntTupleHash{}(s.exponent) * 2 + (s.radical ? 1 : 0));
    }
  }
  return h;
}

Algebra::Algebra(FiniteMTL a) { factors_.emplace_back(std::move(a)); }
Algebra::Algebra(RotationAlgebra a) { factors_.emplace_back(std::move(a)); }

Algebra Algebra::product(const std::vector<Algebra>& factors) {
  if (factors.empty()) throw PreconditionError("product of an empty factor list");
  Algebra out;
  for (const auto& a : factors) out.factors_.insert(out.factors_.end(), a.factors_.begin(), a.factors_.end());
  return out;
}

bool Algebra::is_finite() const {
  for (const auto& f : factors_) {
    if (!std::holds_alternative<FiniteMTL>(f)) return false;
  }
  return true;
}

const FiniteMTL& Algebra::finite() const { return std::get<FiniteMTL>(factors_.at(0)); }

std::size_t Algebra::cone_rank() const {
  std::size_t r = 0;
  for (const auto& f : factors_) {
    if (const auto* rot = std::get_if<RotationAlgebra>(&f)) r += rot->rank();
  }
  return r;
}

namespace {

template <class FiniteOp, class RotOp>
Element componentwise(const std::vector<Factor>& factors, const Element& x, const Element& y, FiniteOp fop,
                      RotOp rop) {
  Element out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (const auto* f = std::get_if<FiniteMTL>(&factors[i])) {
      out.push_back(fop(*f, std::get<Index>(x[i]), std::get<Index>(y[i])));
    } else {
      const auto& r = std::get<RotationAlgebra>(factors[i]);
      out.push_back(rop(r, std::get<SignedTuple>(x[i]), std::get<SignedTuple>(y[i])));
    }
  }
  return out;
}

}  // namespace

Element Algebra::mul(const Element& x, const Element& y) const {
  return componentwise(
      factors_, x, y, [](const FiniteMTL& f, Index a, Index b) { return f.mul(a, b); },
      [](const RotationAlgebra& r, const SignedTuple& a, const SignedTuple& b) { return r.mul(a, b); });
}

Element Algebra::impl(const Element& x, const Element& y) const {
  return componentwise(
      factors_, x, y, [](const FiniteMTL& f, Index a, Index b) { return f.impl(a, b); },
      [](const RotationAlgebra& r, const SignedTuple& a, const SignedTuple& b) { return r.impl(a, b); });
}

Element Algebra::meet(const Element& x, const Element& y) const {
  return componentwise(
      factors_, x, y, [](const FiniteMTL& f, Index a, Index b) { return f.meet(a, b); },
      [](const RotationAlgebra& r, const SignedTuple& a, const SignedTuple& b) { return r.meet(a, b); });
}

Element Algebra::join(const Element& x, const Element& y) const {
  return componentwise(
      factors_, x, y, [](const FiniteMTL& f, Index a, Index b) { return f.join(a, b); },
      [](const RotationAlgebra& r, const SignedTuple& a, const SignedTuple& b) { return r.join(a, b); });
}

Element Algebra::bot() const {
  Element out;
  for (const auto& f : factors_) {
    std::visit([&](const auto& a) { out.push_back(a.bot()); }, f);
  }
  return out;
}

Element Algebra::top() const {
  Element out;
  for (const auto& f : factors_) {
    std::visit([&](const auto& a) { out.push_back(a.top()); }, f);
  }
  return out;
}

std::vector<Element> Algebra::window(int bound) const {
  std::vector<Element> out{Element{}};
  for (const auto& f : factors_) {
    std::vector<Component> comps;
    if (const auto* fin = std::get_if<FiniteMTL>(&f)) {
      for (Index i = 0; i < fin->size(); ++i) comps.emplace_back(i);
    } else {
      for (auto& s : std::get<RotationAlgebra>(f).window(bound)) comps.emplace_back(std::move(s));
    }
    std::vector<Element> next;
    next.reserve(out.size() * comps.size());
    for (const auto& prefix : out) {
      for (const auto& c : comps) {
        Element e = prefix;
        e.push_back(c);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string component_label(const Component& c) {
  if (const Index* i = std::get_if<Index>(&c)) return std::to_string(*i);
  const auto& s = std::get<SignedTuple>(c);
  return (s.radical ? "+" : "-") + tuple_str(s.exponent);
}

std::string Algebra::label(const Element& x) const {
  if (x.arity() == 1) return component_label(x[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (i) s += ';';
    s += component_label(x[i]);
  }
  return s + ")";
}

Element Algebra::parse(std::string_view text) const {
  const std::string whole(text);
  std::vector<std::string_view> items;
  if (factors_.size() == 1) {
    items.push_back(text);
  } else {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw StructuralError("'" + whole + "' is not a product element");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    while (true) {
      auto semi = body.find(';');
      items.push_back(body.substr(0, semi));
      if (semi == std::string_view::npos) break;
      body.remove_prefix(semi + 1);
    }
  }
  if (items.size() != factors_.size()) {
    throw StructuralError("'" + whole + "' has " + std::to_string(items.size()) + " components, expected " +
                          std::to_string(factors_.size()));
  }
  Element out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string_view item = items[i];
    if (const auto* fin = std::get_if<FiniteMTL>(&factors_[i])) {
      std::int64_t v = -1;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw StructuralError("'" + whole + "': component '" + std::string(item) + "' is not an index");
      }
      require_index(v, fin->size(), "element '" + whole + "'");
      out.push_back(static_cast<Index>(v));
    } else {
      const auto& rot = std::get<RotationAlgebra>(factors_[i]);
      if (item.empty() || (item.front() != '+' && item.front() != '-')) {
        throw StructuralError("'" + whole + "': component '" + std::string(item) + "' needs a sign");
      }
      SignedTuple s{item.front() == '+', {}};
      try {
        s.exponent = parse_tuple(item.substr(1));
      } catch (const std::invalid_argument& e) {
        throw StructuralError("'" + whole + "': " + e.what());
      }
      if (s.exponent.size() != rot.rank() || !is_nonnegative(s.exponent)) {
        throw StructuralError("'" + whole + "': '" + std::string(item) + "' is not in a rank-" +
                              std::to_string(rot.rank()) + " cone");
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace lexstate
