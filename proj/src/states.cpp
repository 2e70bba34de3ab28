#include "lexstate/states.hpp"

#include <bit>

namespace lexstate {

namespace {

std::vector<std::string> labels(const Frame& f, std::initializer_list<Frame::Id> ids) {
  std::vector<std::string> out;
  for (auto i : ids) out.push_back(f.algebra().label(f.element(i)));
  return out;
}

const LexValue& value_at(const Frame& f, const Tabulation& t, Frame::Id i) {
  if (!t[i]) throw StructuralError("hyperstate has no value at " + f.algebra().label(f.element(i)));
  return *t[i];
}

LexValue lex_max(const LexValue& a, const LexValue& b) { return a < b ? b : a; }

void require_atoms(const Frame& f, const ProbabilityMeasure& p) {
  if (p.atoms != f.skeleton().atoms) throw StructuralError("measure atoms differ from the skeleton atoms");
  if (p.weights.size() != p.atoms.size()) throw StructuralError("measure needs one weight per atom");
}

void require_lambda(const Frame& f, const std::vector<Rational>& lambda) {
  if (lambda.size() != f.algebra().cone_rank()) {
    throw StructuralError("lambda has " + std::to_string(lambda.size()) + " entries, the cone rank is " +
                          std::to_string(f.algebra().cone_rank()));
  }
}

std::string first_witness(const ValidationReport& r) {
  const CheckResult* c = r.first_failure();
  if (!c) return {};
  std::string w;
  for (const auto& s : c->violations.front().witness) w += (w.empty() ? "" : ",") + s;
  return c->axiom + " fails at " + w;
}

}  // namespace

Frame::Frame(const Algebra& a, int bound) : a_(a), bound_(bound) {
  require_ibp0(a_, bound_);
  skeleton_ = boolean_skeleton(a_, bound_);
  if (skeleton_.atoms.size() > 64) throw PreconditionError("skeleton has more than 64 atoms");

  window_ = a_.window(bound_);
  window_size_ = window_.size();
  for (const auto& x : window_) intern(x);
  bot_ = intern(a_.bot());
  top_ = intern(a_.top());

  const std::size_t w = window_size_;
  neg_.resize(w);
  for (Id x = 0; x < w; ++x) neg_[x] = intern(a_.neg(window_[x]));
  pair_.resize(4 * w * w);
  for (Id x = 0; x < w; ++x) {
    for (Id y = 0; y < w; ++y) {
      const Element& ex = window_[x];
      const Element& ey = window_[y];
      Id* slot = &pair_[4 * (x * w + y)];
      slot[0] = intern(a_.oplus(ex, ey));
      slot[1] = intern(a_.mul(ex, ey));
      slot[2] = intern(a_.meet(ex, ey));
      slot[3] = intern(a_.join(ex, ey));
    }
  }

  // Decompose every interned element; parts are interned in turn.
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element x = elements_[i];
    const Decomposition d = decompose_element(a_, x);
    Parts p{};
    p.b = intern(d.b);
    p.c = intern(d.c);
    p.neg_b_or_c = intern(a_.join(a_.neg(d.b), d.c));
    p.b_or_c = intern(a_.join(d.b, d.c));
    parts_.push_back(p);
  }

  const std::size_t rank = a_.cone_rank();
  const std::size_t n = elements_.size();
  radical_.resize(n);
  coords_.resize(n, zero_tuple(rank));
  for (Id i = 0; i < n; ++i) {
    radical_[i] = in_radical(a_, elements_[i]);
    if (radical_[i]) coords_[i] = radical_coordinates(a_, elements_[i]);
  }
  mask_.resize(n);
  delta_.resize(n);
  for (Id i = 0; i < n; ++i) {
    const Parts& p = parts_[i];
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < skeleton_.atoms.size(); ++k) {
      if (a_.leq(skeleton_.atoms[k], elements_[p.b])) m |= std::uint64_t{1} << k;
    }
    mask_[i] = m;
    if (!radical_[p.b_or_c] || !radical_[p.neg_b_or_c]) {
      throw ConsistencyError("b v c outside the radical for " + a_.label(elements_[i]));
    }
    delta_[i] = coords_[p.b_or_c] - coords_[p.neg_b_or_c];
  }

  for (Id x = 0; x < w; ++x) {
    if (in_skeleton(a_, window_[x])) skeleton_ids_.push_back(x);
    if (radical_[x]) radical_ids_.push_back(x);
    if (in_coradical(a_, window_[x])) coradical_ids_.push_back(x);
  }
}

Frame::Id Frame::intern(const Element& x) {
  auto [it, inserted] = index_.try_emplace(x, static_cast<Id>(elements_.size()));
  if (inserted) elements_.push_back(x);
  return it->second;
}

std::optional<Frame::Id> Frame::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Frame::window_tag() const {
  if (a_.is_finite()) return std::nullopt;
  return bound_;
}

// ---------------------------------------------------------------------------

Tabulation tabulate(const Frame& f, const Hyperstate& s) {
  Tabulation t(f.size());
  if (const auto* table = std::get_if<HyperstateTable>(&s.form)) {
    for (Frame::Id i = 0; i < f.size(); ++i) {
      auto it = table->values.find(f.element(i));
      if (it != table->values.end()) t[i] = it->second.value();
    }
    return t;
  }
  const auto& params = std::get<HyperstateParams>(s.form);
  require_atoms(f, params.p);
  require_lambda(f, params.lambda);
  for (Frame::Id i = 0; i < f.size(); ++i) {
    LexValue v;
    for (std::uint64_t m = f.atom_mask(i); m; m &= m - 1) v.standard += params.p.weights[std::countr_zero(m)];
    const IntTuple& d = f.delta(i);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k]) v.infinitesimal += params.lambda[k] * Rational(d[k]);
    }
    t[i] = v;
  }
  return t;
}

Rational measure_of(const Frame& f, const ProbabilityMeasure& p, Frame::Id b) {
  require_atoms(f, p);
  Rational acc(0);
  for (std::uint64_t m = f.atom_mask(b); m; m &= m - 1) acc += p.weights[std::countr_zero(m)];
  return acc;
}

ProbabilityMeasure uniform_measure(const Frame& f) {
  const auto& atoms = f.skeleton().atoms;
  const auto n = static_cast<std::int64_t>(atoms.size());
  return {atoms, std::vector<Rational>(atoms.size(), Rational(1, n))};
}

ValidationReport validate_probability(const Frame& f, const ProbabilityMeasure& p) {
  require_atoms(f, p);
  ValidationReport r("probability measure", f.window_tag());
  const Algebra& a = f.algebra();
  {
    CheckResult& c = r.add("nonnegative weights");
    for (std::size_t k = 0; k < p.atoms.size(); ++k) {
      ++c.instances;
      if (p.weights[k] < Rational(0)) c.fail({a.label(p.atoms[k])}, p.weights[k].str(), ">= 0");
    }
  }
  {
    CheckResult& c = r.add("normalization");
    ++c.instances;
    Rational total = measure_of(f, p, f.top());
    if (total != Rational(1)) c.fail({a.label(a.top())}, total.str(), "1");
  }
  const auto& sk = f.skeleton_ids();
  {
    CheckResult& c = r.add("range");
    for (auto b : sk) {
      ++c.instances;
      Rational v = measure_of(f, p, b);
      if (v < Rational(0) || v > Rational(1)) c.fail(labels(f, {b}), v.str(), "[0,1]");
    }
  }
  {
    CheckResult& c = r.add("additivity");
    for (auto x : sk) {
      for (auto y : sk) {
        if (f.meet(x, y) != f.bot()) continue;
        ++c.instances;
        Rational l = measure_of(f, p, f.join(x, y)), rr = measure_of(f, p, x) + measure_of(f, p, y);
        if (l != rr) c.fail(labels(f, {x, y}), l.str(), rr.str());
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

ValidationReport validate_hyperstate(const Frame& f, const Hyperstate& s) {
  return validate_hyperstate(f, tabulate(f, s));
}

ValidationReport validate_hyperstate(const Frame& f, const Tabulation& t) {
  const std::size_t w = f.window_size();
  for (Frame::Id x = 0; x < w; ++x) value_at(f, t, x);
  ValidationReport r("hyperstate", f.window_tag());
  {
    CheckResult& c = r.add("range");
    for (Frame::Id i = 0; i < f.size(); ++i) {
      if (!t[i]) continue;
      ++c.instances;
      if (!DualRational::in_unit_interval(*t[i])) c.fail(labels(f, {i}), t[i]->str(), "[0,1]");
    }
  }
  {
    CheckResult& c = r.add("(s1)");
    c.instances = 2;
    const LexValue one{Rational(1), Rational(0)}, zero{};
    if (value_at(f, t, f.top()) != one) c.fail(labels(f, {f.top()}), value_at(f, t, f.top()).str(), one.str());
    if (value_at(f, t, f.bot()) != zero) c.fail(labels(f, {f.bot()}), value_at(f, t, f.bot()).str(), zero.str());
  }
  {
    CheckResult& c = r.add("(s2)");
    std::size_t skipped = 0;
    for (Frame::Id x = 0; x < w; ++x) {
      for (Frame::Id y = 0; y < w; ++y) {
        const auto& sp = t[f.oplus(x, y)];
        const auto& sm = t[f.mul(x, y)];
        if (!sp || !sm) {
          ++skipped;
          continue;
        }
        ++c.instances;
        LexValue l = *sp + *sm, rr = *t[x] + *t[y];
        if (l != rr) c.fail(labels(f, {x, y}), l.str(), rr.str());
      }
    }
    if (skipped) c.note = std::to_string(skipped) + " pairs skipped: results outside the table";
  }
  {
    CheckResult& c = r.add("(s3)");
    for (auto b : f.skeleton_ids()) {
      ++c.instances;
      if (!t[b]->infinitesimal.is_zero()) c.fail(labels(f, {b}), t[b]->str(), "standard");
    }
  }
  return r;
}

ValidationReport hyperstate_properties(const Frame& f, const Tabulation& t) {
  const std::size_t w = f.window_size();
  for (Frame::Id x = 0; x < w; ++x) value_at(f, t, x);
  const Algebra& a = f.algebra();
  ValidationReport r("hyperstate properties", f.window_tag());
  const LexValue one{Rational(1), Rational(0)}, zero{};

  auto pairs = [&](CheckResult& c, auto body) {
    std::size_t skipped = 0;
    for (Frame::Id x = 0; x < w; ++x) {
      for (Frame::Id y = 0; y < w; ++y) {
        if (!body(x, y)) ++skipped;
      }
    }
    if (skipped) c.note = std::to_string(skipped) + " pairs skipped: results outside the table";
  };

  {
    CheckResult& c = r.add("(i) negation");
    for (Frame::Id x = 0; x < w; ++x) {
      const auto& sn = t[f.neg(x)];
      if (!sn) continue;
      ++c.instances;
      LexValue rr = one - *t[x];
      if (*sn != rr) c.fail(labels(f, {x}), sn->str(), rr.str());
    }
  }
  {
    CheckResult& c = r.add("(ii) monotone");
    pairs(c, [&](Frame::Id x, Frame::Id y) {
      if (!f.leq(x, y)) return true;
      ++c.instances;
      if (*t[x] > *t[y]) c.fail(labels(f, {x, y}), t[x]->str(), t[y]->str());
      return true;
    });
  }
  {
    CheckResult& c = r.add("(iii) additive on disjoint pairs");
    pairs(c, [&](Frame::Id x, Frame::Id y) {
      if (f.mul(x, y) != f.bot()) return true;
      const auto& sp = t[f.oplus(x, y)];
      if (!sp) return false;
      ++c.instances;
      LexValue rr = *t[x] + *t[y];
      if (*sp != rr) c.fail(labels(f, {x, y}), sp->str(), rr.str());
      return true;
    });
  }
  {
    CheckResult& c = r.add("(iv) multiplicative on covering pairs");
    pairs(c, [&](Frame::Id x, Frame::Id y) {
      if (f.oplus(x, y) != f.top()) return true;
      const auto& sm = t[f.mul(x, y)];
      if (!sm) return false;
      ++c.instances;
      LexValue rr = lex_max(*t[x] + *t[y] - one, zero);
      if (*sm != rr) c.fail(labels(f, {x, y}), sm->str(), rr.str());
      return true;
    });
  }
  {
    CheckResult& c = r.add("(v) valuation");
    pairs(c, [&](Frame::Id x, Frame::Id y) {
      ++c.instances;
      LexValue l = *t[f.meet(x, y)] + *t[f.join(x, y)], rr = *t[x] + *t[y];
      if (l != rr) c.fail(labels(f, {x, y}), l.str(), rr.str());
      return true;
    });
  }
  {
    CheckResult& c = r.add("(vi) skeleton measure");
    ProbabilityMeasure p{f.skeleton().atoms, {}};
    bool standard = true;
    for (const auto& atom : p.atoms) {
      const LexValue& v = value_at(f, t, *f.find(atom));
      if (!v.infinitesimal.is_zero()) standard = false;
      p.weights.push_back(v.standard);
    }
    ++c.instances;
    if (!standard) c.fail({"atoms"}, "infinitesimal part", "0");
    ValidationReport pr = validate_probability(f, p);
    for (const auto& check : pr.checks()) {
      c.instances += check.instances;
      for (const auto& v : check.violations) c.fail(v.witness, check.axiom + ": " + v.lhs, v.rhs);
    }
    for (auto b : f.skeleton_ids()) {
      ++c.instances;
      LexValue pb{measure_of(f, p, b), Rational(0)};
      if (*t[b] != pb) c.fail(labels(f, {b}), t[b]->str(), pb.str());
    }
  }
  {
    CheckResult& c = r.add("(vii) radical standard parts");
    for (auto x : f.radical_ids()) {
      ++c.instances;
      if (t[x]->standard != Rational(1)) c.fail(labels(f, {x}), t[x]->standard.str(), "1");
    }
    for (auto x : f.coradical_ids()) {
      ++c.instances;
      if (!t[x]->standard.is_zero()) c.fail(labels(f, {x}), t[x]->standard.str(), "0");
    }
  }
  {
    CheckResult& c = r.add("(viii) infinitesimal parts form a state");
    const auto& rad = f.radical_ids();
    ++c.instances;
    if (!t[f.top()]->infinitesimal.is_zero()) c.fail(labels(f, {f.top()}), t[f.top()]->infinitesimal.str(), "0");
    std::size_t skipped = 0;
    for (auto x : rad) {
      ++c.instances;
      const Rational& wx = t[x]->infinitesimal;
      if (wx > Rational(0)) c.fail(labels(f, {x}), "codomain: " + wx.str(), "0");
      for (auto y : rad) {
        const Rational& wy = t[y]->infinitesimal;
        ++c.instances;
        if (f.leq(x, y) && wx > wy) c.fail(labels(f, {x, y}), "(v3): " + wx.str(), wy.str());
        const auto& sm = t[f.mul(x, y)];
        if (!sm) {
          ++skipped;
          continue;
        }
        ++c.instances;
        if (sm->infinitesimal != wx + wy) c.fail(labels(f, {x, y}), "(v2): " + sm->infinitesimal.str(), (wx + wy).str());
      }
    }
    if (skipped) c.note = std::to_string(skipped) + " pairs skipped: results outside the table";
  }
  return r;
}

// ---------------------------------------------------------------------------

SplitResult split_hyperstate(const Frame& f, const Hyperstate& s) {
  const Tabulation t = tabulate(f, s);
  {
    ValidationReport v = validate_hyperstate(f, t);
    if (!v.ok()) throw PreconditionError("not a valid hyperstate: " + first_witness(v));
  }
  const Algebra& a = f.algebra();
  SplitResult out;
  out.report = ValidationReport("hyperstate split", f.window_tag());

  out.p.atoms = f.skeleton().atoms;
  for (const auto& atom : out.p.atoms) out.p.weights.push_back(value_at(f, t, *f.find(atom)).standard);

  auto w_at = [&](Frame::Id x) { return value_at(f, t, x).infinitesimal; };
  {
    CheckResult& c = out.report.add("radical standard part 1");
    for (auto x : f.radical_ids()) {
      ++c.instances;
      if (t[x]->standard != Rational(1)) c.fail(labels(f, {x}), t[x]->standard.str(), "1");
      out.w.emplace_back(f.element(x), w_at(x));
    }
  }

  const std::size_t rank = a.cone_rank();
  for (std::size_t k = 0; k < rank; ++k) {
    const Element e = radical_element(a, unit_tuple(rank, k));
    const auto id = f.find(e);
    if (!id) throw PreconditionError("window does not contain the generator " + a.label(e));
    out.lambda.push_back(-w_at(*id));
  }
  {
    CheckResult& c = out.report.add("w fits lambda");
    for (auto x : f.radical_ids()) {
      ++c.instances;
      Rational fit(0);
      const IntTuple& m = f.coordinates(x);
      for (std::size_t k = 0; k < rank; ++k) fit -= out.lambda[k] * Rational(m[k]);
      if (w_at(x) != fit) c.fail(labels(f, {x}), w_at(x).str(), fit.str());
    }
  }
  {
    CheckResult& c = out.report.add("decomposition identity");
    for (Frame::Id x = 0; x < f.window_size(); ++x) {
      ++c.instances;
      const auto& p = f.parts(x);
      const LexValue expected{measure_of(f, out.p, p.b), w_at(p.neg_b_or_c) - w_at(p.b_or_c)};
      const LexValue residual = *t[x] - expected;
      out.residuals.emplace_back(f.element(x), residual);
      if (residual != LexValue{}) c.fail(labels(f, {x}), t[x]->str(), expected.str());
    }
  }
  if (!out.report.ok()) throw TheoremViolation("hyperstate split: " + first_witness(out.report), out.report);
  return out;
}

JoinResult join_hyperstate(const Frame& f, const ProbabilityMeasure& p, const std::vector<Rational>& lambda) {
  require_atoms(f, p);
  require_lambda(f, lambda);
  JoinResult out{Hyperstate{HyperstateParams{p, lambda}}, ValidationReport("hyperstate join", f.window_tag())};
  out.report.merge(validate_probability(f, p), "measure: ");
  {
    CheckResult& c = out.report.add("weights nonnegative");
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      ++c.instances;
      if (lambda[k] < Rational(0)) c.fail({std::to_string(k)}, lambda[k].str(), ">= 0");
    }
  }
  out.report.merge(validate_hyperstate(f, out.s));
  return out;
}

CancellativeForm cancellative_form(const Frame& f, const Hyperstate& s) {
  const Algebra& a = f.algebra();
  const std::size_t rank = a.cone_rank();
  if (rank == 0) throw PreconditionError("the radical has no cone coordinates");
  {
    const Radical rad = radical(a, f.bound());
    if (rad.report.flag("cancellative") != true) {
      const CheckResult* canc = rad.report.find("(Canc)");
      std::string witness;
      if (canc && !canc->violations.empty()) {
        for (const auto& w : canc->violations.front().witness) witness += (witness.empty() ? "" : ",") + w;
      }
      throw PreconditionError("the radical is not cancellative" + (witness.empty() ? "" : " at " + witness));
    }
  }
  const SplitResult split = split_hyperstate(f, s);
  const Tabulation t = tabulate(f, s);
  const SymbolicConeHoop cone(rank);
  CancellativeForm out{split.p, state_to_kgroup_state(cone, WeightState{split.lambda}),
                       ValidationReport("cancellative form", f.window_tag())};
  CheckResult& id = out.report.add("cancellative identity");
  CheckResult& agree = out.report.add("agrees with split");
  for (Frame::Id x = 0; x < f.window_size(); ++x) {
    const auto& p = f.parts(x);
    const TuplePair bracket{f.coordinates(p.neg_b_or_c), f.coordinates(p.b_or_c)};
    const LexValue v{measure_of(f, out.p, p.b), out.sigma(bracket)};
    ++id.instances;
    if (v != *t[x]) id.fail(labels(f, {x}), v.str(), t[x]->str());
    ++agree.instances;
    const LexValue from_split = *t[x] - split.residuals[x].second;
    if (v != from_split) agree.fail(labels(f, {x}), v.str(), from_split.str());
  }
  return out;
}

}  // namespace lexstate
