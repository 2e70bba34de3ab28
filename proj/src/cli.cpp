#include "lexstate/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexstate/corpus.hpp"
#include "lexstate/ibp0.hpp"
#include "lexstate/states.hpp"

namespace lexstate::cli {

using io::Json;

namespace {

/// Accumulates reports and the result object of one run.
struct Output {
  std::vector<ValidationReport> reports;
  Json result = Json::object();
};

void need_args(const Command& c, std::size_t n, const std::string& usage) {
  if (c.args.size() < n) throw StructuralError(c.verb + ": expected " + usage);
}

Json labels(const Algebra& a, const std::vector<Element>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(a.label(x));
  return arr;
}

// ---------------------------------------------------------------------------

void do_validate(const Command& c, Output& out) {
  need_args(c, 1, "FILE");
  const io::Structure s = io::parse_structure(io::read_json_file(c.args[0]));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Algebra>) {
          if (c.mtl_only) {
            const auto w = x.window(c.window);
            out.reports.push_back(validate_mtl(x, w, x.is_finite() ? std::nullopt : std::optional<int>(c.window)));
          } else {
            out.reports.push_back(validate_ibp0(x, c.window));
          }
          out.result["structure"] = "algebra";
        } else if constexpr (std::is_same_v<T, FiniteSemihoop>) {
          out.reports.push_back(validate_semihoop(x));
          out.result["structure"] = "semihoop";
        } else if constexpr (std::is_same_v<T, SymbolicConeHoop>) {
          out.reports.push_back(validate_semihoop(x, c.window));
          out.result["structure"] = "semihoop";
        } else if constexpr (std::is_same_v<T, FiniteLMonoid>) {
          out.reports.push_back(validate_lmonoid(x));
          out.result["structure"] = "l-monoid";
        } else {
          out.result["structure"] = "l-monoid";
          out.result["note"] = "symbolic cone monoid; axioms hold by construction";
        }
      },
      s);
}

Algebra load_algebra(const std::string& path) { return io::parse_algebra(io::read_json_file(path)); }

void do_skeleton(const Command& c, Output& out) {
  need_args(c, 1, "ALGEBRA");
  const Algebra a = load_algebra(c.args[0]);
  require_ibp0(a, c.window);
  Skeleton s = boolean_skeleton(a, c.window);
  out.result["elements"] = labels(a, s.elements);
  out.result["atoms"] = labels(a, s.atoms);
  out.reports.push_back(std::move(s.report));
}

void do_radical(const Command& c, Output& out) {
  need_args(c, 1, "ALGEBRA");
  const Algebra a = load_algebra(c.args[0]);
  Radical r = radical(a, c.window);
  out.result["radical"] = labels(a, r.elements);
  out.result["coradical"] = labels(a, r.coradical);
  if (r.table) out.result["semihoop"] = io::to_json(*r.table);
  out.reports.push_back(std::move(r.report));
}

void do_decompose(const Command& c, Output& out) {
  need_args(c, 1, "ALGEBRA [ELEMENT...]");
  const Algebra a = load_algebra(c.args[0]);
  std::vector<Element> xs;
  for (std::size_t i = 1; i < c.args.size(); ++i) xs.push_back(a.parse(c.args[i]));
  require_ibp0(a, c.window);
  if (xs.empty()) xs = a.window(c.window);
  ValidationReport r("decomposition", a.is_finite() ? std::nullopt : std::optional<int>(c.window));
  CheckResult& rec = r.add("recomposition");
  Json rows = Json::array();
  for (const auto& x : xs) {
    ++rec.instances;
    const Decomposition d = decompose_element(a, x);
    Json row;
    row["element"] = a.label(x);
    row["b"] = a.label(d.b);
    row["c"] = a.label(d.c);
    row["recomposed"] = a.label(recompose(a, d));
    rows.push_back(row);
  }
  out.result["decompositions"] = rows;
  out.reports.push_back(std::move(r));
}

void grothendieck_finite(const FiniteLMonoid& m, Output& out) {
  out.reports.push_back(validate_lmonoid(m));
  const FiniteEnvelope env = k_envelope(m);
  const auto& k = env.group;
  Json reps = Json::array();
  for (const auto& e : k.representatives()) reps.push_back(pair_str(e));
  Json emb = Json::array();
  for (const auto& e : env.embedding) emb.push_back(pair_str(k.canonical(e)));
  const bool inj = k.h_injective();
  const bool canc = is_cancellative(m);
  out.result["classes"] = k.class_count();
  out.result["trivial_group"] = k.class_count() == 1;
  out.result["representatives"] = reps;
  out.result["embedding"] = emb;
  out.result["h_injective"] = inj;
  out.result["cancellative"] = canc;
  ValidationReport r("envelope");
  CheckResult& c = r.add("h injective iff cancellative");
  c.instances = 1;
  if (inj != canc) c.fail({}, inj ? "injective" : "not injective", canc ? "cancellative" : "not cancellative");
  out.reports.push_back(std::move(r));
}

void do_grothendieck(const Command& c, Output& out) {
  need_args(c, 1, "L-MONOID|SEMIHOOP");
  const io::Structure s = io::parse_structure(io::read_json_file(c.args[0]));
  if (const auto* m = std::get_if<FiniteLMonoid>(&s)) return grothendieck_finite(*m, out);
  if (const auto* h = std::get_if<FiniteSemihoop>(&s)) return grothendieck_finite(lmonoid_reduct(*h), out);
  std::optional<SymbolicCancellativeMonoid> sym;
  if (const auto* m = std::get_if<SymbolicCancellativeMonoid>(&s)) sym = *m;
  if (const auto* h = std::get_if<SymbolicConeHoop>(&s)) sym = lmonoid_reduct(*h);
  if (!sym) throw StructuralError("grothendieck: expected an l-monoid or a semihoop");
  out.result["group"] = "Z^" + std::to_string(sym->rank());
  out.result["order"] = sym->order() == ConeOrder::natural ? "componentwise" : "reverse componentwise";
  out.result["trivial_group"] = false;
  out.result["h_injective"] = true;
  out.result["cancellative"] = is_cancellative(*sym);
}

void do_states(const Command& c, Output& out) {
  need_args(c, 1, "SEMIHOOP [STATE]");
  const io::Structure s = io::parse_structure(io::read_json_file(c.args[0]));
  std::optional<io::SemihoopState> state;
  if (c.args.size() > 1) state = io::parse_state(io::read_json_file(c.args[1]));

  if (const auto* h = std::get_if<FiniteSemihoop>(&s)) {
    const ValidationReport hr = validate_semihoop(*h);
    const auto carrier = h->carrier();
    const auto pairs = all_pairs(std::span<const Index>(carrier));
    const HoopKind kind{hr.flag("prelinear").value_or(false), hr.flag("basic").value_or(false),
                        hr.flag("divisible").value_or(false)};
    if (!state) {
      Json states = Json::array();
      for (const auto& w : enumerate_states_finite(*h)) states.push_back(io::to_json(io::SemihoopState{w}));
      out.result["states"] = states;
      return;
    }
    const auto* w = std::get_if<TableState>(&*state);
    if (!w) throw StructuralError("states: a finite semihoop needs a 'values' state");
    if (w->values.size() != h->size()) throw StructuralError("states: 'values' does not cover the carrier");
    out.reports.push_back(validate_state(*h, *w, std::span<const Index>(carrier)));
    out.reports.push_back(state_properties(*h, *w, std::span<const std::pair<Index, Index>>(pairs), kind));
    if (out.reports.front().ok()) {
      FiniteGroupStateResult g = state_to_kgroup_state(*h, *w);
      out.reports.push_back(std::move(g.report));
      RecoveredState back = kgroup_state_to_state(*h, g.sigma);
      ValidationReport rt("envelope roundtrip");
      CheckResult& rc = rt.add("w recovered");
      rc.instances = h->size();
      if (!(back.w == *w)) rc.fail({}, "differs", "equal");
      out.reports.push_back(std::move(rt));
    }
    return;
  }
  const auto* h = std::get_if<SymbolicConeHoop>(&s);
  if (!h) throw StructuralError("states: expected a semihoop");
  if (!state) throw StructuralError("states: a cone hoop needs a 'lambda' state file");
  const auto* w = std::get_if<WeightState>(&*state);
  if (!w) throw StructuralError("states: a cone hoop needs a 'lambda' state");
  if (w->lambda.size() != h->rank()) throw StructuralError("states: 'lambda' does not match the rank");
  const auto window = h->window(c.window);
  const auto pairs = all_pairs(std::span<const IntTuple>(window));
  out.reports.push_back(validate_state(*h, *w, std::span<const IntTuple>(window), c.window));
  out.reports.push_back(
      state_properties(*h, *w, std::span<const std::pair<IntTuple, IntTuple>>(pairs), {true, true, true}, c.window));
  const SymbolicGroupState sigma = state_to_kgroup_state(*h, *w);
  RecoveredWeights back = kgroup_state_to_state(*h, sigma, c.window);
  out.result["sigma_on_generators"] = Json::array();
  for (std::size_t i = 0; i < h->rank(); ++i) {
    out.result["sigma_on_generators"].push_back(sigma({unit_tuple(h->rank(), i), zero_tuple(h->rank())}).str());
  }
  out.result["recovered_lambda"] = io::to_json(back.w.lambda);
  out.reports.push_back(std::move(back.report));
}

void do_hyperstate(const Command& c, Output& out) {
  need_args(c, 3, "split|join|validate ALGEBRA HYPERSTATE");
  const std::string& mode = c.args[0];
  if (mode != "split" && mode != "join" && mode != "validate") {
    throw StructuralError("hyperstate: mode must be split, join or validate");
  }
  const Algebra a = load_algebra(c.args[1]);
  const Json hj = io::read_json_file(c.args[2]);
  const Frame f(a, c.window);
  const Hyperstate s = io::parse_hyperstate(hj, f);

  if (mode == "validate") {
    const Tabulation t = tabulate(f, s);
    ValidationReport v = validate_hyperstate(f, t);
    const bool ok = v.ok();
    out.reports.push_back(std::move(v));
    if (ok) out.reports.push_back(hyperstate_properties(f, t));
    return;
  }
  if (mode == "join") {
    const auto* params = std::get_if<HyperstateParams>(&s.form);
    if (!params) throw StructuralError("hyperstate join: needs a 'measure'/'lambda' document");
    JoinResult j = join_hyperstate(f, params->p, params->lambda);
    const Tabulation t = tabulate(f, j.s);
    Json values = Json::object();
    for (Frame::Id x = 0; x < f.window_size(); ++x) values[a.label(f.element(x))] = t[x]->str();
    out.result["values"] = values;
    out.reports.push_back(std::move(j.report));
    return;
  }
  SplitResult r = split_hyperstate(f, s);
  Json measure = Json::object();
  for (std::size_t k = 0; k < r.p.atoms.size(); ++k) measure[a.label(r.p.atoms[k])] = r.p.weights[k].str();
  Json w = Json::object();
  for (const auto& [x, v] : r.w) w[a.label(x)] = v.str();
  Json residuals = Json::object();
  for (const auto& [x, v] : r.residuals) residuals[a.label(x)] = v.str();
  out.result["measure"] = measure;
  out.result["lambda"] = io::to_json(r.lambda);
  out.result["w"] = w;
  out.result["residuals"] = residuals;
  out.reports.push_back(std::move(r.report));
}

void do_corpus(const Command& c, Output& out) {
  need_args(c, 1, "DIRECTORY");
  Json files = Json::array();
  for (const auto& p : write_corpus(c.args[0])) files.push_back(p);
  out.result["files"] = files;
}

std::string render_tsv(const Json& doc, const std::vector<ValidationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    std::istringstream lines(r.to_tsv());
    for (std::string line; std::getline(lines, line);) os << r.subject() << ": " << line << '\n';
  }
  if (doc.contains("error")) os << "error\tfail\t" << doc["error"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace

RunReport run(const Command& command) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rr;
  Json& doc = rr.document;
  doc["command"] = Json::object();
  doc["command"]["verb"] = command.verb;
  doc["command"]["args"] = command.args;
  doc["command"]["window"] = command.window;
  Output out;
  std::string error;
  try {
    if (command.window < 1) throw StructuralError("--window must be at least 1");
    if (command.verb == "validate") {
      do_validate(command, out);
    } else if (command.verb == "skeleton") {
      do_skeleton(command, out);
    } else if (command.verb == "radical") {
      do_radical(command, out);
    } else if (command.verb == "decompose") {
      do_decompose(command, out);
    } else if (command.verb == "grothendieck") {
      do_grothendieck(command, out);
    } else if (command.verb == "states") {
      do_states(command, out);
    } else if (command.verb == "hyperstate") {
      do_hyperstate(command, out);
    } else if (command.verb == "corpus") {
      do_corpus(command, out);
    } else {
      throw StructuralError("unknown verb '" + command.verb + "'");
    }
    rr.exit_code = kExitOk;
    for (const auto& r : out.reports) {
      if (!r.ok()) rr.exit_code = kExitCheckFailed;
    }
  } catch (const TheoremViolation& e) {
    out.reports.push_back(e.report());
    error = e.what();
    rr.exit_code = kExitCheckFailed;
  } catch (const PreconditionError& e) {
    error = std::string("precondition failed: ") + e.what();
    rr.exit_code = kExitCheckFailed;
  } catch (const ConsistencyError& e) {
    error = std::string("consistency failure: ") + e.what();
    rr.exit_code = kExitCheckFailed;
  } catch (const StructuralError& e) {
    error = std::string("input error: ") + e.what();
    rr.exit_code = kExitInputError;
  } catch (const std::exception& e) {
    error = std::string("input error: ") + e.what();
    rr.exit_code = kExitInputError;
  }

  doc["exit"] = rr.exit_code;
  doc["verdict"] = rr.exit_code == kExitOk ? "pass" : "fail";
  doc["reports"] = Json::array();
  for (const auto& r : out.reports) doc["reports"].push_back(r.to_json());
  doc["result"] = out.result;
  if (!error.empty()) doc["error"] = error;
  if (!command.no_timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing_ms"] = static_cast<std::int64_t>(ms);
  }
  rr.text = command.format == Format::json ? io::format(doc) : render_tsv(doc, out.reports);
  return rr;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<std::string, std::string>> corpus_documents() {
  std::vector<std::pair<std::string, std::string>> docs;
  auto add = [&](const std::string& name, const Json& j) { docs.emplace_back(name, io::format(j)); };

  for (const auto& [name, a] : corpus::base_algebras()) add("algebras/" + name + ".json", io::to_json(a));
  for (const auto& [name, a] : corpus::pairwise_products()) add("algebras/" + name + ".json", io::to_json(a));
  for (const auto& [name, h] : corpus::finite_semihoops()) add("semihoops/" + name + ".json", io::to_json(h));
  for (std::size_t k = 1; k <= 3; ++k) {
    add("semihoops/cone" + std::to_string(k) + ".json", io::to_json(SymbolicConeHoop(k)));
  }
  for (const auto& [name, m] : corpus::small_lmonoids()) add("lmonoids/" + name + ".json", io::to_json(m));
  add("lmonoids/cone-monoid2.json", io::to_json(SymbolicCancellativeMonoid(2, ConeOrder::natural)));

  add("states/godel3-zero.json", io::to_json(io::SemihoopState{TableState{std::vector<Rational>(3, Rational(0))}}));
  add("states/cone1-lambda2.json", io::to_json(io::SemihoopState{WeightState{{Rational(2)}}}));
  add("states/cone2.json", io::to_json(io::SemihoopState{WeightState{{Rational(1, 2), Rational(3)}}}));

  // Hyperstates: Chang rank 1 with weight 2 (parameters and explicit table),
  // Boolean 4 with weights 1/3, 2/3, and Boolean 4 x Chang rank 1.
  {
    const Algebra chang1 = RotationAlgebra(1);
    const SignedTuple top{true, zero_tuple(1)};
    Json j;
    j["measure"] = Json::object();
    j["measure"][component_label(top)] = "1";
    j["lambda"] = io::to_json(std::vector<Rational>{Rational(2)});
    add("hyperstates/chang1-lambda2.json", j);

    HyperstateTable t;
    for (const auto& x : chang1.window(kDefaultWindow)) {
      const auto& s = std::get<SignedTuple>(x[0]);
      const Rational n(s.exponent[0]);
      t.values[x] = s.radical ? DualRational(Rational(1), Rational(-2) * n) : DualRational(Rational(0), Rational(2) * n);
    }
    add("hyperstates/chang1-table.json", io::to_json(Hyperstate{t}, chang1));
  }
  {
    Json j;
    j["measure"] = Json::object();
    j["measure"]["1"] = "1/3";
    j["measure"]["2"] = "2/3";
    j["lambda"] = Json::array();
    add("hyperstates/boolean4-third.json", j);
  }
  {
    Json j;
    j["measure"] = Json::object();
    j["measure"]["(0;+[0])"] = "1/2";
    j["measure"]["(1;-[0])"] = "1/4";
    j["measure"]["(2;-[0])"] = "1/4";
    j["lambda"] = io::to_json(std::vector<Rational>{Rational(1, 2)});
    add("hyperstates/boolean4xchang1.json", j);
  }

  // Planted failures.
  add("fixtures/lukasiewicz3.json", io::to_json(Algebra(corpus::lukasiewicz_chain(3))));
  {
    HyperstateTable t;
    const Algebra b2 = corpus::boolean_algebra(1);
    for (const auto& x : b2.window(1)) t.values[x] = DualRational::zero();
    add("fixtures/hyperstate-zero.json", io::to_json(Hyperstate{t}, b2));
  }
  docs.emplace_back("fixtures/ragged.json",
                    "{\n  \"size\": 2,\n  \"times\": [[0,0],[0]],\n  \"impl\": [[1,1],[0,1]],\n"
                    "  \"meet\": [[0,0],[0,1]],\n  \"join\": [[0,1],[1,1]],\n  \"bot\": 0,\n  \"top\": 1\n}\n");
  return docs;
}

std::vector<std::string> write_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> written;
  for (const auto& [name, text] : corpus_documents()) {
    const fs::path path = fs::path(dir) / name;
    fs::create_directories(path.parent_path());
    std::ofstream o(path, std::ios::binary);
    if (!o) throw StructuralError("cannot write '" + path.string() + "'");
    o << text;
    written.push_back(name);
  }
  return written;
}

}  // namespace lexstate::cli
