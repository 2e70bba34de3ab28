#include "lexstate/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lexstate::io {

namespace {

const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw StructuralError("missing field '" + name + "'");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& name) {
  if (!j.is_number_integer()) throw StructuralError("field '" + name + "' must be an integer");
  return j.get<std::int64_t>();
}

std::size_t size_field(const Json& j) {
  const std::int64_t n = integer(field(j, "size"), "size");
  if (n < 1) throw StructuralError("field 'size' must be positive");
  return static_cast<std::size_t>(n);
}

Index index_field(const Json& j, const std::string& name, std::size_t size) {
  const std::int64_t v = integer(field(j, name), name);
  require_index(v, size, name);
  return static_cast<Index>(v);
}

Table table_field(const Json& j, const std::string& name, std::size_t size) {
  const Json& t = field(j, name);
  if (!t.is_array()) throw StructuralError("field '" + name + "' must be an array of rows");
  if (t.size() != size) {
    throw StructuralError("field '" + name + "' has " + std::to_string(t.size()) + " rows, expected " +
                          std::to_string(size));
  }
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (!t[r].is_array()) throw StructuralError("field '" + name + "' row " + std::to_string(r) + " is not an array");
    std::vector<std::int64_t> row;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      row.push_back(integer(t[r][c], name + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    rows.push_back(std::move(row));
  }
  return Table::from_rows(rows, name);
}

Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return rows;
}

std::size_t rank_field(const Json& j) {
  const std::int64_t k = integer(field(j, "rank"), "rank");
  if (k < 1 || k > static_cast<std::int64_t>(kMaxRank)) {
    throw StructuralError("field 'rank' must be in 1.." + std::to_string(kMaxRank));
  }
  return static_cast<std::size_t>(k);
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw StructuralError("field 'kind' must be a string");
  return k.get<std::string>();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), is_scalar)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? "," : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      emit(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

Json factor_json(const Factor& f) {
  if (const auto* fin = std::get_if<FiniteMTL>(&f)) {
    Json j;
    j["size"] = fin->size();
    j["times"] = table_json(fin->times_table());
    j["impl"] = table_json(fin->impl_table());
    j["meet"] = table_json(fin->meet_table());
    j["join"] = table_json(fin->join_table());
    j["bot"] = fin->bot();
    j["top"] = fin->top();
    return j;
  }
  Json j;
  j["kind"] = "rotation";
  j["rank"] = std::get<RotationAlgebra>(f).rank();
  return j;
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string format(const Json& j) {
  std::string out;
  emit(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------------------

FiniteLMonoid parse_lmonoid(const Json& j) {
  const std::size_t n = size_field(j);
  return FiniteLMonoid(table_field(j, "add", n), table_field(j, "meet", n), table_field(j, "join", n),
                       index_field(j, "unit", n));
}

FiniteSemihoop parse_semihoop(const Json& j) {
  const std::size_t n = size_field(j);
  return FiniteSemihoop(table_field(j, "times", n), table_field(j, "impl", n), table_field(j, "meet", n),
                        index_field(j, "top", n));
}

Algebra parse_algebra(const Json& j) {
  if (j.is_object() && j.contains("kind")) {
    const std::string kind = kind_of(j);
    if (kind == "rotation") return RotationAlgebra(rank_field(j));
    if (kind == "product") {
      const Json& fs = field(j, "factors");
      if (!fs.is_array() || fs.empty()) throw StructuralError("field 'factors' must be a nonempty array");
      std::vector<Algebra> factors;
      for (const auto& f : fs) factors.push_back(parse_algebra(f));
      if (factors.size() == 1) return factors.front();
      Algebra out = Algebra::product(factors);
      if (out.cone_rank() > kMaxRank) throw StructuralError("total cone rank exceeds " + std::to_string(kMaxRank));
      return out;
    }
    throw StructuralError("field 'kind': '" + kind + "' is not an algebra kind");
  }
  const std::size_t n = size_field(j);
  return FiniteMTL(table_field(j, "times", n), table_field(j, "impl", n), table_field(j, "meet", n),
                   table_field(j, "join", n), index_field(j, "bot", n), index_field(j, "top", n));
}

Structure parse_structure(const Json& j) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("kind")) {
    const std::string kind = kind_of(j);
    if (kind == "cone") return SymbolicConeHoop(rank_field(j));
    if (kind == "cone-monoid") {
      const Json& o = field(j, "order");
      if (o == "natural") return SymbolicCancellativeMonoid(rank_field(j), ConeOrder::natural);
      if (o == "reversed") return SymbolicCancellativeMonoid(rank_field(j), ConeOrder::reversed);
      throw StructuralError("field 'order' must be \"natural\" or \"reversed\"");
    }
    return parse_algebra(j);
  }
  if (j.contains("add")) return parse_lmonoid(j);
  if (j.contains("join") || j.contains("bot")) return parse_algebra(j);
  if (j.contains("times")) return parse_semihoop(j);
  throw StructuralError("cannot tell the structure kind: expected field 'add', 'times' or 'kind'");
}

Json to_json(const FiniteLMonoid& m) {
  Json j;
  j["size"] = m.size();
  j["add"] = table_json(m.add_table());
  j["meet"] = table_json(m.meet_table());
  j["join"] = table_json(m.join_table());
  j["unit"] = m.unit();
  return j;
}

Json to_json(const SymbolicCancellativeMonoid& m) {
  Json j;
  j["kind"] = "cone-monoid";
  j["rank"] = m.rank();
  j["order"] = m.order() == ConeOrder::natural ? "natural" : "reversed";
  return j;
}

Json to_json(const FiniteSemihoop& h) {
  Json j;
  j["size"] = h.size();
  j["times"] = table_json(h.times_table());
  j["impl"] = table_json(h.impl_table());
  j["meet"] = table_json(h.meet_table());
  j["top"] = h.top();
  return j;
}

Json to_json(const SymbolicConeHoop& h) {
  Json j;
  j["kind"] = "cone";
  j["rank"] = h.rank();
  return j;
}

Json to_json(const Algebra& a) {
  if (!a.is_product()) return factor_json(a.factors().front());
  Json j;
  j["kind"] = "product";
  j["factors"] = Json::array();
  for (const auto& f : a.factors()) j["factors"].push_back(factor_json(f));
  return j;
}

Json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

// ---------------------------------------------------------------------------

Rational parse_fraction(const Json& j, const std::string& name) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw StructuralError("field '" + name + "': " + e.what());
  }
  throw StructuralError("field '" + name + "' must be a fraction string or an integer");
}

Json to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

namespace {

std::vector<Rational> fraction_array(const Json& j, const std::string& name) {
  if (!j.is_array()) throw StructuralError("field '" + name + "' must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_fraction(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

SemihoopState parse_state(const Json& j) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("lambda")) return WeightState{fraction_array(j["lambda"], "lambda")};
  const Json& values = field(j, "values");
  if (!values.is_object()) throw StructuralError("field 'values' must map indices to fractions");
  TableState w;
  w.values.resize(values.size());
  std::vector<bool> seen(values.size(), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    std::size_t pos = 0;
    std::int64_t idx = -1;
    try {
      idx = std::stoll(it.key(), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != it.key().size()) throw StructuralError("values: key '" + it.key() + "' is not an index");
    require_index(idx, values.size(), "values");
    w.values[idx] = parse_fraction(it.value(), "values." + it.key());
    seen[idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw StructuralError("values: missing index");
  return w;
}

Json to_json(const SemihoopState& w) {
  Json j;
  if (const auto* t = std::get_if<TableState>(&w)) {
    Json values = Json::object();
    for (std::size_t i = 0; i < t->values.size(); ++i) values[std::to_string(i)] = t->values[i].str();
    j["values"] = values;
  } else {
    j["lambda"] = to_json(std::get<WeightState>(w).lambda);
  }
  return j;
}

Hyperstate parse_hyperstate(const Json& j, const Frame& f) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  const Algebra& a = f.algebra();
  if (j.contains("table")) {
    const Json& t = j["table"];
    if (!t.is_object()) throw StructuralError("field 'table' must map elements to values");
    HyperstateTable table;
    for (auto it = t.begin(); it != t.end(); ++it) {
      Element x = a.parse(it.key());
      if (!it.value().is_string()) throw StructuralError("table." + it.key() + " must be a string 'r+es'");
      try {
        table.values[x] = DualRational::parse(it.value().get<std::string>());
      } catch (const std::exception& e) {
        throw StructuralError("table." + it.key() + ": " + e.what());
      }
    }
    return {table};
  }
  const Json& m = field(j, "measure");
  if (!m.is_object()) throw StructuralError("field 'measure' must map atoms to fractions");
  HyperstateParams params;
  params.p.atoms = f.skeleton().atoms;
  params.p.weights.assign(params.p.atoms.size(), Rational(0));
  std::vector<bool> seen(params.p.atoms.size(), false);
  for (auto it = m.begin(); it != m.end(); ++it) {
    const Element x = a.parse(it.key());
    auto pos = std::find(params.p.atoms.begin(), params.p.atoms.end(), x);
    if (pos == params.p.atoms.end()) throw StructuralError("measure: '" + it.key() + "' is not a skeleton atom");
    const auto k = static_cast<std::size_t>(pos - params.p.atoms.begin());
    params.p.weights[k] = parse_fraction(it.value(), "measure." + it.key());
    seen[k] = true;
  }
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (!seen[k]) throw StructuralError("measure: missing atom '" + a.label(params.p.atoms[k]) + "'");
  }
  params.lambda = j.contains("lambda") ? fraction_array(j["lambda"], "lambda") : std::vector<Rational>{};
  if (params.lambda.size() != a.cone_rank()) {
    throw StructuralError("field 'lambda' has " + std::to_string(params.lambda.size()) + " entries, expected " +
                          std::to_string(a.cone_rank()));
  }
  return {params};
}

Json to_json(const Hyperstate& s, const Algebra& a) {
  Json j;
  if (const auto* t = std::get_if<HyperstateTable>(&s.form)) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [x, v] : t->values) rows.emplace_back(a.label(x), v.str());
    std::sort(rows.begin(), rows.end());
    Json table = Json::object();
    for (const auto& [k, v] : rows) table[k] = v;
    j["table"] = table;
    return j;
  }
  const auto& p = std::get<HyperstateParams>(s.form);
  Json measure = Json::object();
  for (std::size_t k = 0; k < p.p.atoms.size(); ++k) measure[a.label(p.p.atoms[k])] = p.p.weights[k].str();
  j["measure"] = measure;
  j["lambda"] = to_json(p.lambda);
  return j;
}

}  // namespace lexstate::io
