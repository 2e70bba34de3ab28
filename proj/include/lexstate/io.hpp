#ifndef LEXSTATE_IO_HPP
#define LEXSTATE_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "lexstate/algebra.hpp"
#include "lexstate/lmonoid.hpp"
#include "lexstate/semihoop.hpp"
#include "lexstate/states.hpp"

// JSON documents. Every serializer emits one canonical text (fixed key
// order, two-space indent, table rows on one line), so parse followed by
// serialize reproduces a canonical file byte for byte.
//
//   l-monoid     {"size","add","meet","join","unit"}
//                {"kind":"cone-monoid","rank":k,"order":"natural"|"reversed"}
//   semihoop     {"size","times","impl","meet","top"}   {"kind":"cone","rank":k}
//   algebra      {"size","times","impl","meet","join","bot","top"}
//                {"kind":"rotation","rank":k}   {"kind":"product","factors":[...]}
//   state        {"values":{"0":"-1/2",...}}   {"lambda":["2",...]}
//   hyperstate   {"measure":{atom:"1/2",...},"lambda":[...]}   {"table":{element:"1+e-2",...}}

namespace lexstate::io {

using Json = nlohmann::ordered_json;

using Structure = std::variant<FiniteLMonoid, SymbolicCancellativeMonoid, FiniteSemihoop, SymbolicConeHoop, Algebra>;

/// Parses JSON text; throws StructuralError on syntax errors.
Json parse_json(std::string_view text, const std::string& source = "input");
/// Reads and parses a file; throws StructuralError if it cannot be read.
Json read_json_file(const std::string& path);

/// Canonical text of a document, ending in a newline.
std::string format(const Json& j);

/// Detects the kind of structure from its fields. Throws StructuralError
/// naming the offending field.
Structure parse_structure(const Json& j);
FiniteLMonoid parse_lmonoid(const Json& j);
FiniteSemihoop parse_semihoop(const Json& j);
Algebra parse_algebra(const Json& j);

Json to_json(const FiniteLMonoid& m);
Json to_json(const SymbolicCancellativeMonoid& m);
Json to_json(const FiniteSemihoop& h);
Json to_json(const SymbolicConeHoop& h);
Json to_json(const Algebra& a);
Json to_json(const Structure& s);

Rational parse_fraction(const Json& j, const std::string& field);

using SemihoopState = std::variant<TableState, WeightState>;
SemihoopState parse_state(const Json& j);
Json to_json(const SemihoopState& w);

/// Element labels are resolved against the algebra; measure keys must be the
/// skeleton atoms of the frame.
Hyperstate parse_hyperstate(const Json& j, const Frame& f);
Json to_json(const Hyperstate& s, const Algebra& a);

Json to_json(const std::vector<Rational>& values);

}  // namespace lexstate::io

#endif  // LEXSTATE_IO_HPP
