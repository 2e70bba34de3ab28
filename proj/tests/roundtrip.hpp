#ifndef LEXSTATE_TESTS_ROUNDTRIP_HPP
#define LEXSTATE_TESTS_ROUNDTRIP_HPP

#include <optional>
#include <string>

#include "lexstate/corpus.hpp"
#include "lexstate/io.hpp"

namespace roundtrip {

/// Algebra a corpus hyperstate document refers to, by file name.
inline lexstate::Algebra hyperstate_algebra(const std::string& name) {
  using namespace lexstate;
  if (name.find("chang1") != std::string::npos && name.find("boolean4") == std::string::npos) {
    return RotationAlgebra(1);
  }
  if (name.find("boolean4xchang1") != std::string::npos) {
    return Algebra::product({corpus::boolean_algebra(2), RotationAlgebra(1)});
  }
  if (name.find("boolean4") != std::string::npos) return corpus::boolean_algebra(2);
  return corpus::boolean_algebra(1);
}

/// Parses a corpus document with the parser for its kind and serializes it
/// again; nullopt for documents that are malformed on purpose.
inline std::optional<std::string> reserialize(const std::string& name, const std::string& text) {
  using namespace lexstate;
  if (name == "fixtures/ragged.json") return std::nullopt;
  const io::Json j = io::parse_json(text, name);
  if (name.rfind("states/", 0) == 0) return io::format(io::to_json(io::parse_state(j)));
  if (name.rfind("hyperstates/", 0) == 0 || name == "fixtures/hyperstate-zero.json") {
    const Algebra a = hyperstate_algebra(name);
    const Frame f(a, kDefaultWindow);
    return io::format(io::to_json(io::parse_hyperstate(j, f), a));
  }
  return io::format(io::to_json(io::parse_structure(j)));
}

}  // namespace roundtrip

#endif  // LEXSTATE_TESTS_ROUNDTRIP_HPP
