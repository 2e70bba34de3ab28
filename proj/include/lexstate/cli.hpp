#ifndef LEXSTATE_CLI_HPP
#define LEXSTATE_CLI_HPP

#include <string>
#include <vector>

#include "lexstate/io.hpp"

namespace lexstate::cli {

enum class Format { json, tsv };

struct Command {
  /// validate, skeleton, radical, decompose, grothendieck, states,
  /// hyperstate, corpus.
  std::string verb;
  /// Positional arguments: for hyperstate the mode (split, join, validate)
  /// comes first; for decompose, element labels may follow the file.
  std::vector<std::string> args;
  int window = 8;
  Format format = Format::json;
  /// validate only: run the MTL axioms without (DL) and (Inv).
  bool mtl_only = false;
  /// Omit the timing field, for byte-comparable output.
  bool no_timing = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunReport {
  int exit_code = kExitOk;
  /// Command echo, reports, result, error, timing.
  io::Json document;
  /// The document rendered in the requested format.
  std::string text;
};

/// Parses every input before computing; never throws.
RunReport run(const Command& command);

/// Writes the corpus documents and planted-failure fixtures under `dir`;
/// returns the relative paths written.
std::vector<std::string> write_corpus(const std::string& dir);

/// name -> canonical document text for every corpus file.
std::vector<std::pair<std::string, std::string>> corpus_documents();

}  // namespace lexstate::cli

#endif  // LEXSTATE_CLI_HPP
