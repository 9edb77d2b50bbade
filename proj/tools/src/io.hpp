#pragma once

#include "heartglue/complex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace heartglue::cli {

using nlohmann::json;

// Parse or validation failure anchored to a line of the input file.
class InputError : public std::runtime_error {
 public:
  InputError(std::string file, int line, const std::string& message);

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::string file_;
  int line_;
  std::string message_;
};

// Line of the first character of every value, keyed by JSON pointer.
std::map<std::string, int> value_lines(const std::string& text);

struct Document {
  std::string path;
  json doc;
  std::map<std::string, int> lines;

  int line_of(const std::string& pointer) const;
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const;
};

Document read_document(const std::string& path);

struct LoadedAlgebra {
  std::string name;
  std::string path;
  AlgebraPtr alg;
};

// A path, or the name of a corpus algebra or fixture.
LoadedAlgebra load_algebra(const std::string& path_or_name);
AlgebraPtr algebra_from_json(const Document& d);

struct NamedObject {
  std::string name;
  Cx cx;
};

struct ObjectSet {
  std::vector<NamedObject> objects;
  std::vector<int> shifts;     // empty unless given
  std::optional<bool> strong;  // requested strongness
};

ObjectSet load_objects(const std::string& path, const AlgebraPtr& alg);
ObjectSet objects_from_json(const Document& d, const AlgebraPtr& alg);
// P_1, ..., P_n as complexes in degree 0.
ObjectSet projective_objects(const AlgebraPtr& alg);

Rep rep_from_json(const Document& d, const std::string& pointer, const AlgebraPtr& alg);

// HEARTGLUE_CORPUS_DIR, else the directory configured at build time.
std::string corpus_dir();
const std::vector<std::string>& corpus_names();
std::vector<LoadedAlgebra> load_corpus();

}  // namespace heartglue::cli
