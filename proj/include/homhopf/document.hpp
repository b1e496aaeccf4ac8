#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "homhopf/structures.hpp"

namespace homhopf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// The scalar field is unusable (characteristic 2).
struct FieldCharError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownExample : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Entry3 {
  std::size_t i, j, k;
  Scalar c;
};
struct Entry2 {
  std::size_t i, j;
  Scalar c;
};

struct AlgebraDocument;

struct DocumentProvenance {
  std::string construction;
  std::vector<std::string> factors;
  std::shared_ptr<const AlgebraDocument> base;
};

/// In-memory form of the JSON file format. Action and coaction blocks stay
/// sparse because their other dimension comes from a second document.
struct AlgebraDocument {
  Field field = Field::rational();
  std::size_t dim = 0;
  std::vector<std::string> basis;
  /// False for pure coalgebra documents, which omit "mul" and "unit".
  bool has_algebra = true;
  StructureTensor mul;
  Vec unit;
  std::optional<StructureTensor> comul;
  std::optional<Vec> counit;
  LinMap alpha;
  std::optional<LinMap> antipode;
  std::optional<std::vector<Entry3>> action;
  std::optional<std::vector<Entry3>> coaction;
  std::optional<std::vector<Entry2>> r;
  std::optional<DocumentProvenance> provenance;
};

AlgebraDocument parse_document(std::string_view text);
AlgebraDocument load_document(const std::string& path);
/// Canonical text: sorted keys, sorted sparse entries, zero entries
/// omitted, normalized scalars, two-space indent, trailing newline.
std::string serialize_document(const AlgebraDocument& doc);
void save_document(const AlgebraDocument& doc, const std::string& path);

/// Throws ParseError if mul or unit is missing.
HomAlgebra document_algebra(const AlgebraDocument& doc);
/// Throws ParseError if comul or counit is missing.
HomCoalgebra document_coalgebra(const AlgebraDocument& doc);
HomBialgebra document_bialgebra(const AlgebraDocument& doc);
/// Uses the stored antipode, or solves for one when it is absent.
HomHopfAlgebra document_hopf(const AlgebraDocument& doc);

AlgebraDocument hopf_document(const HomHopfAlgebra& h, std::vector<std::string> basis);

/// Dense tensor from a sparse block; throws ParseError on out-of-range
/// indices.
StructureTensor materialize(const std::vector<Entry3>& entries, Field f, std::size_t d0, std::size_t d1,
                            std::size_t d2, const std::string& what);
std::vector<Entry3> sparse_entries(const StructureTensor& t);

const std::vector<std::string>& builtin_names();
AlgebraDocument builtin_example(const std::string& name);

}  // namespace homhopf
