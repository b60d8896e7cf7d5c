#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichain/complex.hpp"
#include "equichain/examples.hpp"
#include "equichain/group.hpp"

namespace equichain {

/// A group either by name ("cyclic:n", "symmetric:n") or by its table.
struct GroupRef {
  std::string spec;
  std::vector<std::vector<int>> table;
  int identity = 0;

  friend bool operator==(const GroupRef&, const GroupRef&) = default;
};

/// Terms (coefficient, group element index) of one ZG matrix entry.
using EntryTerms = std::vector<std::pair<Integer, int>>;

/// A finite free ZG-complex. differentials[n][i][j] is the coefficient of
/// e_{n-1,i} in d e_{n,j}; differentials[0] is empty.
struct ComplexDocument {
  GroupRef group;
  std::string name;
  std::vector<int> ranks;
  std::vector<std::vector<std::vector<EntryTerms>>> differentials;

  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Malformed text or structure raises InvalidInput; a table violating the
/// group axioms raises ValidationError naming the first violation.
GroupRef parse_group_document(const std::string& json_text);
std::string serialize_group(const GroupRef& group);
GroupRef group_ref(const std::string& spec);
GroupPtr resolve_group(const GroupRef& group);

/// Parses and checks shapes; entries are normalized (sorted by element,
/// merged, zeros dropped).
ComplexDocument parse_complex_document(const std::string& json_text);
std::string serialize_complex(const ComplexDocument& doc);

/// Builds the complex, raising ValidationError when d^2 != 0 over ZG.
std::shared_ptr<FreeModuleComplex> build_complex(const ComplexDocument& doc);

/// The module basis of `complex` in degrees 0..top written as a document.
ComplexDocument document_from_complex(const ChainComplex& complex, int top, const GroupRef& group);

/// Generated inputs: "bar:<group>" (bar resolution over the point),
/// "lens:<p>:<k>" and "circle:<p>" (with trivial and circle spans).
std::optional<ExampleInput> builtin_example(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace equichain
