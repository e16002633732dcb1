#pragma once

#include "balidx/group_ring.hpp"
#include "balidx/lattice.hpp"
#include "balidx/permutation.hpp"
#include "balidx/polynomial.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace balidx {

/// Parses cycle notation such as "(1 2 3)(4 5)" or "()" into a permutation of
/// degree n. Points are whitespace-separated; when n <= 9 a cycle written
/// without spaces, e.g. "(123)", is read one digit per point.
Permutation parse_cycles(std::string_view text, std::size_t n);

/// "()" for the identity, otherwise nontrivial cycles with space-separated
/// points, each starting at its smallest point.
std::string format_cycles(const Permutation &p);

/// Builds an element from (coefficient, cycle notation) pairs.
GroupRingElement make_element(std::size_t n,
                              std::initializer_list<std::pair<long, std::string_view>> terms);

struct Graph {
  std::vector<std::pair<unsigned, unsigned>> edges; ///< u < v, sorted
  friend bool operator==(const Graph &, const Graph &) = default;
};

struct Hypergraph {
  std::vector<std::vector<unsigned>> edges; ///< each ascending, sorted
  friend bool operator==(const Hypergraph &, const Hypergraph &) = default;
};

enum class DocumentKind { poly, graph, hypergraph, matrix, groupring };

std::string_view kind_name(DocumentKind kind);

/// One parsed input file: a `<kind> <n>` header and a kind-specific body.
struct InputDocument {
  std::size_t n = 0;
  std::variant<Polynomial, Graph, Hypergraph, IntegerMatrix, GroupRingElement> payload;

  DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }

  friend bool operator==(const InputDocument &, const InputDocument &) = default;
};

/// Throws ParseError (with a line number) on malformed input.
InputDocument parse_document(std::string_view text);
InputDocument read_document(const std::string &path);

std::string serialize(const InputDocument &doc);

InputDocument make_document(const Polynomial &f);
InputDocument make_document(const GroupRingElement &alpha);

/// The polynomial a structured document encodes: f_G for graphs, the sum of
/// edge monomials for hypergraphs, sum A_ij x_i^2 x_j for matrices.
Polynomial to_polynomial(const InputDocument &doc);

} // namespace balidx
