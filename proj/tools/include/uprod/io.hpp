#ifndef UPROD_IO_HPP
#define UPROD_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "uprod/classification.hpp"
#include "uprod/extending_datum.hpp"
#include "uprod/groups.hpp"
#include "uprod/special_products.hpp"

namespace uprod::io {

inline constexpr std::string_view kFormatVersion = "1";

enum class Kind {
  coalgebra,
  bialgebra,
  hopf,
  extending_datum,
  matched_pair,
  crossed_datum,
  group_table,
  cocycle,
  linear_map,
  report,
};

/// "extending-datum" etc.
std::string kind_name(Kind kind);
/// Throws FormatError on an unknown name.
Kind parse_kind(std::string_view name);

/// Alternatives in the order of Kind.
using Object = std::variant<Coalgebra, Bialgebra, Hopf, ExtendingDatum, MatchedPair, CrossedDatum, GroupTable,
                            LazyCocycle, LinMap, Report>;

/// One self-describing file: format_version, field, kind, payload, labels.
///
/// Maps are stored as {"in": [dims], "out": [dims], "entries": [...]} where
/// each entry is [i_1, ..., i_n, j_1, ..., j_m, "num", "den"]: the
/// coefficient of the basis tensor j in the image of the basis tensor i.
/// Vectors are maps with "in": [], linear forms maps with "out": []. Keys
/// are sorted, entries are ordered by (i, j), rationals are reduced, and
/// residues mod p are written in [1, p) over "1".
struct Document {
  Field field;
  Object object;

  Kind kind() const { return static_cast<Kind>(object.index()); }
  template <class T>
  const T& as() const { return std::get<T>(object); }
};

/// Canonical text; equal documents give identical bytes.
std::string serialize(const Document& doc);
/// Throws FormatError on malformed input, including structure maps whose
/// shapes do not match the kind.
Document parse(std::string_view text);

Document read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Document& doc);

/// Throws FormatError naming `what` when the document has another kind.
void expect_kind(const Document& doc, std::initializer_list<Kind> kinds, const std::string& what);

}  // namespace uprod::io

#endif  // UPROD_IO_HPP
