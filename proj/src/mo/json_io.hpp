#pragma once

#include <optional>
#include <string>
#include <variant>

#include "mo/families.hpp"
#include "mo/marked.hpp"
#include "mo/polynomial.hpp"
#include "mo/poset.hpp"

namespace mo {

// One family instance as carried by the spec JSON documents.
struct FamilyInstance {
  enum class Kind { ps, gt, gt_flagged };
  Kind kind = Kind::ps;
  GridSpec spec;
  std::optional<FlagSpec> flags;

  MarkedPoset to_marked() const;
};

// Documents accepted on the CLI: a bare poset, a skew shape, a marked poset,
// or a family spec. The reader sniffs the keys.
using Document = std::variant<Poset, SkewShape, MarkedPoset, FamilyInstance>;
Document read_document(const std::string& text);

// Readers raise Errc::parse on malformed or mistyped input.
Poset poset_from_json(const std::string& text);
SkewShape skew_from_json(const std::string& text);
MarkedPoset marked_from_json(const std::string& text);
FamilyInstance family_from_json(const std::string& text);

std::string poset_to_json(const Poset& p);
std::string skew_to_json(const SkewShape& s);
std::string marked_to_json(const MarkedPoset& m);
std::string family_to_json(const FamilyInstance& f);
std::string multipoly_to_json(const MultiPoly& p);

// Any document that denotes a marked poset (marked JSON or family spec).
MarkedPoset marked_from_document(const Document& doc);
// Any document that denotes a poset (poset JSON or skew shape).
Poset poset_from_document(const Document& doc);

}  // namespace mo
