#pragma once

// ElementDocument codec: {"ring": {...}, "value": ...} with exact entries as
// strings, plus dispatch from a descriptor to its concrete carrier.

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>

#include "stardmp/core/errors.hpp"
#include "stardmp/core/star_ring.hpp"
#include "stardmp/exact/exact_ring.hpp"
#include "stardmp/finite/carriers.hpp"

namespace stardmp::io {

using json = nlohmann::ordered_json;

/// Malformed document; `field` is a JSON-pointer-like path to the culprit.
class DocumentError : public DomainError {
 public:
  DocumentError(std::string field, const std::string& what)
      : DomainError(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

json descriptor_to_json(const StarRingDescriptor& d);
StarRingDescriptor descriptor_from_json(const json& j, const std::string& path = "/ring");

json value_to_json(const exact::ExactMatrix& m);
json value_to_json(const finite::ZnElement& e);
json value_to_json(const finite::FiniteMatrix& m);

template <class E>
json element_to_json(const StarRingDescriptor& d, const E& e) {
  json j;
  j["ring"] = descriptor_to_json(d);
  j["value"] = value_to_json(e);
  return j;
}

using AnyElement = std::variant<exact::ExactMatrix, finite::ZnElement, finite::FiniteMatrix>;

struct Document {
  StarRingDescriptor ring;
  AnyElement value;
};

Document parse_document(const json& j);
/// Parses JSON text; syntax errors become DocumentError at "/".
Document parse_document_text(const std::string& text);
json document_to_json(const Document& doc);

/// Calls f(ring) with the concrete carrier for d.
template <class F>
decltype(auto) with_ring(const StarRingDescriptor& d, std::size_t budget, F&& f) {
  switch (d.kind) {
    case StarRingDescriptor::Kind::gaussian_rational_matrix:
      return f(exact::ExactMatrixRing(static_cast<std::size_t>(d.n), d.involution));
    case StarRingDescriptor::Kind::zn:
      return f(finite::ZnRing(static_cast<std::uint32_t>(d.n), budget));
    case StarRingDescriptor::Kind::zp_matrix:
      return f(finite::ZpMatrixRing(static_cast<std::uint32_t>(d.p), static_cast<std::size_t>(d.n), budget));
  }
  throw DomainError("unknown carrier kind");
}

/// The element of `doc` as Ring::Element; CarrierMismatch if the kinds differ.
template <class E>
const E& element_as(const Document& doc) {
  if (const E* e = std::get_if<E>(&doc.value)) return *e;
  throw CarrierMismatch("document element does not belong to the requested carrier");
}

}  // namespace stardmp::io
