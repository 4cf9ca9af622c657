#pragma once

#include <json.hpp>

#include "chainsub/errors.hpp"
#include "chainsub/functors.hpp"

namespace chainsub::io {

using json = nlohmann::json;

/// Malformed input; the message names the offending field.
class InputError : public InvalidArgument {
 public:
  InputError(const std::string& field, const std::string& problem)
      : InvalidArgument("field '" + field + "': " + problem), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Ring elements are written as integer codes: the residue for Z/p^n, the
/// base-q digit string of the coefficients for F_q[T]/T^n.
json to_json(const RingDescriptor& d);
json to_json(const Ring& r, const RingVector& v);
json to_json(const FieldMatrix& m);
json to_json(const SubPair& p);
json to_json(const FramedObject& f);
json to_json(const DeltaRep& r);
json to_json(const DeltaMorphism& g);
json to_json(const Triple& t);
json to_json(const ModMorphism& f);
json to_json(const HomGroup& h);
json to_json(const KAlgebra& a);
json to_json(const EndQuotient& e);

/// Readers take the field path used in diagnostics.
RingDescriptor ring_from_json(const json& j, const std::string& field = "ring");
FieldMatrix matrix_from_json(const json& j, const FiniteField& k, std::size_t cols, const std::string& field);
SubPair pair_from_json(const json& j, const RingPtr& ring, const std::string& field = "pair");
Triple triple_from_json(const json& j, const FiniteField& k, const std::string& field = "triple");
DeltaRep rep_from_json(const json& j, const FiniteField& k, const std::string& field = "rep");
TwoMatrixModule two_matrix_from_json(const json& j, const FiniteField& k, const std::string& field = "module");

/// A named object ("I", "J", "S1", "S2") or an explicit {"M0", "M1"} pair.
SubPair object_from_json(const json& j, const RingPtr& ring, const std::string& field);

/// Parses text, reporting syntax errors as an InputError on `field`.
json parse(const std::string& text, const std::string& field);

}  // namespace chainsub::io
