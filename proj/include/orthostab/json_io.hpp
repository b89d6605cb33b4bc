#pragma once

#include <json.hpp>

#include "orthostab/isotropy.hpp"

namespace orthostab {

using nlohmann::json;

json scalar_to_json(const ExactScalar& x);
json scalar_to_json(const FloatScalar& x);

// Exact scalars accept integers, "p/q" strings, and {a, b, c, d} objects;
// non-integral JSON numbers are rejected (write them as rational strings).
ExactScalar exact_scalar_from_json(const json& j);
FloatScalar float_scalar_from_json(const json& j);

json matrix_to_json(const EMat& m);
json matrix_to_json(const FMat& m);

struct AnyMatrix {
  bool exact = true;
  EMat e;
  FMat f;
};
AnyMatrix matrix_from_json(const json& j);
EMat exact_matrix_from_json(const json& j);

json segment_spec_to_json(const SegmentSpec& s);
SegmentSpec segment_spec_from_json(const json& j);

json canonical_spec_to_json(const CanonicalSpec& s);
CanonicalSpec canonical_spec_from_json(const json& j);

json toeplitz_to_json(const ToeplitzElement& e);
ToeplitzElement toeplitz_from_json(const json& j);

json problem_to_json(const CongruenceProblem& p);
CongruenceProblem problem_from_json(const json& j);

json free_data_to_json(const FreeData& f, const SegmentSpec& spec);
FreeData free_data_from_json(const json& j);

json certificate_to_json(const Certificate& c);

}  // namespace orthostab
