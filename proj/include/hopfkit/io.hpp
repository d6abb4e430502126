#pragma once

// JSON forms: algebra.v1, hopf.v1, comodalg.v1 and report objects.
// Scalars are strings in the parse_scalar grammar. Objects keep insertion
// order so equal inputs serialize to identical bytes.

#include <string>

#include <json.hpp>

#include "hopfkit/exactness.hpp"
#include "hopfkit/morita.hpp"
#include "hopfkit/symbolic.hpp"

namespace hk {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const Field& f);

Json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const Json& j, const Field& f);

// `hopf` is written as "builtin:kp" when the comodule algebra is over KP.
Json comodalg_to_json(const ComoduleAlgebra& a);
ComoduleAlgebra comodalg_from_json(const Json& j, const Field& f);

// builtin:kp, builtin:klein4, builtin:sweedler, or a hopf.v1 file.
HopfAlgebra load_hopf(const std::string& ref, const Field& f);
// catalog:<name>, builtin:<hopf> (its regular comodule algebra), or a comodalg.v1 file.
ComoduleAlgebra load_comodalg(const std::string& ref, const Field& f);

Json subspace_to_json(const Subspace& s);
Json matrix_to_json(const Matrix& m);
Json hopf_report_to_json(const HopfReport& r);
Json verdict_to_json(const ExactnessVerdict& v);
Json iso_to_json(const IsoSearch& s);
Json fingerprint_to_json(const FusionFingerprint& f);
Json poly_to_json(const MultiPoly& p);
Json vanishing_to_json(const VanishingResult& r);
Json replay_to_json(const ReplayReport& r);
Json classification_to_json(const Classification& c);

}  // namespace hk
