#pragma once

#include <json.hpp>

#include "polystab/quiver.hpp"
#include "polystab/stabspace.hpp"
#include "polystab/walls.hpp"

namespace polystab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

// Rational <-> "p/q"
Json toJson(const Rational& x);
Rational rationalFromJson(const Json& j);

// GaussianRational <-> {"re": "p/q", "im": "p/q"}
Json toJson(const GaussianRational& z);
GaussianRational gaussianFromJson(const Json& j);

// CPoly <-> [GaussianRational...], lowest degree first
Json toJson(const CPoly& p);
CPoly cpolyFromJson(const Json& j);

// PhaseGerm <-> {"poly": [...], "branch": k}
Json toJson(const PhaseGerm& g);
PhaseGerm phaseGermFromJson(const Json& j);

// NumClass <-> {"<degree>": [GaussianRational...]}; absent degrees are zero
Json toJson(const NumClass& c);
NumClass numClassFromJson(const Json& j, const ModelPtr& model);

// Ring model: {"dimension", "bases", "products", "integrate", "effective",
// "td"?}
Json toJson(const GradedRingModel& m);
ModelPtr modelFromJson(const Json& j);

// Accepts preset names "P1".."P9", "degree-only:<n>[:<top>]", or a file path.
ModelPtr loadModel(const std::string& nameOrPath);

// Omega data: {"omega", "rho", "p", "U", "model"}; the model is resolved via
// loadModel unless one is supplied.
Json toJson(const OmegaData& o);
OmegaValidation omegaFromJson(const Json& j, ModelPtr model = nullptr);

Json toJson(const DualizingData& d);
DualizingData dualizingFromJson(const Json& j, const ModelPtr& model);

// Quiver model: {"vertices", "arrows": [{"from","to"}], "field", "charges",
// "cap"?}; rep: {"dims": {vertex: n}, "matrices": {"from->to": [[...]]}}
Json toJson(const QuiverModel& m);
QuiverModel quiverFromJson(const Json& j);
Json repToJson(const QuiverModel& m, const QuiverRep& r);
QuiverRep repFromJson(const Json& j, const QuiverModel& m);

// Presentation: {"objects": [{"label", "Z", "phiPlus", "phiMinus",
// "semistable"}]}
Json toJson(const FiniteStabilityPresentation& p);
FiniteStabilityPresentation presentationFromJson(const Json& j);

Json toJson(const CentralChargeMap& m);
CentralChargeMap chargeMapFromJson(const Json& j);

Json toJson(const SurfaceClass& c);
SurfaceClass surfaceClassFromJson(const Json& j);
Json toJson(const SurfaceInput& c);
SurfaceInput surfaceInputFromJson(const Json& j);

Json loadJsonFile(const std::string& path);

}  // namespace polystab
