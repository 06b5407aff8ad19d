#pragma once

#include <json.hpp>

#include "bpz.hpp"
#include "correlator.hpp"
#include "fusion.hpp"
#include "qcat.hpp"
#include "virasoro.hpp"

namespace vircat {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Rational& r);
ordered_json to_json(const GaussianRational& g);
ordered_json to_json(const PBWVector& v);
ordered_json to_json(const PuiseuxSeries& s);
ordered_json to_json(const GramMatrix& g);
ordered_json to_json(const FusionVector& f);
ordered_json to_json(const MatrixMap& m);
ordered_json to_json(const LinearODE& ode);
ordered_json to_json(const RigidityReport& r);
ordered_json to_json(const C3Report& r);
ordered_json to_json(const TopLevelReport& r);
ordered_json to_json(const AlgebraSummand& s);

ordered_json module_json(const HWModuleDescriptor& m);

}  // namespace vircat
