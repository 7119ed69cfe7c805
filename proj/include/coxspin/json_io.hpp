#pragma once

#include <json.hpp>

#include "coxspin/config.hpp"
#include "coxspin/picard.hpp"
#include "coxspin/polynomial.hpp"
#include "coxspin/spinor.hpp"
#include "coxspin/tree.hpp"
#include "coxspin/verify.hpp"

namespace coxspin {

using json = nlohmann::json;

// Rationals travel as strings "a" or "a/b".
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);  // {"x1^2*X2": "3/2", ...}

json subset_to_json(const EvenSubset& B);  // sorted array
EvenSubset subset_from_json(const json& j, int n);

json configuration_to_json(const Configuration& cfg);
Configuration configuration_from_json(const json& j);

json grassmann_to_json(const GrassmannPoint& g);
GrassmannPoint grassmann_from_json(const json& j);

json quadric_to_json(const Quadric& q);

json pic_to_json(const PicClass& d);

json tree_to_json(const PhyloTree& t);

json degree_report_to_json(const DegreeReport& r);
json main_report_to_json(const MainReport& r);

}  // namespace coxspin
