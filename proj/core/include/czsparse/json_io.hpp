#pragma once

#include <nlohmann/json.hpp>

#include "czsparse/cz_decomposition.hpp"
#include "czsparse/localization.hpp"
#include "czsparse/modulus.hpp"
#include "czsparse/sparse_engine.hpp"
#include "czsparse/whitney.hpp"

namespace czsparse {

using json = nlohmann::json;

// Region wire format: {"dim": d, "grid_level": s, "cells": [[a_1..a_d], ...]},
// cells sorted lexicographically.
json region_to_json(const Region& r);
Region region_from_json(const json& j);

// GridFunction: values as decimal strings in anchor-lexicographic order for
// bit-stable round trips.
json grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const json& j);

json cube_to_json(const DyadicCube& q);
DyadicCube cube_from_json(const json& j);
json box_to_json(const GridBox& b);

// Cover: {"cubes": [...], "frontier": [...], "c_w": "p/q", "s_floor": s}
json cover_to_json(const WhitneyCover& c);
json cover_check_to_json(const CoverCheck& c);

json cz_report_to_json(const CZReport& r);
json dini_to_json(const DiniResult& r);
json pairing_to_json(const PairingResult& r);
json localization_to_json(const LocalizationReport& r);

json sparse_family_to_json(const SparseFamily& s);
json certificate_to_json(const DominationCertificate& c);
json quadrature_to_json(const QuadratureConfig& q);
json sparse_params_to_json(const SparseParams& p);

std::string format_double(double v);  // round-trip decimal

}  // namespace czsparse
