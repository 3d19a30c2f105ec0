#pragma once

#include <iosfwd>
#include <string>

#include "geomlab/constants.hpp"
#include "geomlab/report.hpp"
#include "geomlab/theorems.hpp"

namespace geomlab {

/// Shortest text that still round-trips a double exactly (17 significant digits).
std::string format_real(double v);

/// CSV schema: header `lambda,value,witness_x,witness_y,evaluations`,
/// witnesses as semicolon-separated coordinates, reals with 17 significant
/// digits so a written sweep re-parses bit-identically.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
SweepResult read_sweep_csv(std::istream& in);

std::string to_json(const EstimateResult& r);
std::string to_json(const SweepResult& r);
std::string to_json(const CheckReport& r);
std::string to_json(const Classification& c, const std::string& space_label);

}  // namespace geomlab
