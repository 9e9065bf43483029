#pragma once

#include "ucn/lattice.hpp"
#include "ucn/limit_set.hpp"
#include "ucn/matrix.hpp"

#include <span>
#include <string>

namespace ucn {

// Stable text formats. All emitters are deterministic: fixed field order,
// fixed float formatting, no timestamps.

// {"rows":R,"cols":C,"entries":[["-1","0"],...]} -- decimal strings so that
// arbitrary-precision entries survive any JSON consumer.
std::string matrix_to_json(const IntegerMatrix& m);

// {"word":[...],"terminal":[...],"ledger":[[step,gen,value],...]}
// Numbers are emitted as JSON integers when they fit in 64 bits, else as
// decimal strings.
std::string certificate_to_json(const ReductionCertificate& cert);

// {"char_poly":[...ascending...],"radius":r,"entropy":log r}
std::string spectrum_to_json(std::span<const BigInt> char_poly_ascending, double radius);

// {"word":[...],"log_radius":h,"radius":r}
std::string entropy_to_json(std::span<const int> word, double radius);

// header "word,cx,cy,r"; word as dash-separated letters, empty for roots.
std::string circles_to_csv(std::span<const GasketCircle> circles);

// Single <svg> root, stroke-only circles, viewBox fitted to the four root
// circles with a 5% margin.
std::string circles_to_svg(std::span<const GasketCircle> circles);

// header "x1,...,x{dim}"; one row per point.
std::string cloud_to_csv(const PointCloud& cloud);

} // namespace ucn
