#pragma once

// JSON documents: complex.v1, coloring.v1, search.v1 and the eta reports.
// Integers that may not fit in 64 bits are written as decimal strings.

#include <string>

#include "eisenfold/coloring.hpp"
#include "eisenfold/search.hpp"
#include "eisenfold/surd.hpp"
#include "json.hpp"

namespace eisenfold {

using Json = nlohmann::ordered_json;

Json bigint_json(const BigInt& n);
BigInt bigint_from_json(const Json& j);  // accepts numbers and decimal strings
Json rational_json(const BigRational& q);  // [num, den]
Json lattice_json(const LatticePoint& p);  // [a, b]
Json surd_json(const QuadraticSurd& x);    // {r: [n,d], s: [n,d], rad}

Json complex_json(const QuotientComplex& c);
Json coloring_json(const FaceColoring& col);
// Rebuilds the complex from complex_ref and checks the bitstring length.
FaceColoring coloring_from_json(const Json& j);

Json search_json(const SearchReport& r, bool include_timing = false);
Json eta_limit_json(const EtaLimitReport& r);
Json ratio_scan_json(const QuadraticSurd& zeta, const std::vector<RatioRow>& rows);
Json ie_sweep_json(const std::vector<IeEntry>& rows, std::int64_t b_max);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace eisenfold
