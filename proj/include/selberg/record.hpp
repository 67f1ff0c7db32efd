#ifndef SELBERG_RECORD_HPP
#define SELBERG_RECORD_HPP

#include <string>
#include <vector>

#include "selberg/moments.hpp"

namespace selberg {

/// Serialized form of one computed moment polynomial. Rationals travel as
/// decimal integer strings in lowest terms, never as floats, so output is
/// exact at any magnitude and byte-stable under reparsing.
struct OutputRecord {
    long n = 0;
    long mu = 0;
    Rational tau, a, b;
    std::vector<Rational> coeffs;  // ascending degree, n*mu + 1 entries
    bool endpoint0_ok = false;
    bool endpoint1_ok = false;
    bool monic_ok = false;
};

OutputRecord make_output_record(const MomentResult& result);

/// Compact JSON object:
///   {"n":..,"mu":..,"tau":"p/q","a":"p/q","b":"p/q",
///    "coeffs":[{"num":"..","den":".."},...],
///    "checks":{"endpoint0":"pass","endpoint1":"pass","monic":"pass"}}
std::string to_json(const OutputRecord& record);
OutputRecord record_from_json(const std::string& text);

/// One "degree numerator/denominator" line per coefficient.
std::string to_plain(const OutputRecord& record);

} // namespace selberg

#endif
