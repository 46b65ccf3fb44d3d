#pragma once

#include <gmpxx.h>

#include <string>

#include <json.hpp>

#include "soperm/asymptotics.hpp"
#include "soperm/oracle.hpp"
#include "soperm/patterns.hpp"
#include "soperm/permutation.hpp"

namespace soperm {

using Json = nlohmann::ordered_json;

/// Decimal rendering of an exact rational: the given number of significant
/// digits, round half to even. Fixed notation for moderate magnitudes,
/// scientific otherwise.
std::string decimal_string(const Rational& q, int significant_digits = 12);

Json to_json(const OverlapProfile& p);
Json to_json(const PalindromicDecomposition& d);
Json to_json(const Rational& q, bool with_decimal = true);
Json to_json(const FactorialExpansion& e);
Json to_json(const ClassificationReport& r);
Json to_json(const PatternCountTable& t, const Permutation& pi);
Json to_json(const SampleEstimate& e);

}  // namespace soperm
