#pragma once

#include <string_view>

#include "hypmetric/liouville.hpp"
#include "hypmetric/metric.hpp"
#include "hypmetric/rigidity.hpp"

namespace hypmetric {

// Text specs used by the command-line tool. All parsers throw ParseError.
//
//   domain:  disk | pdisk | pdiskR:<R> | annulus:<r> | halfplane | strip:<h>
//   map:     phi | example1 | square | mobius:<re>,<im>
//   metric:  <domain> | conical:<alpha> | conical-scaled:<alpha>,<c>
//            | pull:<map>:<metric>

DomainModel parse_domain(std::string_view text);
HolomorphicMap parse_map(std::string_view text);
/// Pullbacks are taken over the domain of the target metric.
MetricDensity parse_metric(std::string_view text);
/// "re,im" or a bare real.
Complex parse_complex(std::string_view text);
double parse_real(std::string_view text);
/// general | puncture | conical:<alpha>
BoundarySetting parse_setting(std::string_view text);
/// pdisk | pdiskR:<R> | conical:<alpha> | conical-scaled:<alpha>,<c>
RadialFamily parse_family(std::string_view text);

}  // namespace hypmetric
