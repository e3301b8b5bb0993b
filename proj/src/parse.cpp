#include "hypmetric/parse.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "hypmetric/witness.hpp"

namespace hypmetric {

namespace {

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::vector<double> parse_list(std::string_view text, std::size_t count) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) fail("expected " + std::to_string(count) + " numbers", text);
  return out;
}

bool take_prefix(std::string_view& text, std::string_view prefix) {
  if (!text.starts_with(prefix)) return false;
  text.remove_prefix(prefix.size());
  return true;
}

template <class F>
auto guarded(std::string_view text, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BadParameter) fail(e.what(), text);
    throw;
  }
}

}  // namespace

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) fail("not a number", text);
  return value;
}

Complex parse_complex(std::string_view text) {
  if (text.find(',') == std::string_view::npos) return {parse_real(text), 0.0};
  const auto v = parse_list(text, 2);
  return {v[0], v[1]};
}

DomainModel parse_domain(std::string_view text) {
  std::string_view rest = text;
  return guarded(text, [&] {
    if (rest == "disk") return DomainModel::disk();
    if (rest == "pdisk") return DomainModel::punctured_disk();
    if (rest == "halfplane") return DomainModel::half_plane();
    if (take_prefix(rest, "pdiskR:")) return DomainModel::punctured_disk_r(parse_real(rest));
    if (take_prefix(rest, "annulus:")) return DomainModel::annulus(parse_real(rest));
    if (take_prefix(rest, "strip:")) return DomainModel::strip(parse_real(rest));
    fail("unknown domain", text);
  });
}

HolomorphicMap parse_map(std::string_view text) {
  std::string_view rest = text;
  if (rest == "phi") return phi_map();
  if (rest == "example1") return example1_map();
  if (rest == "square") return square_map();
  if (take_prefix(rest, "mobius:")) {
    const Complex a = parse_complex(rest);
    if (!(std::abs(a) < 1.0)) fail("mobius parameter must satisfy |a| < 1", text);
    return mobius_map(a);
  }
  fail("unknown map", text);
}

MetricDensity parse_metric(std::string_view text) {
  std::string_view rest = text;
  if (take_prefix(rest, "pull:")) {
    // The map token may itself contain one ':' (mobius:<re>,<im>).
    std::size_t split = rest.find(':');
    if (split != std::string_view::npos && rest.substr(0, split) == "mobius") split = rest.find(':', split + 1);
    if (split == std::string_view::npos) fail("pullback needs pull:<map>:<metric>", text);
    const HolomorphicMap map = parse_map(rest.substr(0, split));
    const MetricDensity target = parse_metric(rest.substr(split + 1));
    if (!target.region().model) fail("pullback target has no model domain", text);
    return pullback(target, map, *target.region().model);
  }
  return guarded(text, [&] {
    if (take_prefix(rest, "conical-scaled:")) {
      const auto v = parse_list(rest, 2);
      return conical_scaled_metric(v[0], v[1]);
    }
    if (take_prefix(rest, "conical:")) return conical_metric(parse_real(rest));
    return hyperbolic_metric(parse_domain(text));
  });
}

BoundarySetting parse_setting(std::string_view text) {
  std::string_view rest = text;
  if (rest == "general") return BoundarySetting::general();
  if (rest == "puncture") return BoundarySetting::puncture();
  if (take_prefix(rest, "conical:")) return guarded(text, [&] { return BoundarySetting::conical(parse_real(rest)); });
  fail("unknown boundary setting", text);
}

RadialFamily parse_family(std::string_view text) {
  std::string_view rest = text;
  return guarded(text, [&] {
    if (rest == "pdisk") return RadialFamily::punctured_disk();
    if (take_prefix(rest, "pdiskR:")) return RadialFamily::punctured_disk_r(parse_real(rest));
    if (take_prefix(rest, "conical-scaled:")) {
      const auto v = parse_list(rest, 2);
      return RadialFamily::conical_scaled(v[0], v[1]);
    }
    if (take_prefix(rest, "conical:")) return RadialFamily::conical(parse_real(rest));
    fail("unknown radial family", text);
  });
}

}  // namespace hypmetric
