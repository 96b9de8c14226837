#include "nuclei/bound.hpp"

#include <algorithm>
#include <cctype>

#include "nuclei/error.hpp"

namespace nuclei {
namespace {

using Key = std::array<int, 3>;
using Poly = std::map<Key, BigInt>;

int weight(const Key& k) { return 3 * k[0] + 3 * k[1] + k[2]; }

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::kParse, "not a rational number: '" + std::string(whole) + "'");
  return BigInt(std::string(s));
}

Poly multiply(const Poly& a, const Poly& b, int limit) {
  Poly out;
  for (const auto& [ka, ca] : a) {
    int wa = weight(ka);
    if (wa > limit) continue;
    for (const auto& [kb, cb] : b) {
      if (wa + weight(kb) > limit) continue;
      out[{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}] += ca * cb;
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = !s.empty() && s.front() == '-';
  if (negative) s.remove_prefix(1);
  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt q = parse_digits(s.substr(slash + 1), text);
    if (q == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_digits(s.substr(0, slash), text), q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = (whole.empty() ? BigInt(0) : parse_digits(whole, text)) * scale +
                 (frac.empty() ? BigInt(0) : parse_digits(frac, text));
    r = Rational(num, scale);
  } else {
    r = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

long catalog_k1(const NucleusCatalog& catalog) {
  if (catalog.k1()) return *catalog.k1();
  long k1 = 2;
  for (const auto& [tf, rho] : catalog.counts()) {
    while (BigInt(rho) > boost::multiprecision::pow(BigInt(k1), static_cast<unsigned>(tf.first)))
      ++k1;
  }
  return k1;
}

Rational bound_radius(long k1) {
  if (k1 < 1) throw Error(ErrorCode::kOutOfRange, "K1 must be positive");
  return std::min(Rational(1, 10), Rational(1, 2 * k1));
}

BoundSeries bound_series(const NucleusCatalog& catalog, int max_weight, const Rational& s) {
  if (max_weight < 0 || max_weight > 200)
    throw Error(ErrorCode::kOutOfRange, "weight bound must be in 0..200");
  BoundSeries out;
  out.max_weight = max_weight;
  out.s = s;
  out.k1 = catalog_k1(catalog);
  out.s_star = bound_radius(out.k1);
  if (s < 0 || s > out.s_star)
    throw Error(ErrorCode::kOutOfRange, "s = " + format_rational(s) + " outside [0, " +
                                            format_rational(out.s_star) + "]");

  std::vector<std::pair<std::pair<int, int>, long>> rho;
  int max_slots = 0;
  for (const auto& [tf, count] : catalog.counts()) {
    if (count <= 0 || tf.first <= 0 || tf.second < 4) continue;
    rho.push_back({tf, count});
    max_slots = std::max(max_slots, tf.second - 1);
  }

  // A root vertex contributes v = 1, t >= 1, f >= 1 to the weight, so the
  // slot products only matter up to weight max_weight - 7.
  const int limit = max_weight - 7;
  Poly a{{{0, 0, 0}, 1}};
  for (int round = 0; round <= max_weight / 6 + 1; ++round) {
    Poly slot{{{0, 0, 1}, 1}};
    for (const auto& [k, c] : a)
      if (k[2] > 0 && weight(k) - 1 <= limit) slot[{k[0], k[1], k[2] - 1}] += c;
    std::vector<Poly> power{Poly{{{0, 0, 0}, 1}}};
    for (int i = 1; i <= max_slots && limit >= 0; ++i)
      power.push_back(multiply(power.back(), slot, limit));

    Poly next{{{0, 0, 0}, 1}};
    for (const auto& [tf, count] : rho) {
      auto [t0, f0] = tf;
      if (f0 - 1 >= static_cast<int>(power.size())) continue;
      for (const auto& [k, c] : power[f0 - 1]) {
        Key key{k[0] + 1, k[1] + t0, k[2] + 1};
        if (weight(key) <= max_weight) next[key] += c * count;
      }
    }
    bool stable = next == a;
    a = std::move(next);
    if (stable) break;
  }

  out.coefficients = a;
  std::vector<Rational> by_weight(max_weight + 1);
  for (const auto& [k, c] : a) by_weight[weight(k)] += Rational(c);
  Rational total = 0, power = 1;
  for (int m = 0; m <= max_weight; ++m) {
    total += by_weight[m] * power;
    power *= s;
    if (!out.partial.empty() && total < out.partial.back()) out.monotone = false;
    out.partial.push_back(total);
  }
  return out;
}

}  // namespace nuclei
