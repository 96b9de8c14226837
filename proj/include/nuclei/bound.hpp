#ifndef NUCLEI_BOUND_HPP_
#define NUCLEI_BOUND_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nuclei/trees.hpp"

namespace nuclei {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q", integers and plain decimals such as "0.1" (read exactly).
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);
/// Decimal approximation, for reports only.
double to_double(const Rational& r);

/// Smallest integer K1 >= 2 with rho(t, f) <= K1^t for every catalog entry,
/// unless the catalog states K1 itself.
long catalog_k1(const NucleusCatalog& catalog);

/// min(1/10, 1 / (2 K1)).
Rational bound_radius(long k1);

struct BoundSeries {
  int max_weight = 0;
  Rational s;
  Rational s_star;
  long k1 = 0;
  /// Upper bounds on the number of trees of nuclei with v vertices, t
  /// tetrahedra and f external faces, keyed by (v, t, f) with
  /// 3v + 3t + f <= max_weight.
  std::map<std::array<int, 3>, BigInt> coefficients;
  /// partial[m] sums coefficient * s^(3v + 3t + f) over weights <= m.
  std::vector<Rational> partial;
  bool monotone = true;
};

/// Each vertex is a rooted nucleus with rho(t0, f0) choices and f0 - 1
/// ordered slots, every slot either empty (one external face) or holding a
/// subtree whose root face is used up by the gluing. Throws kOutOfRange if
/// s is negative or exceeds s_star, or if max_weight is outside 0..200.
BoundSeries bound_series(const NucleusCatalog& catalog, int max_weight, const Rational& s);

}  // namespace nuclei

#endif  // NUCLEI_BOUND_HPP_
