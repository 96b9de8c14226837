#ifndef NUCLEI_COMPLEX_HPP_
#define NUCLEI_COMPLEX_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nuclei/disk.hpp"
#include "nuclei/triangulation.hpp"

namespace nuclei {

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Outcome of the ball checks. Failures are reported, never thrown.
struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

/// Necessary conditions for a simplicial 3-ball: face multiplicity, boundary
/// 2-sphere, vertex links (disks / spheres), edge links (paths / cycles),
/// connectivity and the Euler identity. This is not full 3-ball recognition.
ValidationReport validate_ball(const Triangulation& t);

/// Signed change of the free variables <t, f_s, n_i>.
struct FDelta {
  long t = 0;
  long f = 0;
  long n = 0;
  auto operator<=>(const FDelta&) const = default;
  std::string str() const;
};

/// The f-vector <t, f_s, n_i> with its derived totals.
struct FVector {
  long t = 0;
  long f_s = 0;
  long n_i = 0;
  long f_tot = 0;
  long e_tot = 0;
  long n_tot = 0;
  long f_i = 0;
  long e_i = 0;
  long e_s = 0;
  long n_s = 0;

  bool operator==(const FVector&) const = default;
  FDelta operator-(const FVector& before) const {
    return {t - before.t, f_s - before.f_s, n_i - before.n_i};
  }
  /// All four Euler identities plus parity of f_s.
  bool euler_holds() const;
  std::string str() const;
};

/// Counts from incidence. Throws kInvariant if an Euler identity fails,
/// which signals a corrupted triangulation.
FVector f_vector(const Triangulation& t);

/// External flower E(n) (boundary polygon, normalized cycle; empty for an
/// internal node) and internal hemisphere I(n).
struct NodeFlower {
  NodeId node = 0;
  std::vector<NodeId> external;
  Disk hemisphere;
};

/// For an external edge: E(e) is the pair of apexes of its two external
/// faces and I(e) the path of edges opposite e, ordered from E(e)[0].
/// For an internal edge E(e) is empty and I(e) is a cycle.
struct EdgeFlower {
  Edge edge{};
  std::vector<NodeId> external;
  std::vector<NodeId> hemisphere;
};

NodeFlower flower(const Triangulation& t, NodeId node);
EdgeFlower flower(const Triangulation& t, const Edge& edge);

/// External degree |E(n)|.
std::size_t external_degree(const Triangulation& t, NodeId node);

struct DepthMap {
  std::map<NodeId, int> depth;

  int of(NodeId n) const { return depth.at(n); }
  int max_depth() const;
  std::vector<NodeId> at(int d) const;
};

/// Edge distance of every node to the set of external nodes.
DepthMap depth_map(const Triangulation& t);

}  // namespace nuclei

#endif  // NUCLEI_COMPLEX_HPP_
