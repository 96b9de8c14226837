#include "nuclei/error.hpp"

namespace nuclei {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "malformed-line";
    case ErrorCode::kDuplicateTetrahedron: return "duplicate-tetrahedron";
    case ErrorCode::kRepeatedNode: return "repeated-node";
    case ErrorCode::kBadRoot: return "bad-root";
    case ErrorCode::kUnknownNode: return "unknown-node";
    case ErrorCode::kUnknownEdge: return "unknown-edge";
    case ErrorCode::kUnknownFace: return "unknown-face";
    case ErrorCode::kNotInternal: return "not-internal";
    case ErrorCode::kNotExternal: return "not-external";
    case ErrorCode::kHasInternalEdge: return "has-internal-edge";
    case ErrorCode::kBadEdgePattern: return "bad-edge-pattern";
    case ErrorCode::kNotRemovable: return "not-removable";
    case ErrorCode::kBadPath: return "bad-path";
    case ErrorCode::kNotAdmissible: return "not-admissible";
    case ErrorCode::kTooFewTriangles: return "too-few-triangles";
    case ErrorCode::kAdjacent: return "adjacent";
    case ErrorCode::kCommonNeighbor: return "common-neighbor";
    case ErrorCode::kBadDegree: return "bad-degree";
    case ErrorCode::kFaceMultiplicity: return "face-multiplicity";
    case ErrorCode::kCollapseVertexSets: return "collapse-vertex-sets";
    case ErrorCode::kCollapseEdgeSets: return "collapse-edge-sets";
    case ErrorCode::kCollapseFaceSets: return "collapse-face-sets";
    case ErrorCode::kInvariant: return "invariant";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kHasInternalNodes: return "has-internal-nodes";
  }
  return "unknown";
}

void invariant_failure(const std::string& what) {
  throw Error(ErrorCode::kInvariant, what);
}

}  // namespace nuclei
