#ifndef NUCLEI_ERROR_HPP_
#define NUCLEI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace nuclei {

/// Error categories raised by parsing, moves and the pipeline. Each move
/// precondition has its own code so callers can tell violations apart.
enum class ErrorCode {
  kMalformedLine,
  kDuplicateTetrahedron,
  kRepeatedNode,
  kBadRoot,
  kUnknownNode,
  kUnknownEdge,
  kUnknownFace,
  kNotInternal,
  kNotExternal,
  kHasInternalEdge,
  kBadEdgePattern,
  kNotRemovable,
  kBadPath,
  kNotAdmissible,
  kTooFewTriangles,
  kAdjacent,
  kCommonNeighbor,
  kBadDegree,
  kFaceMultiplicity,
  kCollapseVertexSets,
  kCollapseEdgeSets,
  kCollapseFaceSets,
  kInvariant,
  kOutOfRange,
  kParse,
  kHasInternalNodes,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Throws kInvariant. Used for internal consistency guards.
[[noreturn]] void invariant_failure(const std::string& what);

inline void ensure(bool condition, const std::string& what) {
  if (!condition) invariant_failure(what);
}

}  // namespace nuclei

#endif  // NUCLEI_ERROR_HPP_
