#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdg {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using DartId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;
inline constexpr FaceId kNoFace = -1;
inline constexpr int kNoLayer = -1;  // BFS layer of vertices the source cannot reach

enum class Errc {
  self_loop,
  malformed_rotation,
  vertex_removed,
  not_on_outer_face,
  path_touches_boundary,
  not_grounded,
  no_common_face,
  width_too_large,
  family_too_large,
  guard_tripped,
  different_origins,
  parse_error,
  empty_after_thinning,
  bad_argument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pdg
