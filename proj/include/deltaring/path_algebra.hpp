#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaring/ring.hpp"

namespace deltaring {

struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (source, target); parallel edges allowed
};

// Validates vertex indices and acyclicity; a cycle is named in the error.
Quiver make_quiver(int vertices, std::vector<std::pair<int, int>> edges);

// Text format: "<V>; <src>-><tgt> <src>-><tgt> ...".
Quiver parse_quiver(const std::string& text);

// True iff two composable edges exist.
bool has_length2_path(const Quiver& q);

class PathAlgebra;
using PaPtr = std::shared_ptr<const PathAlgebra>;

struct PathElement {
  PaPtr algebra;
  std::vector<int64_t> c;  // path-major, field coefficients flattened

  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const PathElement& a, const PathElement& b) {
    return a.algebra.get() == b.algebra.get() && a.c == b.c;
  }
};

// The path algebra kQ of a finite acyclic quiver over a finite field given
// as a verified field presentation.  The basis is every path of Q including
// the trivial ones, ordered by (length, lexicographic edge indices).
class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
 public:
  using element_type = PathElement;
  static constexpr bool is_noncommutative = true;

  struct Path {
    int src, dst;
    std::vector<int> edges;  // traversal order
  };

  PathAlgebra(Quiver q, PresPtr field);

  const Quiver& quiver() const { return quiver_; }
  const PresPtr& field() const { return field_; }
  const std::vector<Path>& paths() const { return paths_; }
  size_t trivial_count() const { return size_t(quiver_.vertices); }
  std::string path_name(size_t i) const;

  unsigned __int128 size128() const;
  PathElement zero() const;
  PathElement one() const;  // the sum of all trivial paths
  PathElement path_unit(size_t path_index) const;
  PathElement element_at(uint64_t index) const;
  uint64_t index_of(const PathElement& a) const;

  PathElement add(const PathElement& a, const PathElement& b) const;
  PathElement neg(const PathElement& a) const;
  PathElement mul(const PathElement& a, const PathElement& b) const;
  PathElement pow(const PathElement& a, uint64_t e) const;
  // Unit criterion: every trivial-path coefficient is nonzero.
  bool is_unit(const PathElement& a) const;
  std::string to_string(const PathElement& a) const;
  std::string describe() const;

  // Candidate stream for unit scans; exactly the elements passing the
  // criterion, so the scan never touches the q^V non-candidates.
  unsigned __int128 unit_candidate_count() const;
  PathElement unit_candidate_at(uint64_t index) const;

  void check(const PathElement& a) const;

 private:
  Quiver quiver_;
  PresPtr field_;
  std::vector<Path> paths_;
  std::vector<std::vector<int>> concat_;  // concat_[i][j] = index of path_i . path_j, or -1
  size_t fdim_;
  uint64_t fsize_;
};

PaPtr make_path_algebra(Quiver q, PresPtr field);

struct PaDeltaResult {
  bool structural = false;
  std::optional<bool> brute;  // nullopt when the unit scan exceeds the cap
  std::optional<PathElement> witness;
  uint64_t unit_count = 0;
  bool verified() const { return brute.has_value(); }
};

// Structural verdict from the classification theorems, cross-checked against
// the brute-force unit scan when it fits the cap.
PaDeltaResult pa_is_delta_p(const PaPtr& algebra, int64_t p, uint64_t cap = kDefaultElementCap);

}  // namespace deltaring
