#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace glab {

enum class GeomKind { cube, torus };

// Finite nearest-neighbor graph: either the cube [-L,L]^d with its outer
// adjacency boundary, or a torus (side 2L per axis, or general per-axis
// extents). Sites are indexed lexicographically by coordinates so that
// golden files are stable. Immutable after construction.
class Geometry {
 public:
  // cube Lambda_L = [-L,L]^d, (2L+1)^d sites
  static std::shared_ptr<const Geometry> cube(int dim, int L);
  // torus side 2L per axis, (2L)^d sites
  static std::shared_ptr<const Geometry> torus(int dim, int L);
  // general box; for tori every extent must be >= 2. Cube boxes are centered
  // when the extent is odd, otherwise span [0, extent).
  static std::shared_ptr<const Geometry> box(GeomKind kind, std::vector<int> extents);

  int dim() const { return dim_; }
  GeomKind kind() const { return kind_; }
  // canonical side parameter; -1 for boxes not of the form cube(d,L)/torus(d,L)
  int side_param() const { return L_; }
  const std::vector<int>& extents() const { return extent_; }
  int site_count() const { return n_sites_; }

  std::vector<int> coords(int site) const;
  int site_at(std::span<const int> c) const;  // -1 if outside

  std::span<const int32_t> neighbors(int site) const {
    return {nbr_.data() + nbr_off_[site], nbr_.data() + nbr_off_[site + 1]};
  }
  int degree(int site) const { return static_cast<int>(nbr_off_[site + 1] - nbr_off_[site]); }
  int bond_count() const;  // internal bonds, each pair once

  // adjacency boundary (cube only): sites of Z^d adjacent to the box but not
  // in it; empty for tori. Each boundary site touches exactly one inner site.
  int boundary_count() const { return static_cast<int>(boundary_coords_.size()); }
  const std::vector<std::vector<int>>& boundary_coords() const { return boundary_coords_; }
  // cross bonds (inner site, boundary index), ordered by boundary index
  const std::vector<std::pair<int32_t, int32_t>>& boundary_bonds() const { return boundary_bonds_; }
  // boundary indices adjacent to a given inner site
  std::span<const int32_t> boundary_contacts(int site) const {
    return {bcontact_.data() + bcontact_off_[site], bcontact_.data() + bcontact_off_[site + 1]};
  }

  // torus translation: index of site + k (componentwise mod extent)
  int translate(int site, std::span<const int> k) const;

  nlohmann::json to_json() const;

 private:
  Geometry() = default;
  void build();

  int dim_ = 0;
  GeomKind kind_ = GeomKind::cube;
  int L_ = -1;
  std::vector<int> extent_;
  std::vector<int> lo_;  // coordinate of index 0 per axis
  int n_sites_ = 0;
  std::vector<int64_t> stride_;
  std::vector<int32_t> nbr_;
  std::vector<int64_t> nbr_off_;
  std::vector<std::vector<int>> boundary_coords_;
  std::vector<std::pair<int32_t, int32_t>> boundary_bonds_;
  std::vector<int32_t> bcontact_;
  std::vector<int64_t> bcontact_off_;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

// convenience mirroring the one-call builder
GeometryPtr build_geometry(int dim, int L, GeomKind kind);

// Block-grid decomposition of a torus: grid hyperslabs every k-th coordinate
// (k = floor(ell)-1) in each axis, blocks of side k-1 in between. If k does
// not divide every extent, ell is shrunk to the largest admissible value.
struct BlockDecomposition {
  GeometryPtr torus;
  double ell_input = 0.0;
  double ell = 0.0;  // adjusted value actually used
  bool adjusted = false;
  int spacing = 0;     // floor(ell) - 1
  int block_side = 0;  // floor(ell) - 2
  std::vector<int32_t> grid_sites;              // sorted
  std::vector<std::vector<int32_t>> blocks;     // each sorted
  std::vector<std::vector<int>> block_origins;  // lowest corner, on spacing*Z^d
  int q() const { return static_cast<int>(blocks.size()); }
};

BlockDecomposition build_block_grid(const GeometryPtr& torus, double ell, int min_block_side = 1);

// Chebyshev shells lambda_i = {x in Lambda_L : max_j |x_j| = i} of a cube.
struct ShellFamily {
  GeometryPtr cube;
  std::vector<std::vector<int32_t>> shells;  // index i = radius
};

ShellFamily shells(const GeometryPtr& cube_geom);

}  // namespace glab
