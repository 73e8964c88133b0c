#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kottwitz/arith.hpp"
#include "kottwitz/coweight.hpp"
#include "kottwitz/pi1.hpp"

namespace kottwitz {

enum class Family { A, B, C, D, E, F, G, GL };

struct ComponentSpec {
  Family family = Family::GL;
  int rank = 1;  // number of simple roots, or n for GL_n
  int galois_order = 1;
};

struct ComponentInfo {
  ComponentSpec spec;
  int node_offset = 0;
  int coord_offset = 0;
  int coord_dim = 0;
  int num_nodes = 0;
};

// Sorted set of simple-root indices.
using Levi = std::vector<int>;

std::string family_name(Family f);
std::string component_label(const ComponentSpec& c);

// "<family>:<rank>[:galois=<k>]" joined by '+', e.g. "gl:4", "d:4:galois=3", "a:2+gl:1".
std::vector<ComponentSpec> parse_group_descriptor(const std::string& text);
// Labels such as "F4", "2E6", "3D4", "GL3" (product with 'x').
std::vector<ComponentSpec> parse_type_label(const std::string& text);

class BasedRootDatum {
 public:
  BasedRootDatum() = default;

  size_t rank() const;
  size_t num_simple() const;
  // One functional per simple root, in the dual of the lattice basis.
  const SmallMatrix& simple_roots() const;
  // One lattice vector per simple coroot.
  const SmallMatrix& simple_coroots() const;
  // cartan()[i][j] = <alpha_i, alpha_j^vee>
  const SmallMatrix& cartan() const;
  const std::vector<int>& galois() const;
  int galois_order() const;
  const SmallMatrix& galois_matrix() const;
  const std::string& type_label() const;
  // Filled for data built from component specs; empty for Levi subdata.
  const std::vector<ComponentInfo>& components() const;

  // Weyl group acts by permuting each coordinate block (GL-type data and their Levis).
  bool is_permutation_type() const;
  const std::vector<std::vector<int>>& coordinate_blocks() const;

  const SmallMatrix& positive_roots() const;
  const SmallMatrix& positive_root_coefficients() const;
  const SmallVector& two_rho() const;
  const SmallVector& regular_vector() const;
  const std::vector<int>& w0_word() const;
  const SmallMatrix& w0_matrix() const;
  // w0(alpha_i) = -alpha_{tau(i)}
  const std::vector<int>& tau() const;
  const RatMatrix& inverse_cartan() const;

  const Pi1Group& pi1() const;
  std::shared_ptr<const Pi1Group> pi1_ptr() const;

  Levi all_nodes() const;
  std::vector<Levi> galois_orbits() const;
  bool is_galois_stable(const Levi& nodes) const;
  // Indices of this datum's simple roots inside the top-level datum.
  const Levi& parent_nodes() const;
  bool is_levi() const;
  // Subdatum on the given nodes (numbered in this datum). Cached.
  BasedRootDatum levi(const Levi& nodes) const;
  // Converts a node set of this datum into the top-level numbering.
  Levi to_top(const Levi& nodes) const;

  // Coefficients c with x = sum c_i alpha_i^vee, or nullopt if x is not in the coroot span.
  std::optional<RatVector> coroot_coefficients(const Coweight& x) const;

  bool operator==(const BasedRootDatum& other) const;

  struct Impl;

 private:
  BasedRootDatum(std::shared_ptr<const Impl> impl, std::shared_ptr<const Impl> root);
  const Impl& impl() const;

  std::shared_ptr<const Impl> impl_;
  std::shared_ptr<const Impl> root_;

  friend BasedRootDatum build_datum(const std::vector<ComponentSpec>& components);
};

BasedRootDatum build_datum(const std::vector<ComponentSpec>& components);
BasedRootDatum build_datum(Family family, int rank, int galois_order = 1);
BasedRootDatum build_datum(const std::string& descriptor);

// Standard GL_n Levi from block sizes, e.g. {2,1} -> nodes {0}.
Levi gl_block_levi(const std::vector<int>& block_sizes);

std::string format_levi(const Levi& nodes);

}  // namespace kottwitz
