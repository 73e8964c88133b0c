#pragma once

#include <memory>
#include <string>

#include "kottwitz/arith.hpp"

namespace kottwitz {

class Pi1Group;

// Element of a finitely generated abelian group in invariant-factor coordinates:
// torsion coordinates reduced modulo their invariant factors, then free coordinates.
class Pi1Element {
 public:
  Pi1Element() = default;
  Pi1Element(std::shared_ptr<const Pi1Group> group, IntVector torsion, IntVector free);

  const Pi1Group& group() const;
  const std::shared_ptr<const Pi1Group>& group_ptr() const { return group_; }
  const IntVector& torsion_part() const { return torsion_; }
  const IntVector& free_part() const { return free_; }
  // Torsion coordinates followed by free coordinates.
  IntVector coords() const;

  bool is_torsion() const;
  bool is_zero() const;
  bool same_group(const Pi1Element& other) const;

  Pi1Element operator+(const Pi1Element& other) const;
  Pi1Element operator-(const Pi1Element& other) const;
  Pi1Element operator-() const;
  Pi1Element scaled(const Integer& k) const;
  bool operator==(const Pi1Element& other) const;
  bool operator<(const Pi1Element& other) const;

  std::string to_string() const;

 private:
  void require_same(const Pi1Element& other) const;

  std::shared_ptr<const Pi1Group> group_;
  IntVector torsion_;
  IntVector free_;
};

// (Z^n / span(columns)) presented by a Smith reduction; the free rows are put into
// Hermite form so that e.g. GL_n projects by the coordinate sum.
class Pi1Group : public std::enable_shared_from_this<Pi1Group> {
 public:
  // `relations` are the column vectors of length lattice_rank generating the kernel.
  static std::shared_ptr<const Pi1Group> create(size_t lattice_rank, const IntMatrix& relations, std::string key);

  size_t lattice_rank() const { return lattice_rank_; }
  const IntVector& torsion_moduli() const { return moduli_; }
  size_t free_rank() const { return free_rows_.size(); }
  const std::string& key() const { return key_; }
  bool is_torsion_free() const { return moduli_.empty(); }

  Pi1Element project(const IntVector& x) const;
  Pi1Element project(const SmallVector& x) const;
  // Image in the rationalisation: the free coordinates of a rational cocharacter.
  RatVector project_rational(const RatVector& x) const;
  IntVector lift(const Pi1Element& e) const;

  Pi1Element make(IntVector torsion, IntVector free) const;
  Pi1Element zero() const;
  std::vector<Pi1Element> torsion_elements() const;

 private:
  Pi1Group() = default;

  size_t lattice_rank_ = 0;
  std::string key_;
  IntVector moduli_;
  IntMatrix torsion_rows_;
  IntMatrix free_rows_;
  // One preimage in the lattice per coordinate generator.
  IntMatrix lift_torsion_;
  IntMatrix lift_free_;
};

}  // namespace kottwitz
