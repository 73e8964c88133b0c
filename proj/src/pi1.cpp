#include "kottwitz/pi1.hpp"

#include <algorithm>
#include <sstream>

#include "kottwitz/errors.hpp"
#include "kottwitz/smith.hpp"

namespace kottwitz {

namespace {

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Pi1Element::Pi1Element(std::shared_ptr<const Pi1Group> group, IntVector torsion, IntVector free)
    : group_(std::move(group)), torsion_(std::move(torsion)), free_(std::move(free)) {
  const auto& moduli = group_->torsion_moduli();
  if (torsion_.size() != moduli.size() || free_.size() != group_->free_rank())
    throw InvalidArgument("pi1 element: coordinate count does not match the group");
  for (size_t i = 0; i < torsion_.size(); ++i) torsion_[i] = mod_positive(torsion_[i], moduli[i]);
}

const Pi1Group& Pi1Element::group() const {
  if (!group_) throw InvalidArgument("pi1 element without a group");
  return *group_;
}

IntVector Pi1Element::coords() const {
  IntVector out = torsion_;
  out.insert(out.end(), free_.begin(), free_.end());
  return out;
}

bool Pi1Element::is_torsion() const {
  return std::all_of(free_.begin(), free_.end(), [](const Integer& x) { return x == 0; });
}

bool Pi1Element::is_zero() const {
  return is_torsion() && std::all_of(torsion_.begin(), torsion_.end(), [](const Integer& x) { return x == 0; });
}

bool Pi1Element::same_group(const Pi1Element& other) const {
  return group_ && other.group_ && (group_ == other.group_ || group_->key() == other.group_->key());
}

void Pi1Element::require_same(const Pi1Element& other) const {
  if (!same_group(other))
    throw InvalidArgument("pi1 elements from different groups: '" + (group_ ? group_->key() : std::string("?")) +
                          "' vs '" + (other.group_ ? other.group_->key() : std::string("?")) + "'");
}

Pi1Element Pi1Element::operator+(const Pi1Element& other) const {
  require_same(other);
  IntVector t = torsion_, f = free_;
  for (size_t i = 0; i < t.size(); ++i) t[i] += other.torsion_[i];
  for (size_t i = 0; i < f.size(); ++i) f[i] += other.free_[i];
  return Pi1Element(group_, std::move(t), std::move(f));
}

Pi1Element Pi1Element::operator-(const Pi1Element& other) const { return *this + (-other); }

Pi1Element Pi1Element::operator-() const { return scaled(-1); }

Pi1Element Pi1Element::scaled(const Integer& k) const {
  IntVector t = torsion_, f = free_;
  for (auto& x : t) x *= k;
  for (auto& x : f) x *= k;
  return Pi1Element(group_, std::move(t), std::move(f));
}

bool Pi1Element::operator==(const Pi1Element& other) const {
  return same_group(other) && torsion_ == other.torsion_ && free_ == other.free_;
}

bool Pi1Element::operator<(const Pi1Element& other) const {
  if (torsion_ != other.torsion_) return torsion_ < other.torsion_;
  return free_ < other.free_;
}

std::string Pi1Element::to_string() const {
  std::ostringstream os;
  os << '(';
  auto c = coords();
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
  os << ')';
  return os.str();
}

std::shared_ptr<const Pi1Group> Pi1Group::create(size_t lattice_rank, const IntMatrix& relations, std::string key) {
  // relations: list of column vectors; assemble the lattice_rank x m matrix
  IntMatrix a(lattice_rank, IntVector(relations.size(), 0));
  for (size_t j = 0; j < relations.size(); ++j) {
    if (relations[j].size() != lattice_rank) throw InvalidArgument("pi1: relation has wrong length");
    for (size_t i = 0; i < lattice_rank; ++i) a[i][j] = relations[j][i];
  }
  SmithForm s = smith_normal_form(a, lattice_rank, relations.size());

  std::shared_ptr<Pi1Group> g(new Pi1Group());
  g->lattice_rank_ = lattice_rank;
  g->key_ = std::move(key);

  IntMatrix free_block(s.u.begin() + static_cast<long>(s.rank), s.u.end());
  IntMatrix hermite = row_hermite(free_block);
  if (hermite.size() != free_block.size()) throw InternalError("pi1: free rows lost rank");

  // Modified left factor: unit rows, torsion rows, Hermite free rows.
  RatMatrix u_mod(lattice_rank, RatVector(lattice_rank));
  for (size_t i = 0; i < s.rank; ++i)
    for (size_t j = 0; j < lattice_rank; ++j) u_mod[i][j] = s.u[i][j];
  for (size_t i = 0; i < hermite.size(); ++i)
    for (size_t j = 0; j < lattice_rank; ++j) u_mod[s.rank + i][j] = hermite[i][j];
  RatMatrix inv = lattice_rank ? inverse(u_mod) : RatMatrix{};

  auto column = [&](size_t c) {
    IntVector col(lattice_rank);
    for (size_t i = 0; i < lattice_rank; ++i) {
      if (!is_integral(inv[i][c])) throw InternalError("pi1: non-unimodular reduction");
      col[i] = inv[i][c].get_num();
    }
    return col;
  };

  for (size_t i = 0; i < s.rank; ++i) {
    Integer d = s.diag(i);
    if (d == 1) continue;
    g->moduli_.push_back(d);
    g->torsion_rows_.push_back(s.u[i]);
    g->lift_torsion_.push_back(column(i));
  }
  g->free_rows_ = hermite;
  for (size_t i = 0; i < hermite.size(); ++i) g->lift_free_.push_back(column(s.rank + i));
  return g;
}

Pi1Element Pi1Group::project(const IntVector& x) const {
  if (x.size() != lattice_rank_) throw InvalidArgument("pi1 project: dimension mismatch");
  IntVector t(moduli_.size()), f(free_rows_.size());
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < lattice_rank_; ++j) t[i] += torsion_rows_[i][j] * x[j];
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < lattice_rank_; ++j) f[i] += free_rows_[i][j] * x[j];
  return Pi1Element(shared_from_this(), std::move(t), std::move(f));
}

Pi1Element Pi1Group::project(const SmallVector& x) const {
  IntVector y(x.begin(), x.end());
  return project(y);
}

RatVector Pi1Group::project_rational(const RatVector& x) const {
  if (x.size() != lattice_rank_) throw InvalidArgument("pi1 project: dimension mismatch");
  RatVector f(free_rows_.size());
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < lattice_rank_; ++j)
      if (free_rows_[i][j] != 0) f[i] += Rational(free_rows_[i][j]) * x[j];
  return f;
}

IntVector Pi1Group::lift(const Pi1Element& e) const {
  if (e.group().key() != key_) throw InvalidArgument("pi1 lift: element from another group");
  IntVector x(lattice_rank_, 0);
  for (size_t c = 0; c < moduli_.size(); ++c)
    for (size_t i = 0; i < lattice_rank_; ++i) x[i] += lift_torsion_[c][i] * e.torsion_part()[c];
  for (size_t c = 0; c < free_rows_.size(); ++c)
    for (size_t i = 0; i < lattice_rank_; ++i) x[i] += lift_free_[c][i] * e.free_part()[c];
  return x;
}

Pi1Element Pi1Group::make(IntVector torsion, IntVector free) const {
  return Pi1Element(shared_from_this(), std::move(torsion), std::move(free));
}

Pi1Element Pi1Group::zero() const {
  return make(IntVector(moduli_.size(), 0), IntVector(free_rows_.size(), 0));
}

std::vector<Pi1Element> Pi1Group::torsion_elements() const {
  std::vector<Pi1Element> out;
  IntVector t(moduli_.size(), 0);
  while (true) {
    out.push_back(make(t, IntVector(free_rows_.size(), 0)));
    size_t i = 0;
    while (i < t.size()) {
      t[i] += 1;
      if (t[i] < moduli_[i]) break;
      t[i] = 0;
      ++i;
    }
    if (i == t.size()) break;
  }
  return out;
}

}  // namespace kottwitz
