#include "kottwitz/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "kottwitz/errors.hpp"

namespace kottwitz {

struct BasedRootDatum::Impl {
  size_t rank = 0;
  SmallMatrix simple_roots;
  SmallMatrix simple_coroots;
  SmallMatrix cartan;
  std::vector<int> galois;
  int galois_order = 1;
  SmallMatrix galois_matrix;
  std::string label;
  std::vector<ComponentInfo> components;
  Levi parent_nodes;
  bool is_levi = false;
  SmallVector regular;

  // derived
  bool permutation_type = false;
  std::vector<std::vector<int>> blocks;
  SmallMatrix positive_roots;
  SmallMatrix positive_coeffs;
  SmallVector two_rho;
  std::vector<int> w0_word;
  SmallMatrix w0_matrix;
  std::vector<int> tau;
  RatMatrix inverse_cartan;
  std::shared_ptr<const Pi1Group> pi1;

  mutable std::mutex levi_mutex;
  mutable std::map<Levi, std::shared_ptr<const Impl>> levi_cache;
};

namespace {

using Impl = BasedRootDatum::Impl;

SmallMatrix cartan_of(Family family, int n) {
  SmallMatrix c(n, SmallVector(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (family) {
    case Family::A:
    case Family::GL:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // last root short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // last root long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[1][2] = -2;
      break;
    case Family::G:
      link(0, 1);
      c[1][0] = -3;  // second root long
      break;
  }
  return c;
}

void validate(const ComponentSpec& s) {
  const int n = s.rank;
  bool ok = false;
  switch (s.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    case Family::GL: ok = n >= 1; break;
  }
  if (!ok) throw InvalidArgument("unsupported rank " + std::to_string(n) + " for type " + family_name(s.family));
  if (s.galois_order == 1) return;
  bool g_ok = false;
  if (s.galois_order == 2)
    g_ok = (s.family == Family::A && n >= 2) || (s.family == Family::D) || (s.family == Family::E && n == 6) ||
           (s.family == Family::GL && n >= 2);
  else if (s.galois_order == 3)
    g_ok = s.family == Family::D && n == 4;
  if (!g_ok)
    throw InvalidArgument("galois order " + std::to_string(s.galois_order) + " incompatible with " +
                          component_label(ComponentSpec{s.family, s.rank, 1}));
}

std::vector<int> node_permutation(const ComponentSpec& s, int nodes) {
  std::vector<int> p(nodes);
  std::iota(p.begin(), p.end(), 0);
  if (s.galois_order == 1) return p;
  switch (s.family) {
    case Family::A:
      for (int i = 0; i < nodes; ++i) p[i] = nodes - 1 - i;
      break;
    case Family::GL:
      for (int i = 0; i < nodes; ++i) p[i] = nodes - 1 - i;
      break;
    case Family::D:
      if (s.galois_order == 3) {
        p[0] = 2;
        p[2] = 3;
        p[3] = 0;
      } else {
        std::swap(p[nodes - 2], p[nodes - 1]);
      }
      break;
    case Family::E:
      p[0] = 5;
      p[5] = 0;
      p[2] = 4;
      p[4] = 2;
      break;
    default:
      break;
  }
  return p;
}

SmallVector reflect(const Impl& d, int i, SmallVector x) {
  long k = pair(d.simple_roots[i], x);
  if (k != 0)
    for (size_t a = 0; a < x.size(); ++a) x[a] -= k * d.simple_coroots[i][a];
  return x;
}

SmallMatrix mat_mul_small(const SmallMatrix& a, const SmallMatrix& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  SmallMatrix c(n, SmallVector(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

void compute_positive_roots(Impl& d) {
  const size_t n = d.cartan.size();
  std::set<SmallVector> all;
  std::vector<SmallVector> layer;
  for (size_t i = 0; i < n; ++i) {
    SmallVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    all.insert(e);
  }
  std::vector<SmallVector> ordered = layer;
  while (!layer.empty()) {
    std::set<SmallVector> next;
    for (const auto& beta : layer) {
      for (size_t i = 0; i < n; ++i) {
        long paired = 0;  // <beta, alpha_i^vee>
        for (size_t k = 0; k < n; ++k) paired += beta[k] * d.cartan[k][i];
        long p = 0;
        SmallVector down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !all.count(down)) break;
          ++p;
        }
        if (p - paired > 0) {
          SmallVector up = beta;
          up[i] += 1;
          if (!all.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      all.insert(r);
      ordered.push_back(r);
    }
  }
  d.positive_coeffs = ordered;
  d.positive_roots.clear();
  for (const auto& c : ordered) {
    SmallVector f(d.rank, 0);
    for (size_t k = 0; k < n; ++k)
      if (c[k] != 0)
        for (size_t a = 0; a < d.rank; ++a) f[a] += c[k] * d.simple_roots[k][a];
    d.positive_roots.push_back(f);
  }
  d.two_rho.assign(d.rank, 0);
  for (const auto& f : d.positive_roots)
    for (size_t a = 0; a < d.rank; ++a) d.two_rho[a] += f[a];
}

void compute_blocks(Impl& d) {
  d.permutation_type = true;
  std::vector<int> parent(d.rank);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (size_t i = 0; i < d.simple_roots.size(); ++i) {
    const auto& r = d.simple_roots[i];
    if (r != d.simple_coroots[i]) {
      d.permutation_type = false;
      break;
    }
    int a = -1;
    for (size_t k = 0; k < d.rank; ++k)
      if (r[k] != 0) {
        a = static_cast<int>(k);
        break;
      }
    bool pattern = a >= 0 && static_cast<size_t>(a + 1) < d.rank && r[a] == 1 && r[a + 1] == -1;
    for (size_t k = 0; k < d.rank && pattern; ++k)
      if (static_cast<int>(k) != a && static_cast<int>(k) != a + 1 && r[k] != 0) pattern = false;
    if (!pattern) {
      d.permutation_type = false;
      break;
    }
    parent[find(a)] = find(a + 1);
  }
  d.blocks.clear();
  if (!d.permutation_type) return;
  std::map<int, std::vector<int>> groups;
  for (size_t k = 0; k < d.rank; ++k) groups[find(static_cast<int>(k))].push_back(static_cast<int>(k));
  for (auto& [root, members] : groups) d.blocks.push_back(members);
  std::sort(d.blocks.begin(), d.blocks.end());
}

void finish(Impl& d) {
  const size_t n = d.cartan.size();
  for (size_t i = 0; i < n; ++i) {
    if (d.cartan[i][i] != 2) throw InternalError("cartan diagonal must be 2");
    for (size_t j = 0; j < n; ++j) {
      if (i != j && d.cartan[i][j] > 0) throw InternalError("positive off-diagonal cartan entry");
      if (pair(d.simple_roots[i], d.simple_coroots[j]) != d.cartan[i][j])
        throw InternalError("roots and coroots do not reproduce the cartan matrix");
      if (d.cartan[d.galois[i]][d.galois[j]] != d.cartan[i][j])
        throw InvalidArgument("galois permutation does not preserve the cartan matrix");
    }
  }
  // galois action on the lattice must have the declared order and match the node permutation
  SmallMatrix power = d.galois_matrix;
  for (int k = 1; k < d.galois_order; ++k) power = mat_mul_small(power, d.galois_matrix);
  for (size_t a = 0; a < d.rank; ++a)
    for (size_t b = 0; b < d.rank; ++b)
      if (power[a][b] != (a == b ? 1 : 0)) throw InternalError("galois action has the wrong order");
  for (size_t i = 0; i < n; ++i) {
    SmallVector img(d.rank, 0);
    for (size_t a = 0; a < d.rank; ++a)
      for (size_t b = 0; b < d.rank; ++b) img[a] += d.galois_matrix[a][b] * d.simple_coroots[i][b];
    if (img != d.simple_coroots[d.galois[i]]) throw InternalError("galois action does not permute coroots");
  }

  compute_positive_roots(d);
  compute_blocks(d);

  // w0: walk a regular dominant vector to the antidominant chamber
  SmallVector v = d.regular;
  d.w0_word.clear();
  while (true) {
    int found = -1;
    for (size_t i = 0; i < n; ++i)
      if (pair(d.simple_roots[i], v) > 0) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) break;
    v = reflect(d, found, v);
    d.w0_word.push_back(found);
  }
  d.w0_matrix.assign(d.rank, SmallVector(d.rank, 0));
  for (size_t b = 0; b < d.rank; ++b) {
    SmallVector e(d.rank, 0);
    e[b] = 1;
    for (int i : d.w0_word) e = reflect(d, i, e);
    for (size_t a = 0; a < d.rank; ++a) d.w0_matrix[a][b] = e[a];
  }
  d.tau.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    SmallVector img(d.rank, 0);
    for (size_t a = 0; a < d.rank; ++a)
      for (size_t b = 0; b < d.rank; ++b) img[a] -= d.w0_matrix[a][b] * d.simple_coroots[i][b];
    for (size_t j = 0; j < n; ++j)
      if (d.simple_coroots[j] == img) d.tau[i] = static_cast<int>(j);
    if (d.tau[i] < 0) throw InternalError("w0 does not permute the negated simple coroots");
  }

  RatMatrix c(n, RatVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) c[i][j] = d.cartan[i][j];
  d.inverse_cartan = n ? inverse(c) : RatMatrix{};

  IntMatrix relations;
  for (const auto& cr : d.simple_coroots) relations.emplace_back(cr.begin(), cr.end());
  if (d.galois_order > 1)
    for (size_t b = 0; b < d.rank; ++b) {
      IntVector col(d.rank, 0);
      for (size_t a = 0; a < d.rank; ++a) col[a] = d.galois_matrix[a][b] - (a == b ? 1 : 0);
      relations.push_back(col);
    }
  d.pi1 = Pi1Group::create(d.rank, relations, d.label);
}

std::string to_lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

Family parse_family(const std::string& raw) {
  std::string f = to_lower(raw);
  if (f == "a") return Family::A;
  if (f == "b") return Family::B;
  if (f == "c") return Family::C;
  if (f == "d") return Family::D;
  if (f == "e") return Family::E;
  if (f == "f") return Family::F;
  if (f == "g") return Family::G;
  if (f == "gl") return Family::GL;
  throw InvalidArgument("unknown family '" + raw + "'");
}

int parse_small_int(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
      s.size() > 6)
    throw InvalidArgument("invalid " + what + " '" + s + "'");
  return std::stoi(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::GL: return "GL";
  }
  return "?";
}

std::string component_label(const ComponentSpec& c) {
  std::string s = c.galois_order > 1 ? std::to_string(c.galois_order) : "";
  return s + family_name(c.family) + std::to_string(c.rank);
}

std::vector<ComponentSpec> parse_group_descriptor(const std::string& text) {
  std::vector<ComponentSpec> out;
  for (const auto& raw : split(text, '+')) {
    std::string part = trim(raw);
    auto fields = split(part, ':');
    if (fields.size() < 2 || fields.size() > 3) throw InvalidArgument("malformed group descriptor '" + part + "'");
    ComponentSpec c;
    c.family = parse_family(trim(fields[0]));
    c.rank = parse_small_int(trim(fields[1]), "rank");
    if (fields.size() == 3) {
      std::string g = trim(fields[2]);
      if (g.rfind("galois=", 0) != 0) throw InvalidArgument("expected galois=<k> in '" + part + "'");
      c.galois_order = parse_small_int(g.substr(7), "galois order");
    }
    out.push_back(c);
  }
  if (out.empty()) throw InvalidArgument("empty group descriptor");
  return out;
}

std::vector<ComponentSpec> parse_type_label(const std::string& text) {
  std::vector<ComponentSpec> out;
  for (const auto& raw : split(text, 'x')) {
    std::string part = trim(raw);
    size_t i = 0;
    int galois = 1;
    if (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) {
      galois = part[i] - '0';
      ++i;
    }
    size_t j = i;
    while (j < part.size() && std::isalpha(static_cast<unsigned char>(part[j]))) ++j;
    if (j == i) throw InvalidArgument("malformed type label '" + part + "'");
    ComponentSpec c;
    c.family = parse_family(part.substr(i, j - i));
    c.rank = parse_small_int(part.substr(j), "rank");
    c.galois_order = galois;
    out.push_back(c);
  }
  if (out.empty()) throw InvalidArgument("empty type label");
  return out;
}

BasedRootDatum::BasedRootDatum(std::shared_ptr<const Impl> impl, std::shared_ptr<const Impl> root)
    : impl_(std::move(impl)), root_(std::move(root)) {}

const BasedRootDatum::Impl& BasedRootDatum::impl() const {
  if (!impl_) throw InvalidArgument("use of an empty root datum");
  return *impl_;
}

size_t BasedRootDatum::rank() const { return impl().rank; }
size_t BasedRootDatum::num_simple() const { return impl().cartan.size(); }
const SmallMatrix& BasedRootDatum::simple_roots() const { return impl().simple_roots; }
const SmallMatrix& BasedRootDatum::simple_coroots() const { return impl().simple_coroots; }
const SmallMatrix& BasedRootDatum::cartan() const { return impl().cartan; }
const std::vector<int>& BasedRootDatum::galois() const { return impl().galois; }
int BasedRootDatum::galois_order() const { return impl().galois_order; }
const SmallMatrix& BasedRootDatum::galois_matrix() const { return impl().galois_matrix; }
const std::string& BasedRootDatum::type_label() const { return impl().label; }
const std::vector<ComponentInfo>& BasedRootDatum::components() const { return impl().components; }
bool BasedRootDatum::is_permutation_type() const { return impl().permutation_type; }
const std::vector<std::vector<int>>& BasedRootDatum::coordinate_blocks() const { return impl().blocks; }
const SmallMatrix& BasedRootDatum::positive_roots() const { return impl().positive_roots; }
const SmallMatrix& BasedRootDatum::positive_root_coefficients() const { return impl().positive_coeffs; }
const SmallVector& BasedRootDatum::two_rho() const { return impl().two_rho; }
const SmallVector& BasedRootDatum::regular_vector() const { return impl().regular; }
const std::vector<int>& BasedRootDatum::w0_word() const { return impl().w0_word; }
const SmallMatrix& BasedRootDatum::w0_matrix() const { return impl().w0_matrix; }
const std::vector<int>& BasedRootDatum::tau() const { return impl().tau; }
const RatMatrix& BasedRootDatum::inverse_cartan() const { return impl().inverse_cartan; }
const Pi1Group& BasedRootDatum::pi1() const { return *impl().pi1; }
std::shared_ptr<const Pi1Group> BasedRootDatum::pi1_ptr() const { return impl().pi1; }
const Levi& BasedRootDatum::parent_nodes() const { return impl().parent_nodes; }
bool BasedRootDatum::is_levi() const { return impl().is_levi; }

Levi BasedRootDatum::all_nodes() const {
  Levi all(num_simple());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<Levi> BasedRootDatum::galois_orbits() const {
  std::vector<Levi> orbits;
  std::vector<bool> seen(num_simple(), false);
  for (size_t i = 0; i < num_simple(); ++i) {
    if (seen[i]) continue;
    Levi orbit;
    int j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = true;
      orbit.push_back(j);
      j = galois()[j];
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  return orbits;
}

bool BasedRootDatum::is_galois_stable(const Levi& nodes) const {
  std::set<int> s(nodes.begin(), nodes.end());
  for (int i : nodes) {
    if (i < 0 || static_cast<size_t>(i) >= num_simple()) return false;
    if (!s.count(galois()[i])) return false;
  }
  return true;
}

Levi BasedRootDatum::to_top(const Levi& nodes) const {
  Levi out;
  for (int i : nodes) out.push_back(impl().parent_nodes.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

BasedRootDatum BasedRootDatum::levi(const Levi& raw) const {
  Levi nodes = raw;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (!is_galois_stable(nodes)) throw InvalidArgument("levi " + format_levi(nodes) + " is not galois stable");
  const Impl& root = root_ ? *root_ : impl();
  std::shared_ptr<const Impl> root_ptr = root_ ? root_ : impl_;
  Levi top = to_top(nodes);
  if (top.size() == root.cartan.size()) return BasedRootDatum(root_ptr, root_ptr);
  {
    std::lock_guard<std::mutex> lock(root.levi_mutex);
    auto it = root.levi_cache.find(top);
    if (it != root.levi_cache.end()) return BasedRootDatum(it->second, root_ptr);
  }
  auto sub = std::make_shared<Impl>();
  sub->rank = root.rank;
  std::map<int, int> index;
  for (size_t k = 0; k < top.size(); ++k) index[top[k]] = static_cast<int>(k);
  for (int i : top) {
    sub->simple_roots.push_back(root.simple_roots[i]);
    sub->simple_coroots.push_back(root.simple_coroots[i]);
    sub->galois.push_back(index.at(root.galois[i]));
    SmallVector row;
    for (int j : top) row.push_back(root.cartan[i][j]);
    sub->cartan.push_back(row);
  }
  sub->galois_order = root.galois_order;
  sub->galois_matrix = root.galois_matrix;
  sub->label = root.label + "|" + format_levi(top);
  sub->parent_nodes = top;
  sub->is_levi = true;
  sub->regular = root.regular;
  finish(*sub);
  std::lock_guard<std::mutex> lock(root.levi_mutex);
  auto [it, inserted] = root.levi_cache.emplace(top, sub);
  return BasedRootDatum(it->second, root_ptr);
}

std::optional<RatVector> BasedRootDatum::coroot_coefficients(const Coweight& x) const {
  const Impl& d = impl();
  if (x.size() != d.rank) throw InvalidArgument("coroot_coefficients: dimension mismatch");
  const size_t n = d.cartan.size();
  RatVector p(n);
  for (size_t j = 0; j < n; ++j) p[j] = pair(d.simple_roots[j], x);
  RatVector c = n ? mat_vec(d.inverse_cartan, p) : RatVector{};
  Coweight back(d.rank);
  for (size_t k = 0; k < n; ++k)
    if (c[k] != 0)
      for (size_t a = 0; a < d.rank; ++a)
        if (d.simple_coroots[k][a] != 0) back[a] += c[k] * d.simple_coroots[k][a];
  if (back != x) return std::nullopt;
  return c;
}

bool BasedRootDatum::operator==(const BasedRootDatum& other) const {
  return impl_ == other.impl_ || (impl_ && other.impl_ && impl_->label == other.impl_->label);
}

BasedRootDatum build_datum(const std::vector<ComponentSpec>& components) {
  if (components.empty()) throw InvalidArgument("empty datum specification");
  auto d = std::make_shared<Impl>();
  int nodes = 0, coords = 0;
  for (const auto& c : components) {
    validate(c);
    ComponentInfo info;
    info.spec = c;
    info.node_offset = nodes;
    info.coord_offset = coords;
    info.num_nodes = c.family == Family::GL ? c.rank - 1 : c.rank;
    info.coord_dim = c.rank;
    nodes += info.num_nodes;
    coords += info.coord_dim;
    d->components.push_back(info);
  }
  d->rank = static_cast<size_t>(coords);
  d->simple_roots.assign(nodes, SmallVector(coords, 0));
  d->simple_coroots.assign(nodes, SmallVector(coords, 0));
  d->cartan.assign(nodes, SmallVector(nodes, 0));
  d->galois.resize(nodes);
  d->galois_matrix.assign(coords, SmallVector(coords, 0));
  d->regular.assign(coords, 0);
  int order = 1;
  std::string label;
  for (const auto& info : d->components) {
    const auto& c = info.spec;
    const int no = info.node_offset, co = info.coord_offset, k = info.num_nodes, dim = info.coord_dim;
    order = std::lcm(order, c.galois_order);
    label += (label.empty() ? "" : "x") + component_label(c);
    SmallMatrix cart = cartan_of(c.family, k);
    auto perm = node_permutation(c, k);
    for (int i = 0; i < k; ++i) {
      d->galois[no + i] = no + perm[i];
      for (int j = 0; j < k; ++j) d->cartan[no + i][no + j] = cart[i][j];
    }
    if (c.family == Family::GL) {
      for (int i = 0; i < k; ++i) {
        d->simple_roots[no + i][co + i] = 1;
        d->simple_roots[no + i][co + i + 1] = -1;
        d->simple_coroots[no + i] = d->simple_roots[no + i];
      }
      for (int a = 0; a < dim; ++a) {
        d->regular[co + a] = dim - 1 - a;
        if (c.galois_order == 2)
          d->galois_matrix[co + dim - 1 - a][co + a] = -1;
        else
          d->galois_matrix[co + a][co + a] = 1;
      }
    } else {
      // adjoint datum in the fundamental coweight basis
      for (int i = 0; i < k; ++i) {
        d->simple_roots[no + i][co + i] = 1;
        for (int a = 0; a < k; ++a) d->simple_coroots[no + i][co + a] = cart[a][i];
        d->regular[co + i] = 1;
        d->galois_matrix[co + perm[i]][co + i] = 1;
      }
    }
  }
  d->galois_order = order;
  d->label = label;
  d->parent_nodes.resize(nodes);
  std::iota(d->parent_nodes.begin(), d->parent_nodes.end(), 0);
  finish(*d);
  return BasedRootDatum(d, nullptr);
}

BasedRootDatum build_datum(Family family, int rank, int galois_order) {
  return build_datum(std::vector<ComponentSpec>{ComponentSpec{family, rank, galois_order}});
}

BasedRootDatum build_datum(const std::string& descriptor) { return build_datum(parse_group_descriptor(descriptor)); }

Levi gl_block_levi(const std::vector<int>& block_sizes) {
  Levi nodes;
  int pos = 0;
  for (int size : block_sizes) {
    if (size <= 0) throw InvalidArgument("block sizes must be positive");
    for (int k = 0; k + 1 < size; ++k) nodes.push_back(pos + k);
    pos += size;
  }
  return nodes;
}

std::string format_levi(const Levi& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
  return s + "}";
}

}  // namespace kottwitz
