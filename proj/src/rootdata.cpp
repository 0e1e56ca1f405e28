// Copyright 2026 The weylcalc Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylcalc/rootdata.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace weylcalc {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxRoots = 10000;

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedConfig, what); }

std::vector<IntVector> read_matrix(const json& j, const char* field) {
  if (!j.is_array()) malformed(std::string("field '") + field + "' must be an integer matrix");
  std::vector<IntVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) malformed(std::string("field '") + field + "' must be an integer matrix");
    IntVector r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) malformed(std::string("field '") + field + "' has a non-integer entry");
      r.push_back(e.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix checked_matrix(const std::vector<IntVector>& rows, int nrows, int ncols, const char* field) {
  if (static_cast<int>(rows.size()) != nrows) malformed(std::string("field '") + field + "' has the wrong number of rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ncols) malformed(std::string("field '") + field + "' has the wrong number of columns");
  IntMatrix m(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::map<std::string, json, std::less<>>& presets() {
  static const std::map<std::string, json, std::less<>> table = [] {
    std::map<std::string, json, std::less<>> t;
    t["SL2"] = {{"name", "SL2"}, {"rank", 1}, {"coroots", {{1}}}, {"roots", {{2}}}};
    t["PGL2"] = {{"name", "PGL2"}, {"rank", 1}, {"coroots", {{2}}}, {"roots", {{1}}}};
    t["GL2"] = {{"name", "GL2"}, {"rank", 2}, {"coroots", {{1}, {-1}}}, {"roots", {{1, -1}}}};
    t["SL3"] = {{"name", "SL3"}, {"rank", 2}, {"coroots", {{1, 0}, {0, 1}}}, {"roots", {{2, -1}, {-1, 2}}}};
    t["PGL3"] = {{"name", "PGL3"}, {"rank", 2}, {"coroots", {{2, -1}, {-1, 2}}}, {"roots", {{1, 0}, {0, 1}}}};
    // Type C2 with alpha_1 short and alpha_2 long, simply connected.
    t["Sp4"] = {{"name", "Sp4"}, {"rank", 2}, {"coroots", {{1, 0}, {0, 1}}}, {"roots", {{2, -1}, {-2, 2}}}};
    t["A2-twisted"] = {{"name", "A2-twisted"},
                       {"rank", 2},
                       {"coroots", {{1, 0}, {0, 1}}},
                       {"roots", {{2, -1}, {-1, 2}}},
                       {"delta", {{"perm", {2, 1}}, {"lattice_matrix", {{0, 1}, {1, 0}}}}}};
    t["SL4"] = {{"name", "SL4"},
                {"rank", 3},
                {"coroots", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                {"roots", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}};
    t["A3-twisted"] = {{"name", "A3-twisted"},
                       {"rank", 3},
                       {"coroots", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
                       {"roots", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
                       {"delta", {{"perm", {3, 2, 1}}, {"lattice_matrix", {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}}}};
    return t;
  }();
  return table;
}

}  // namespace

std::string to_string(const KappaClass& k) { return to_string(k.components); }

const std::vector<std::string>& RootDatum::preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : presets()) v.push_back(k);
    return v;
  }();
  return names;
}

nlohmann::json RootDatum::preset_config(std::string_view name) {
  auto it = presets().find(name);
  if (it == presets().end()) malformed("unknown preset '" + std::string(name) + "'");
  return it->second;
}

std::shared_ptr<const RootDatum> RootDatum::preset(std::string_view name) { return build(preset_config(name)); }

std::shared_ptr<const RootDatum> RootDatum::build(const nlohmann::json& config) {
  if (!config.is_object()) malformed("root datum config must be an object");
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->name_ = config.value("name", std::string("custom"));

  std::optional<std::vector<IntVector>> cartan_rows;
  if (config.contains("cartan")) cartan_rows = read_matrix(config["cartan"], "cartan");

  if (config.contains("rank")) {
    if (!config["rank"].is_number_integer() || config["rank"].get<int>() < 0) malformed("field 'rank' must be a nonnegative integer");
    d->rank_ = config["rank"].get<int>();
  } else if (cartan_rows) {
    d->rank_ = static_cast<int>(cartan_rows->size());
  } else {
    malformed("missing field 'rank'");
  }

  if (config.contains("coroots") || config.contains("roots")) {
    if (!config.contains("coroots")) malformed("missing field 'coroots'");
    if (!config.contains("roots")) malformed("missing field 'roots'");
    auto roots = read_matrix(config["roots"], "roots");
    d->ss_rank_ = static_cast<int>(roots.size());
    d->roots_ = checked_matrix(roots, d->ss_rank_, d->rank_, "roots");
    d->coroots_ = checked_matrix(read_matrix(config["coroots"], "coroots"), d->rank_, d->ss_rank_, "coroots");
  } else if (cartan_rows) {
    // Simply connected datum for the given Cartan matrix.
    d->ss_rank_ = static_cast<int>(cartan_rows->size());
    if (d->ss_rank_ != d->rank_) malformed("cartan-only config needs rank equal to the Cartan size");
    d->roots_ = checked_matrix(*cartan_rows, d->ss_rank_, d->ss_rank_, "cartan");
    d->coroots_ = IntMatrix::identity(d->rank_);
  } else {
    malformed("missing fields 'roots' and 'coroots'");
  }

  d->cartan_ = d->roots_ * d->coroots_;
  if (cartan_rows && checked_matrix(*cartan_rows, d->ss_rank_, d->ss_rank_, "cartan") != d->cartan_)
    malformed("field 'cartan' disagrees with roots x coroots");

  const int n = d->ss_rank_;
  for (int i = 0; i < n; ++i) {
    if (d->cartan_(i, i) != 2) malformed("Cartan diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d->cartan_(i, j) > 0) malformed("Cartan off-diagonal entries must be nonpositive");
      if ((d->cartan_(i, j) == 0) != (d->cartan_(j, i) == 0)) malformed("Cartan matrix zero pattern must be symmetric");
    }
  }
  // Finite type iff every principal minor is positive.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<RatVector> sub;
    for (int i : idx) {
      RatVector row;
      for (int j : idx) row.emplace_back(d->cartan_(i, j));
      sub.push_back(std::move(row));
    }
    if (determinant(sub) <= Rational(0))
      fail(ErrorKind::NotFiniteType, "Cartan matrix is not of finite type (a principal minor is not positive)");
  }

  if (config.contains("delta") && !config["delta"].is_null()) {
    const auto& dj = config["delta"];
    if (!dj.is_object() || !dj.contains("perm") || !dj.contains("lattice_matrix")) malformed("field 'delta' needs 'perm' and 'lattice_matrix'");
    DiagramAutomorphism a;
    for (const auto& e : dj["perm"]) {
      if (!e.is_number_integer()) malformed("delta.perm must list simple labels 1..n");
      a.perm.push_back(e.get<int>() - 1);
    }
    a.lattice = checked_matrix(read_matrix(dj["lattice_matrix"], "delta.lattice_matrix"), d->rank_, d->rank_, "delta.lattice_matrix");
    std::vector<int> sorted = a.perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i)
        fail(ErrorKind::BadAutomorphism, "delta.perm is not a permutation of the simple labels");
    Rational det = determinant(to_rational_rows(a.lattice));
    if (det != Rational(1) && det != Rational(-1)) fail(ErrorKind::BadAutomorphism, "delta lattice matrix is not invertible over Z");
    for (int i = 0; i < n; ++i) {
      int pi = a.perm[static_cast<std::size_t>(i)];
      if (a.lattice.apply_left(d->simple_root(pi)) != d->simple_root(i))
        fail(ErrorKind::BadAutomorphism, "delta does not map simple roots compatibly");
      if (a.lattice.apply(d->simple_coroot(i)) != d->simple_coroot(pi))
        fail(ErrorKind::BadAutomorphism, "delta does not map simple coroots compatibly");
      for (int j = 0; j < n; ++j)
        if (d->cartan_(pi, a.perm[static_cast<std::size_t>(j)]) != d->cartan_(i, j))
          fail(ErrorKind::BadAutomorphism, "delta does not preserve the Cartan matrix");
    }
    d->delta_ = std::move(a);
  }

  d->derive();
  return d;
}

void RootDatum::derive() {
  const int n = ss_rank_;
  // Close {(alpha_i, alpha_i^vee)} under simple reflections, in simple-root and
  // simple-coroot coordinates.
  std::map<IntVector, IntVector> coroot_of;  // root coords -> coroot coords
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    coroot_of[e] = e;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    IntVector gamma = coroot_of[beta];
    for (int j = 0; j < n; ++j) {
      // <beta, alpha_j^vee> and <alpha_j, gamma>
      std::int64_t bj = 0, gj = 0;
      for (int k = 0; k < n; ++k) {
        bj += beta[static_cast<std::size_t>(k)] * cartan_(k, j);
        gj += cartan_(j, k) * gamma[static_cast<std::size_t>(k)];
      }
      IntVector b2 = beta, g2 = gamma;
      b2[static_cast<std::size_t>(j)] -= bj;
      g2[static_cast<std::size_t>(j)] -= gj;
      if (!coroot_of.count(b2)) {
        coroot_of[b2] = g2;
        queue.push_back(b2);
        if (coroot_of.size() > kMaxRoots) fail(ErrorKind::NotFiniteType, "root system exceeds the root cap");
      }
    }
  }

  struct Entry {
    int height;
    IntVector coords;
    IntVector coroot_coords;
  };
  std::vector<Entry> positive;
  for (const auto& [beta, gamma] : coroot_of) {
    bool pos = std::all_of(beta.begin(), beta.end(), [](std::int64_t c) { return c >= 0; });
    bool neg = std::all_of(beta.begin(), beta.end(), [](std::int64_t c) { return c <= 0; });
    if (!pos && !neg) fail(ErrorKind::Internal, "root with mixed-sign coordinates");
    if (pos) {
      int h = 0;
      for (auto c : beta) h += static_cast<int>(c);
      positive.push_back({h, beta, gamma});
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });

  pos_roots_.clear();
  pos_coroots_.clear();
  pos_root_coords_.clear();
  two_rho_.assign(static_cast<std::size_t>(rank_), 0);
  two_rho_check_.assign(static_cast<std::size_t>(rank_), 0);
  max_height_ = 0;
  for (const auto& e : positive) {
    IntVector functional = roots_.apply_left(e.coords);
    IntVector coroot = coroots_.apply(e.coroot_coords);
    two_rho_ = two_rho_ + functional;
    two_rho_check_ = two_rho_check_ + coroot;
    pos_roots_.push_back(std::move(functional));
    pos_coroots_.push_back(std::move(coroot));
    pos_root_coords_.push_back(e.coords);
    max_height_ = std::max(max_height_, e.height);
  }

  root_lookup_.clear();
  for (int k = 0; k < num_positive_roots(); ++k) {
    root_lookup_[pos_roots_[static_cast<std::size_t>(k)]] = k + 1;
    root_lookup_[negated(pos_roots_[static_cast<std::size_t>(k)])] = -(k + 1);
  }

  for (int i = 0; i < n; ++i) {
    if (dot(two_rho_, simple_coroot(i)) != 2) fail(ErrorKind::Internal, "<2rho, alpha_i^vee> != 2");
    if (dot(simple_root(i), two_rho_check_) != 2) fail(ErrorKind::Internal, "<alpha_i, 2rho^vee> != 2");
  }

  // Dynkin components.
  components_.clear();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    int c = static_cast<int>(components_.size());
    components_.emplace_back();
    std::vector<int> stack{i};
    comp[static_cast<std::size_t>(i)] = c;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      components_.back().push_back(a);
      for (int b = 0; b < n; ++b)
        if (comp[static_cast<std::size_t>(b)] < 0 && cartan_(a, b) != 0) {
          comp[static_cast<std::size_t>(b)] = c;
          stack.push_back(b);
        }
    }
    std::sort(components_.back().begin(), components_.back().end());
  }
  highest_roots_.clear();
  for (const auto& members : components_) {
    int best = -1;
    for (int k = 0; k < num_positive_roots(); ++k) {
      const auto& coords = pos_root_coords_[static_cast<std::size_t>(k)];
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (coords[static_cast<std::size_t>(i)] != 0 && comp[static_cast<std::size_t>(i)] != comp[static_cast<std::size_t>(members[0])])
          inside = false;
      if (inside && (best < 0 || root_height(k) > root_height(best))) best = k;
    }
    highest_roots_.push_back(best);
  }

  smith_ = smith_normal_form(coroots_);
  pi1_moduli_.assign(static_cast<std::size_t>(rank_), 0);
  for (std::size_t i = 0; i < smith_.diagonal.size(); ++i) pi1_moduli_[i] = smith_.diagonal[i];

  fingerprint_ = fnv1a_hex(json{{"rank", rank_},
                                {"coroots", matrix_json(coroots_)},
                                {"roots", matrix_json(roots_)},
                                {"delta", delta_ ? json{{"perm", delta_->perm}, {"lattice", matrix_json(delta_->lattice)}} : json()}}
                               .dump());
}

nlohmann::json RootDatum::to_json() const {
  json j{{"name", name_},
         {"rank", rank_},
         {"cartan", matrix_json(cartan_)},
         {"coroots", matrix_json(coroots_)},
         {"roots", matrix_json(roots_)}};
  if (delta_) {
    std::vector<int> perm;
    for (int p : delta_->perm) perm.push_back(p + 1);
    j["delta"] = {{"perm", perm}, {"lattice_matrix", matrix_json(delta_->lattice)}};
  }
  return j;
}

int RootDatum::root_height(int k) const {
  int h = 0;
  for (auto c : pos_root_coords_[static_cast<std::size_t>(k)]) h += static_cast<int>(c);
  return h;
}

RatVector RootDatum::rho() const { return scaled(to_rational(two_rho_), Rational(1, 2)); }
RatVector RootDatum::rho_check() const { return scaled(to_rational(two_rho_check_), Rational(1, 2)); }

std::optional<int> RootDatum::root_index(const IntVector& functional) const {
  auto it = root_lookup_.find(functional);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

IntVector RootDatum::reflect(int i, const IntVector& x) const {
  std::int64_t p = dot(simple_root(i), x);
  IntVector r = x;
  IntVector c = simple_coroot(i);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked::sub(r[k], checked::mul(p, c[k]));
  return r;
}

RatVector RootDatum::reflect(int i, const RatVector& x) const {
  Rational p = dot(simple_root(i), x);
  RatVector r = x;
  IntVector c = simple_coroot(i);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= p * Rational(c[k]);
  return r;
}

bool RootDatum::is_dominant(const RatVector& v) const {
  for (int i = 0; i < ss_rank_; ++i)
    if (dot(simple_root(i), v) < Rational(0)) return false;
  return true;
}

RatVector RootDatum::dominant_rep(const RatVector& v) const {
  RatVector cur = v;
  while (true) {
    int neg = -1;
    for (int i = 0; i < ss_rank_; ++i)
      if (dot(simple_root(i), cur) < Rational(0)) {
        neg = i;
        break;
      }
    if (neg < 0) return cur;
    cur = reflect(neg, cur);
  }
}

bool RootDatum::dominance_leq(const RatVector& lower, const RatVector& upper) const {
  if (!is_dominant(lower) || !is_dominant(upper)) fail(ErrorKind::NotDominant, "dominance order needs dominant arguments");
  RatVector diff = upper - lower;
  auto coeffs = solve(to_rational_rows(coroots_), diff);
  if (!coeffs) return false;
  return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c >= Rational(0); });
}

KappaClass RootDatum::kappa_class(const IntVector& lambda) const {
  IntVector y = smith_.left.apply(lambda);
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::int64_t m = pi1_moduli_[i];
    if (m > 0) y[i] = ((y[i] % m) + m) % m;
  }
  return KappaClass{y};
}

KappaClass RootDatum::kappa_add(const KappaClass& a, const KappaClass& b) const {
  IntVector y = a.components + b.components;
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::int64_t m = pi1_moduli_[i];
    if (m > 0) y[i] = ((y[i] % m) + m) % m;
  }
  return KappaClass{y};
}

IntVector RootDatum::kappa_representative(const KappaClass& k) const {
  if (static_cast<int>(k.components.size()) != rank_) fail(ErrorKind::InvalidArgument, "kappa class has the wrong number of components");
  return smith_.left_inverse.apply(k.components);
}

bool RootDatum::pi1_finite() const { return static_cast<int>(smith_.diagonal.size()) == rank_; }

std::int64_t RootDatum::pi1_order() const {
  if (!pi1_finite()) fail(ErrorKind::InfinitePi1, "X / Q^vee is infinite");
  std::int64_t o = 1;
  for (auto d : smith_.diagonal) o = checked::mul(o, d);
  return o;
}

std::vector<IntVector> RootDatum::pi1_representatives() const {
  if (!pi1_finite()) fail(ErrorKind::InfinitePi1, "X / Q^vee is infinite");
  std::vector<IntVector> reps;
  IntVector y(static_cast<std::size_t>(rank_), 0);
  while (true) {
    reps.push_back(smith_.left_inverse.apply(y));
    int k = rank_ - 1;
    while (k >= 0) {
      if (++y[static_cast<std::size_t>(k)] < pi1_moduli_[static_cast<std::size_t>(k)]) break;
      y[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return reps;
}

}  // namespace weylcalc
