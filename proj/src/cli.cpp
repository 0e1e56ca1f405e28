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

#include "weylcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "weylcalc/errors.hpp"
#include "weylcalc/oracle.hpp"
#include "weylcalc/serialize.hpp"

namespace weylcalc {

using nlohmann::json;

RootDatumPtr load_group(const std::string& spec) {
  const auto& names = RootDatum::preset_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return RootDatum::preset(spec);
  if (!std::filesystem::exists(spec)) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorKind::MalformedConfig, "'" + spec + "' is neither a preset (" + known + ") nor a file");
  }
  std::ifstream in(spec);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::MalformedConfig, "cannot parse " + spec + " as JSON");
  return RootDatum::build(j);
}

namespace {

json parse_json_arg(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::InvalidArgument, std::string("cannot parse --") + what + " as JSON: " + text);
  return j;
}

int label_of(const AffineWeylGroup& g, int position) { return g.generators()[static_cast<std::size_t>(position)].label; }

json labels_json(const AffineWeylGroup& g, const std::vector<int>& positions) {
  json out = json::array();
  for (int p : positions) out.push_back(label_of(g, p));
  return out;
}

json steps_json(const AffineWeylGroup& g, const std::vector<ReductionStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"s", label_of(g, s.generator)}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
  }
  return out;
}

json ux_json(const AffineWeylGroup& g, const UxDecomposition& ux) {
  return {{"u", to_json(ux.u)}, {"x", to_json(ux.x)}, {"K", labels_json(g, ux.K)}, {"witness", to_json(ux.witness)},
          {"length_u", length(ux.u)}, {"length_x", length(ux.x)}};
}

json eta_json(const EtaDecomposition& e) {
  return {{"x", finite_word_json(e.x)}, {"mu", e.mu}, {"y", finite_word_json(e.y)}, {"eta", finite_word_json(e.eta)}};
}

json dim_json(const DimValue& v) {
  return {{"nonempty", !v.is_empty()}, {"dim", v.is_empty() ? json(nullptr) : json(v.value())}};
}

json profile_json(const DimProfile& p) {
  json out = json::array();
  for (const auto& [c, v] : p) {
    json e = to_json(c);
    e["dim"] = v;
    out.push_back(std::move(e));
  }
  return out;
}

std::string pi1_string(const RootDatum& d) {
  std::string s;
  for (std::int64_t m : d.pi1_moduli()) {
    if (m == 1) continue;
    if (!s.empty()) s += " x ";
    s += m == 0 ? "Z" : "Z/" + std::to_string(m);
  }
  return s.empty() ? "1" : s;
}

// Elements scanned by tables and verification: the whole length ball, or the
// identity coset when X/Q^vee is infinite.
std::vector<AffineWeylElt> scan_elements(const ClassEngine& e, int max_length, const std::optional<KappaClass>& k = std::nullopt) {
  const RootDatum& d = e.datum();
  if (!k && !d.pi1_finite()) return e.elements_up_to_length(max_length, d.kappa_class(IntVector(static_cast<std::size_t>(d.rank()), 0)));
  return e.elements_up_to_length(max_length, k);
}

std::vector<StraightClass> scan_classes(const ClassEngine& e, int max_length) {
  const RootDatum& d = e.datum();
  if (!d.pi1_finite()) return e.enumerate_straight_classes(max_length, d.kappa_class(IntVector(static_cast<std::size_t>(d.rank()), 0)));
  return e.enumerate_straight_classes(max_length);
}

std::string bracketed(const json& arr) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : arr) {
    if (!first) s += ' ';
    first = false;
    s += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return s + "]";
}

class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::function<json()>& witness) {
    ++checked_;
    if (!ok && counterexample_.is_null()) counterexample_ = witness();
  }
  void note(const std::string& key, json value) { extra_[key] = std::move(value); }
  bool passed() const { return counterexample_.is_null(); }

  json to_json() const {
    json j{{"name", name_}, {"passed", passed()}, {"checked", checked_}};
    if (!passed()) j["counterexample"] = counterexample_;
    for (auto& [k, v] : extra_.items()) j[k] = v;
    return j;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  json counterexample_;
  json extra_ = json::object();
};

json suite_json(const std::string& suite, const std::vector<Check>& checks) {
  json list = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    list.push_back(c.to_json());
    ok = ok && c.passed();
  }
  return {{"suite", suite}, {"passed", ok}, {"checks", std::move(list)}};
}

}  // namespace

std::string emit_table(const DimEngine& dims, const TableSpec& spec) {
  const ClassEngine& e = dims.classes();
  std::vector<AffineWeylElt> elements = scan_elements(e, spec.max_length, spec.kappa);
  struct Row {
    DimValue dim;
    Rational virtual_dim;
  };
  std::size_t nc = spec.classes.size();
  std::vector<Row> rows(elements.size() * nc);
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < rows.size(); i += step) {
      const AffineWeylElt& w = elements[i / nc];
      const StraightClass& c = spec.classes[i % nc];
      rows[i] = {dims.dim_X_flag(w, c), virtual_dimension_exact(w, c).by_class};
    }
  };
  std::size_t threads = static_cast<std::size_t>(std::max(1, spec.threads));
  if (threads == 1 || rows.empty()) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work(t, threads);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& ex : errors)
      if (ex) std::rethrow_exception(ex);
  }

  std::ostringstream out;
  if (spec.format == TableSpec::Format::Csv) {
    out << "length,lambda,word,kappa,nu,nonempty,dim,virtual_dim\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const AffineWeylElt& w = elements[i / nc];
      const StraightClass& c = spec.classes[i % nc];
      json wj = to_json(w);
      out << length(w) << ',' << bracketed(wj["lambda"]) << ',' << bracketed(wj["word"]) << ',' << bracketed(json(c.kappa.components))
          << ',' << bracketed(to_json(c.nu_bar)) << ',' << (rows[i].dim.is_empty() ? "false" : "true") << ','
          << (rows[i].dim.is_empty() ? "-inf" : std::to_string(rows[i].dim.value())) << ',' << rows[i].virtual_dim.to_string() << '\n';
    }
  } else {
    json list = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json r = dim_json(rows[i].dim);
      r["w"] = to_json(elements[i / nc]);
      r["length"] = length(elements[i / nc]);
      r["class"] = to_json(spec.classes[i % nc]);
      r["virtual_dim"] = to_json(rows[i].virtual_dim);
      list.push_back(std::move(r));
    }
    json classes = json::array();
    for (const auto& c : spec.classes) classes.push_back(to_json(c));
    out << json{{"group", dims.datum().name()}, {"max_length", spec.max_length}, {"classes", classes}, {"rows", list}}.dump(2) << '\n';
  }
  return out.str();
}

json verify_oracle(const ClassEngine& e, int radius) {
  const AffineWeylGroup& g = e.group();
  Ball ball = cayley_ball(g, radius, e.budget());
  Check len("length_equals_cayley_distance"), straight("straightness_equals_power_test"), inv("length_equals_inversion_count");
  for (const auto& [w, d] : ball.distance) {
    len.record(length(w) == d, [&] { return json{{"w", to_json(w)}, {"length", length(w)}, {"distance", d}}; });
    straight.record(is_straight(w) == brute_straight_check(w, 12), [&] { return json{{"w", to_json(w)}}; });
    inv.record(length(w) == g.inversion_count(w), [&] { return json{{"w", to_json(w)}, {"inversions", g.inversion_count(w)}}; });
  }
  len.note("ball_size", ball.distance.size());
  return suite_json("oracle", {len, straight, inv});
}

json verify_theorems(const DimEngine& dims, int max_length) {
  const ClassEngine& e = dims.classes();
  const AffineWeylGroup& g = e.group();
  std::vector<AffineWeylElt> elements = scan_elements(e, max_length);
  std::vector<StraightClass> classes = scan_classes(e, max_length);
  Ball ball = cayley_ball(g, max_length + 2, e.budget());

  Check minimum("reduction_reaches_class_minimum"), ux("ux_decomposition"), alcove("minimal_elements_are_P_alcove"),
      cyc("straight_elements_form_one_approx_class"), bound("dimension_below_virtual_dimension"),
      choice("descent_choice_independence");
  std::size_t inconclusive = 0;
  std::map<StraightClass, std::vector<AffineWeylElt>> straight;
  for (const AffineWeylElt& w : elements) {
    AffineWeylElt w_min = e.reduce_to_min(w).w_min;
    try {
      int brute = brute_min_length(ball, w);
      minimum.record(brute == length(w_min), [&] { return json{{"w", to_json(w)}, {"reduced", length(w_min)}, {"brute", brute}}; });
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::Inconclusive) throw;
      ++inconclusive;
    }
    UxDecomposition d = e.ux_decompose(w_min);
    ux.record(d.u * d.x == d.witness && length(d.u) + length(d.x) == length(w_min) && is_straight(d.x) &&
                  kappa(d.x) == kappa(w_min),
              [&] { return json{{"w", to_json(w)}, {"ux", ux_json(g, d)}}; });
    alcove.record(e.p_alcove_test(w_min, newton_point(w_min).nu), [&] { return json{{"w_min", to_json(w_min)}}; });
    if (is_straight(w)) straight[e.class_of_straight(w)].push_back(w);
    for (const auto& c : classes) {
      DimValue v = dims.dim_X_flag(w, c);
      if (v.is_empty()) continue;
      Rational vd = virtual_dimension_exact(w, c).by_class;
      bound.record(Rational(v.value()) <= vd, [&] {
        return json{{"w", to_json(w)}, {"class", to_json(c)}, {"dim", v.value()}, {"virtual_dim", to_json(vd)}};
      });
    }
    choice.record(dims.profile(w, WitnessPolicy::First) == dims.profile(w, WitnessPolicy::Last), [&] {
      return json{{"w", to_json(w)}, {"first", profile_json(dims.profile(w))}, {"last", profile_json(dims.profile(w, WitnessPolicy::Last))}};
    });
  }
  for (const auto& [c, ws] : straight) {
    auto closure = e.approx_closure(ws.front());
    std::set<AffineWeylElt> cs(closure.begin(), closure.end());
    for (const auto& x : ws) cyc.record(cs.count(x) == 1, [&] { return json{{"class", to_json(c)}, {"x", to_json(x)}, {"y", to_json(ws.front())}}; });
  }
  minimum.note("inconclusive", inconclusive);
  return suite_json("theorems", {minimum, ux, alcove, cyc, bound, choice});
}

namespace {

struct Context {
  std::string group = "SL2";
  std::size_t budget = ClassEngine::kDefaultBudget;
  std::string cache_dir;

  std::shared_ptr<const AffineWeylGroup> g;
  std::shared_ptr<const ClassEngine> classes;
  std::shared_ptr<DimEngine> dims;

  void open() {
    g = std::make_shared<const AffineWeylGroup>(load_group(group));
    classes = std::make_shared<const ClassEngine>(g, budget);
    std::optional<std::filesystem::path> dir;
    if (!cache_dir.empty()) {
      dir = cache_dir;
    } else if (const char* env = std::getenv("WEYLCALC_CACHE_DIR"); env && *env) {
      dir = env;
    }
    dims = std::make_shared<DimEngine>(classes, dir);
  }
};

void add_common(CLI::App* cmd, Context& ctx) {
  cmd->add_option("--group,-g", ctx.group, "preset name or root-datum JSON file")->capture_default_str();
  cmd->add_option("--budget", ctx.budget, "node budget for closures and balls")->capture_default_str();
  cmd->add_option("--cache-dir", ctx.cache_dir, "dimension cache directory (default: $WEYLCALC_CACHE_DIR)");
}

FiniteWeylElt finite_arg(const RootDatum& d, const std::string& text) {
  json j = parse_json_arg(text, "w");
  if (j.is_object()) {
    if (j.contains("lambda") && std::any_of(j["lambda"].begin(), j["lambda"].end(), [](const json& c) { return c != 0; })) {
      fail(ErrorKind::InvalidArgument, "a finite Weyl group element has no translation part");
    }
    return finite_from_json(d, j.value("word", json::array()));
  }
  return finite_from_json(d, j);
}

GammaDescriptor gamma_arg(const StraightClass& c, const std::optional<std::int64_t>& sd, const std::optional<std::int64_t>& dg,
                          const std::optional<std::int64_t>& cg) {
  return {c, sd, dg, cg};
}

}  // namespace

int run_query(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of extended affine Weyl groups and dimensions of affine Deligne-Lusztig varieties", "weylcalc"};
  app.require_subcommand(1);
  Context ctx;
  std::string w_arg, class_arg, mu_arg, x_arg, y_arg, nu_arg, kappa_arg, classes_arg, output_arg, format_arg = "csv", suite = "all";
  std::optional<std::int64_t> springer, d_gamma, c_gamma;
  int max_length = 2, radius = 4, threads = 1, class_length = -1;
  bool twist = false;

  auto* describe = app.add_subcommand("describe", "root datum, generators and length-zero elements");
  add_common(describe, ctx);

  auto* finite = app.add_subcommand("finite", "finite Weyl group queries");
  finite->require_subcommand(1);
  auto* f_enum = finite->add_subcommand("enumerate", "all elements of W0");
  auto* f_reduce = finite->add_subcommand("reduce", "twisted cyclic-shift reduction to a minimal element");
  auto* f_supp = finite->add_subcommand("supp", "support, twisted support and ellipticity");
  for (auto* c : {f_enum, f_reduce, f_supp}) add_common(c, ctx);
  for (auto* c : {f_reduce, f_supp}) {
    c->add_option("--w", w_arg, "word as [labels] or {\"word\": [labels]}")->required();
    c->add_flag("--twist", twist, "twist by the datum's diagram automorphism");
  }

  auto* classes = app.add_subcommand("classes", "conjugacy class queries");
  classes->require_subcommand(1);
  auto* c_min = classes->add_subcommand("min", "reduce to a minimal-length element");
  auto* c_straight = classes->add_subcommand("straight-classes", "straight classes up to a length");
  auto* c_ux = classes->add_subcommand("ux", "u x decomposition of a minimal element");
  auto* c_alcove = classes->add_subcommand("p-alcove", "P-alcove test");
  for (auto* c : {c_min, c_straight, c_ux, c_alcove}) add_common(c, ctx);
  for (auto* c : {c_min, c_ux, c_alcove}) c->add_option("--w", w_arg, "element JSON")->required();
  c_alcove->add_option("--nu", nu_arg, "coweight as JSON array (default: the Newton point of w)");
  c_straight->add_option("--max-length", max_length, "length bound")->capture_default_str();
  c_straight->add_option("--kappa-of", kappa_arg, "only classes with the kappa of this coweight (JSON array)");

  auto* dim = app.add_subcommand("dim", "dimension queries");
  dim->require_subcommand(1);
  auto* d_xf = dim->add_subcommand("x-flag", "dim X_w(b)");
  auto* d_xg = dim->add_subcommand("x-gr", "dim X_mu(b)");
  auto* d_yf = dim->add_subcommand("y-flag", "dim Y_w(gamma)");
  auto* d_yg = dim->add_subcommand("y-gr", "dim Y_mu(gamma)");
  auto* d_ys = dim->add_subcommand("y-super", "dim Y_w(gamma) for superregular w = x t^mu y");
  for (auto* c : {d_xf, d_xg, d_yf, d_yg, d_ys}) {
    add_common(c, ctx);
    c->add_option("--class", class_arg, "straight class {\"kappa\": [...], \"nu\": [...]}")->required();
  }
  for (auto* c : {d_xf, d_yf}) c->add_option("--w", w_arg, "element JSON")->required();
  for (auto* c : {d_xg, d_yg, d_ys}) c->add_option("--mu", mu_arg, "dominant coweight (JSON array)")->required();
  d_ys->add_option("--x", x_arg, "finite word (JSON array of labels)")->required();
  d_ys->add_option("--y", y_arg, "finite word (JSON array of labels)")->required();
  for (auto* c : {d_yf, d_yg, d_ys}) {
    c->add_option("--springer-dim", springer, "dimension of the affine Springer fiber");
    c->add_option("--d", d_gamma, "discriminant valuation d(gamma)");
    c->add_option("--c", c_gamma, "rank drop c(gamma)");
  }

  auto* verify = app.add_subcommand("verify", "brute-force and theorem cross-checks");
  add_common(verify, ctx);
  verify->add_option("--suite", suite, "oracle, theorems or all")->check(CLI::IsMember({"oracle", "theorems", "all"}))->capture_default_str();
  verify->add_option("--radius", radius, "Cayley ball radius for the oracle suite")->capture_default_str();
  verify->add_option("--max-length", max_length, "length bound for the theorem suite")->capture_default_str();

  auto* table = app.add_subcommand("table", "dimension table over a length ball");
  add_common(table, ctx);
  table->add_option("--max-length", max_length, "length bound")->capture_default_str();
  table->add_option("--classes", classes_arg, "JSON array of classes");
  table->add_option("--class-length", class_length, "use every straight class of length <= this");
  table->add_option("--format", format_arg, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  table->add_option("--output,-o", output_arg, "output file (default: stdout)");
  table->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto started = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return 0;
    }
    err << "weylcalc: " << e.what() << '\n';
    return 1;
  }

  json report;
  try {
    ctx.open();
    const AffineWeylGroup& g = *ctx.g;
    const RootDatum& d = g.datum();
    const ClassEngine& ce = *ctx.classes;
    DimEngine& de = *ctx.dims;
    auto element = [&] { return element_from_json(g, parse_json_arg(w_arg, "w")); };
    auto straight_class = [&] { return class_from_json(ce, parse_json_arg(class_arg, "class")); };
    auto coweight = [&](const std::string& text, const char* what) { return int_vector_from_json(parse_json_arg(text, what)); };

    if (describe->parsed()) {
      json gens = json::array();
      for (const auto& s : g.generators()) gens.push_back({{"label", s.label}, {"name", s.name}, {"element", to_json(s.element)}});
      json comps = json::array();
      for (const auto& c : g.diagram_components()) comps.push_back(labels_json(g, c));
      report = {{"group", d.name()},
                {"datum", d.to_json()},
                {"fingerprint", d.fingerprint()},
                {"rank", d.rank()},
                {"semisimple_rank", d.semisimple_rank()},
                {"num_positive_roots", d.num_positive_roots()},
                {"two_rho", d.two_rho()},
                {"two_rho_check", d.two_rho_check()},
                {"w0_order", enumerate_w0(d).size()},
                {"generators", gens},
                {"num_generators", g.num_generators()},
                {"diagram_components", comps},
                {"pi1", pi1_string(d)},
                {"pi1_moduli", d.pi1_moduli()}};
      if (d.pi1_finite()) {
        json om = json::array();
        for (const auto& t : g.omega_elements()) om.push_back({{"element", to_json(t)}, {"kappa", kappa(t).components}});
        report["omega"] = om;
        report["omega_order"] = g.omega_elements().size();
      } else {
        report["omega"] = nullptr;
        report["omega_order"] = nullptr;
      }
    } else if (f_enum->parsed()) {
      json list = json::array();
      for (const auto& u : enumerate_w0(d)) list.push_back({{"word", finite_word_json(u)}, {"length", u.length()}});
      report = {{"group", d.name()}, {"order", list.size()}, {"elements", list}};
    } else if (f_reduce->parsed() || f_supp->parsed()) {
      FiniteWeylElt u = finite_arg(d, w_arg);
      FiniteTwist delta = twist ? FiniteTwist::from_datum(d) : FiniteTwist::identity(d);
      report = {{"group", d.name()}, {"w", finite_word_json(u)}, {"twisted", twist}};
      if (f_reduce->parsed()) {
        TwistedReduction r = delta_reduce_to_min(u, delta);
        json path = json::array();
        for (const auto& s : r.path)
          path.push_back({{"s", s.simple + 1}, {"before", finite_word_json(s.before)}, {"after", finite_word_json(s.after)}});
        report["w_min"] = finite_word_json(r.w_min);
        report["length"] = r.w_min.length();
        report["path"] = path;
      } else {
        auto plus_one = [](std::vector<int> v) {
          for (int& i : v) ++i;
          return v;
        };
        report["support"] = plus_one(support(u));
        report["supp_delta"] = plus_one(supp_delta(u, delta));
        report["elliptic"] = is_elliptic_delta(u, delta);
      }
    } else if (c_min->parsed()) {
      AffineWeylElt w = element();
      Reduction r = ce.reduce_to_min(w);
      report = {{"group", d.name()}, {"w", to_json(w)}, {"length", length(w)}, {"w_min", to_json(r.w_min)},
                {"min_length", length(r.w_min)}, {"path", steps_json(g, r.path)}};
    } else if (c_straight->parsed()) {
      std::optional<KappaClass> k;
      if (!kappa_arg.empty()) k = d.kappa_class(coweight(kappa_arg, "kappa-of"));
      if (!k && !d.pi1_finite()) fail(ErrorKind::InfinitePi1, "X/Q^vee is infinite; pass --kappa-of");
      json list = json::array();
      for (const auto& c : ce.enumerate_straight_classes(max_length, k)) list.push_back(to_json(c));
      report = {{"group", d.name()}, {"max_length", max_length}, {"classes", list}};
    } else if (c_ux->parsed()) {
      AffineWeylElt w = element();
      Reduction r = ce.reduce_to_min(w);
      UxDecomposition ux = ce.ux_decompose(r.w_min);
      report = {{"group", d.name()}, {"w", to_json(w)}, {"was_minimal", r.path.empty()}, {"w_min", to_json(r.w_min)},
                {"ux", ux_json(g, ux)}, {"class", to_json(ce.class_of_straight(ux.x))}};
    } else if (c_alcove->parsed()) {
      AffineWeylElt w = element();
      RatVector nu = nu_arg.empty() ? newton_point(w).nu : rat_vector_from_json(parse_json_arg(nu_arg, "nu"));
      if (static_cast<int>(nu.size()) != d.rank()) fail(ErrorKind::InvalidArgument, "nu has the wrong rank");
      report = {{"group", d.name()}, {"w", to_json(w)}, {"nu", to_json(nu)}, {"p_alcove", ce.p_alcove_test(w, nu)}};
    } else if (dim->parsed()) {
      StraightClass c = straight_class();
      report = {{"group", d.name()}, {"class", to_json(c)}};
      json witnesses = json::object();
      DimValue value;
      std::optional<Rational> vd;
      if (d_xf->parsed() || d_yf->parsed() || d_ys->parsed()) {
        AffineWeylElt w = AffineWeylElt::identity(d);
        if (d_ys->parsed()) {
          FiniteWeylElt x = finite_arg(d, x_arg), y = finite_arg(d, y_arg);
          w = AffineWeylElt::finite(x) * AffineWeylElt(coweight(mu_arg, "mu"), y);
          value = de.dim_Y_superregular(x, coweight(mu_arg, "mu"), y, gamma_arg(c, springer, d_gamma, c_gamma));
        } else {
          w = element();
          value = d_xf->parsed() ? de.dim_X_flag(w, c) : de.dim_Y_flag(w, gamma_arg(c, springer, d_gamma, c_gamma));
        }
        report["w"] = to_json(w);
        report["length"] = length(w);
        VirtualDimension v = virtual_dimension_exact(w, c);
        vd = v.by_class;
        witnesses["eta"] = eta_json(v.eta);
        witnesses["class_of_w"] = to_json(ce.straight_class_of(w));
        FlagStep step = de.explain(w);
        json red{{"minimal", step.minimal}};
        if (step.descent) {
          const AffineWeylElt& s = g.generator(step.descent->generator);
          AffineWeylElt sw = s * step.descent->w_prime;
          red["walk"] = steps_json(g, step.descent->walk);
          red["w_prime"] = to_json(step.descent->w_prime);
          red["s"] = label_of(g, step.descent->generator);
          red["s_w_prime"] = {{"element", to_json(sw)}, {"dim", dim_json(de.dim_X_flag(sw, c))}};
          red["s_w_prime_s"] = {{"element", to_json(sw * s)}, {"dim", dim_json(de.dim_X_flag(sw * s, c))}};
        }
        if (step.ux) red["ux"] = ux_json(g, *step.ux);
        witnesses["reduction"] = red;
      } else {
        IntVector mu = coweight(mu_arg, "mu");
        report["mu"] = mu;
        value = d_xg->parsed() ? de.dim_X_grass(mu, c) : de.dim_Y_grass(mu, gamma_arg(c, springer, d_gamma, c_gamma));
      }
      if (d_yf->parsed() || d_yg->parsed() || d_ys->parsed()) {
        witnesses["springer_dim"] = resolve_springer_dim(d, gamma_arg(c, springer, d_gamma, c_gamma));
      }
      json dj = dim_json(value);
      report["nonempty"] = dj["nonempty"];
      report["dim"] = dj["dim"];
      report["virtual_dim"] = vd ? to_json(*vd) : json(nullptr);
      report["witnesses"] = witnesses;
      de.save_cache();
    } else if (verify->parsed()) {
      json suites = json::array();
      bool ok = true;
      if (suite == "oracle" || suite == "all") suites.push_back(verify_oracle(ce, radius));
      if (suite == "theorems" || suite == "all") suites.push_back(verify_theorems(de, max_length));
      for (const auto& s : suites) ok = ok && s["passed"].get<bool>();
      report = {{"group", d.name()}, {"passed", ok}, {"suites", suites}};
      de.save_cache();
      out << report.dump(2) << '\n';
      return ok ? 0 : 4;
    } else if (table->parsed()) {
      TableSpec spec;
      spec.max_length = max_length;
      spec.threads = threads;
      spec.format = format_arg == "json" ? TableSpec::Format::Json : TableSpec::Format::Csv;
      if (!classes_arg.empty()) {
        json list = parse_json_arg(classes_arg, "classes");
        if (!list.is_array()) fail(ErrorKind::InvalidArgument, "--classes must be a JSON array");
        for (const auto& cj : list) spec.classes.push_back(class_from_json(ce, cj));
      }
      if (class_length >= 0) {
        for (const auto& c : scan_classes(ce, class_length)) spec.classes.push_back(c);
      }
      std::string text = emit_table(de, spec);
      de.save_cache();
      if (output_arg.empty()) {
        out << text;
      } else {
        std::ofstream f(output_arg);
        if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + output_arg);
        f << text;
      }
      return 0;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    CacheStats cs = de.cache_stats();
    report["stats"] = {{"elapsed_ms", elapsed}, {"cache", {{"loaded", cs.loaded}, {"hits", cs.hits}, {"computed", cs.computed}}}};
    out << report.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "weylcalc: " << to_string(e.kind()) << ": " << e.what() << '\n';
    out << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "weylcalc: internal error: " << e.what() << '\n';
    out << json{{"error", "Internal"}, {"message", e.what()}}.dump(2) << '\n';
    return 4;
  }
}

}  // namespace weylcalc
