// Copyright 2026 The quditcorr Authors
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

#include <quditcorr/cli/runner.hpp>
#include <quditcorr/quditcorr.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace quditcorr::cli {

void RunConfig::validate() const {
  if (trials < 1) throw ParseError("--trials must be >= 1");
  if (tolerance && !(*tolerance > 0.0)) throw ParseError("--tol must be > 0");
  if (jobs < 1) throw ParseError("--jobs must be >= 1");
  if (restarts < 1) throw ParseError("--restarts must be >= 1");
  if (settings < 1) throw ParseError("--settings must be >= 1");
  if (terms < 1) throw ParseError("--terms must be >= 1");
  if (points < 1) throw ParseError("--points must be >= 1");
  if (!(q > 0.0) || !std::isfinite(q)) throw ParseError("--q must be a finite number > 0");
}

namespace {

/// A report plus what is needed to reproduce it.
struct Outcome {
  InequalityReport report;
  std::optional<Seed> seed;
  std::vector<ComplexMatrix> states;
};

/// Result i is f(i); ordering never depends on which worker finished first.
template <class F>
auto parallel_map(int count, unsigned jobs, F f) -> std::vector<decltype(f(0))> {
  using T = decltype(f(0));
  std::vector<T> results(static_cast<std::size_t>(count));
  const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = f(i);
    return results;
  }
  std::vector<std::future<void>> futures;
  for (unsigned w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers))
        results[static_cast<std::size_t>(i)] = f(i);
    }));
  }
  for (auto& fut : futures) fut.get();
  return results;
}

std::string format_number(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

class Sink {
 public:
  explicit Sink(OutputFormat format) : format_(format) {}

  void report(const InequalityReport& r) {
    if (format_ == OutputFormat::Csv) {
      if (!csv_header_written_) lines_.push_back(csv_header());
      csv_header_written_ = true;
      lines_.push_back(to_csv(r));
    } else {
      lines_.push_back(to_json(r).dump());
    }
  }

  /// `rows` is used only in CSV mode, `record` only in JSON mode.
  void record(const nlohmann::json& record, const std::vector<std::string>& rows) {
    if (format_ == OutputFormat::Csv)
      lines_.insert(lines_.end(), rows.begin(), rows.end());
    else
      lines_.push_back(record.dump());
  }

  void flush(std::ostream& out) const {
    for (const auto& line : lines_) out << line << '\n';
  }

 private:
  OutputFormat format_;
  bool csv_header_written_ = false;
  std::vector<std::string> lines_;
};

class Runner {
 public:
  explicit Runner(const RunConfig& c) : c_(c), sink_(c.format) {}

  void dispatch() {
    const std::string& cmd = c_.command;
    const std::string& act = c_.action;
    if (cmd == "fixtures") return fixtures();
    if (cmd == "maps" && act == "build") return maps_build();
    if (cmd == "maps" && act == "check") return maps_check();
    if (cmd == "maps" && act == "apply") return maps_apply();
    if (cmd == "ineq" && (act == "subadd" || act == "mutinfo")) return ineq_entropy();
    if (cmd == "ineq" && act == "mono") return ineq_mono();
    if (cmd == "ineq" && act == "diag") return ineq_diag();
    if (cmd == "tomo" && act == "eval") return tomo_eval();
    if (cmd == "tomo" && act == "nosig") return tomo_nosig();
    if (cmd == "bell" && act == "chsh") return bell_chsh();
    if (cmd == "bell" && act == "ppt") return bell_ppt();
    if (cmd == "bell" && act == "laplace") return bell_laplace();
    if (cmd == "bell" && act == "separable") return bell_separable();
    throw ParseError("unknown subcommand '" + cmd + (act.empty() ? "" : " " + act) + "'");
  }

  const Sink& sink() const { return sink_; }
  const std::vector<Outcome>& violations() const { return violations_; }

 private:
  void emit(Outcome o) {
    if (c_.tolerance) {
      o.report.tolerance = *c_.tolerance;
      o.report.pass = o.report.margin >= -*c_.tolerance;
    }
    sink_.report(o.report);
    if (!o.report.pass) violations_.push_back(std::move(o));
  }

  void emit_all(std::vector<Outcome> outcomes) {
    for (auto& o : outcomes) emit(std::move(o));
  }

  DensityMatrix required_state() const {
    if (!c_.state) throw ParseError("--state is required for '" + c_.command + " " + c_.action + "'");
    return load_density(*c_.state);
  }

  MapMatrix selected_map() const {
    if (c_.kind == "m1") return m1_matrix(c_.n);
    if (c_.kind == "m2") return m2_matrix(c_.n);
    if (c_.kind == "m1t") return m1_tilde_matrix(c_.n);
    if (c_.kind == "m2t") return m2_tilde_matrix(c_.n);
    throw ParseError("unknown map kind '" + c_.kind + "'");
  }

  void fixtures() {
    for (const auto& p : write_fixtures(c_.fixtures_dir))
      sink_.record({{"fixture", p.filename().string()}, {"path", p.string()}}, {p.string()});
  }

  void maps_build() {
    const MapMatrix L = selected_map();
    std::vector<std::string> rows{"row,col,re,im"};
    for (Index i = 0; i < L.N(); ++i)
      for (Index j = 0; j < L.N(); ++j)
        if (L.entries(i, j) != Complex(0.0))
          rows.push_back(std::to_string(i) + ',' + std::to_string(j) + ',' +
                         format_number(L.entries(i, j).real()) + ',' +
                         format_number(L.entries(i, j).imag()));
    sink_.record({{"kind", std::string(to_string(L.label))},
                  {"n", L.n()},
                  {"N", L.N()},
                  {"diagonal", L.is_diagonal()},
                  {"matrix", matrix_to_json(L.entries)}},
                 rows);
  }

  void maps_check() {
    emit({is_positive_map_on_sample(selected_map(), c_.trials, c_.seed), c_.seed, {}});
  }

  void maps_apply() {
    const MapMatrix L = selected_map();
    const ComplexMatrix a = required_state().matrix();
    const ComplexMatrix out = apply_map(L, a);
    std::vector<std::string> rows{"row,col,re,im"};
    for (Index i = 0; i < out.rows(); ++i)
      for (Index j = 0; j < out.cols(); ++j)
        rows.push_back(std::to_string(i) + ',' + std::to_string(j) + ',' +
                       format_number(out(i, j).real()) + ',' + format_number(out(i, j).imag()));
    sink_.record({{"kind", std::string(to_string(L.label))}, {"result", matrix_to_json(out)}}, rows);
  }

  SubadditivityVariant variant() const {
    if (c_.variant == "portrait") return SubadditivityVariant::Portrait;
    if (c_.variant == "raw") return SubadditivityVariant::RawMaps;
    throw ParseError("unknown variant '" + c_.variant + "'");
  }

  void ineq_entropy() {
    const SubadditivityVariant v = variant();
    const bool mutual = c_.action == "mutinfo";
    auto evaluate = [&](const DensityMatrix& a) {
      return mutual ? single_qudit_mutual_info(a, c_.q, v) : check_subadditivity(a, c_.q, v);
    };
    if (c_.state) {
      const DensityMatrix a = load_density(*c_.state);
      emit({evaluate(a), std::nullopt, {a.matrix()}});
      return;
    }
    emit_all(parallel_map(c_.trials, c_.jobs, [&](int i) {
      const Seed s = derive_seed(c_.seed, static_cast<std::uint64_t>(i));
      const DensityMatrix a = random_density(c_.n, s);
      return Outcome{evaluate(a), s, {a.matrix()}};
    }));
  }

  Perm4 parse_perm() const {
    if (c_.perm.size() != 4) throw ParseError("--perm expects four digits, e.g. 2143");
    Perm4 p{};
    std::array<bool, 4> seen{};
    for (std::size_t k = 0; k < 4; ++k) {
      const int d = c_.perm[k] - '1';
      if (d < 0 || d > 3 || seen[static_cast<std::size_t>(d)])
        throw ParseError("--perm '" + c_.perm + "' is not a permutation of 1234");
      seen[static_cast<std::size_t>(d)] = true;
      p[k] = d;
    }
    return p;
  }

  std::vector<Reduction> reductions() const {
    if (c_.reduction == "ptrace") {
      if (c_.dims.size() != 2) throw ParseError("--dims for ptrace needs two factors");
      return {Reduction::partial_trace(c_.dims[0], c_.dims[1])};
    }
    if (c_.reduction == "j32") return {Reduction::qudit32(parse_perm())};
    if (c_.reduction == "alt") return {Reduction::alternative()};
    if (c_.reduction == "perm") {
      std::vector<Reduction> all;
      for (const Perm4& p : all_perm4()) all.push_back(Reduction::qudit32(p));
      return all;
    }
    throw ParseError("unknown reduction '" + c_.reduction + "'");
  }

  void ineq_mono() {
    const std::vector<Reduction> rs = reductions();
    const Index dim = rs.front().input_dim();
    auto per_trial = parallel_map(c_.trials, c_.jobs, [&](int i) {
      const auto k = static_cast<std::uint64_t>(i);
      const Seed s = derive_seed(c_.seed, 2 * k);
      const DensityMatrix rho = random_density(dim, s);
      const DensityMatrix sigma = random_density(dim, derive_seed(c_.seed, 2 * k + 1));
      std::vector<Outcome> out;
      for (const Reduction& r : rs)
        out.push_back({check_monotonicity(rho, sigma, r), s, {rho.matrix(), sigma.matrix()}});
      return out;
    });
    for (auto& trial : per_trial) emit_all(std::move(trial));
  }

  void ineq_diag() {
    emit_all(parallel_map(c_.trials, c_.jobs, [&](int i) {
      const Seed s = derive_seed(c_.seed, static_cast<std::uint64_t>(i));
      Engine engine = make_engine(s);
      std::exponential_distribution<double> e(1.0);
      std::array<double, 3> d{e(engine), e(engine), e(engine)};
      const double total = d[0] + d[1] + d[2];
      for (double& x : d) x /= total;
      ComplexMatrix m = ComplexMatrix::Zero(3, 3);
      for (Index k = 0; k < 3; ++k) m(k, k) = d[static_cast<std::size_t>(k)];
      return Outcome{diagonal_inequality(d), s, {m}};
    }));
  }

  void tomo_eval() {
    const DensityMatrix rho = required_state();
    const ComplexMatrix u =
        c_.unitary ? load_matrix(*c_.unitary) : ComplexMatrix::Identity(rho.dim(), rho.dim());
    std::optional<IndexBijection> labels;
    if (!c_.bijection.empty()) labels.emplace(bijection_kind_from_string(c_.bijection));
    const Tomogram w = tomogram(rho, u, labels);
    std::vector<std::string> rows{"index,label,probability"};
    for (std::size_t k = 0; k < w.probs.size(); ++k)
      rows.push_back(std::to_string(k + 1) + ',' + w.index_labels[k] + ',' + format_number(w.probs[k]));
    sink_.record({{"probs", w.probs}, {"labels", w.index_labels}, {"unitary_digest", w.unitary_digest}},
                 rows);
  }

  void tomo_nosig() {
    Index total = 1;
    for (Index d : c_.dims) {
      if (d < 1) throw ParseError("--dims entries must be >= 1");
      total *= d;
    }
    DensityMatrix a = c_.state ? load_density(*c_.state) : random_density(total, c_.seed);
    if (a.dim() < total) a = embed_pad(a, total);
    emit({no_signaling_check(a, c_.dims, c_.trials, c_.seed), c_.seed, {a.matrix()}});
  }

  void bell_chsh() {
    const DensityMatrix rho = required_state();
    ChshOptions opts;
    opts.restarts = c_.restarts;
    opts.seed = c_.seed;
    opts.pairing = c_.strict_pairing ? Pairing::ReuseA : Pairing::Standard;
    opts.threads = c_.jobs;
    const ChshOptimum best = optimize_chsh(rho, opts);
    InequalityReport r = make_report(
        c_.strict_pairing ? "chsh[strict_pairing]" : "chsh", kTsirelsonBound, best.best_B,
        1e-9, digest(rho.matrix()));
    r.details["best_B"] = best.best_B;
    r.details["signed_B"] = best.signed_B;
    r.details["classical_bound"] = kClassicalBound;
    r.details["tsirelson_bound"] = kTsirelsonBound;
    r.details["exceeds_classical"] = best.best_B > kClassicalBound + 1e-9 ? 1.0 : 0.0;
    r.details["evaluations"] = best.evaluations;
    r.details["best_restart"] = best.best_restart;
    r.details["restarts"] = c_.restarts;
    const auto angles = best.best_setting.to_angles();
    static constexpr std::array<const char*, 12> kNames{
        "a_phi", "a_theta", "a_psi", "b_phi", "b_theta", "b_psi",
        "c_phi", "c_theta", "c_psi", "d_phi", "d_theta", "d_psi"};
    for (std::size_t k = 0; k < 12; ++k) r.details[kNames[k]] = angles[k];
    emit({r, c_.seed, {rho.matrix()}});
  }

  void bell_ppt() {
    const DensityMatrix rho = required_state();
    const PptResult p = ppt_check(rho);
    InequalityReport r = make_report("ppt", p.min_pt_eigenvalue, 0.0, tol::kPsd, digest(rho.matrix()));
    r.details["min_pt_eigenvalue"] = p.min_pt_eigenvalue;
    emit({r, std::nullopt, {rho.matrix()}});
  }

  void bell_laplace() {
    Engine engine = make_engine(c_.seed);
    std::uniform_real_distribution<double> interior(0.01, 0.99);
    std::vector<std::array<double, 4>> pts(static_cast<std::size_t>(c_.points));
    for (auto& p : pts)
      for (double& x : p) x = interior(engine);
    emit({laplace_check(pts), c_.seed, {}});
  }

  void bell_separable() {
    emit_all(parallel_map(c_.trials, c_.jobs, [&](int i) {
      const Seed s = derive_seed(c_.seed, static_cast<std::uint64_t>(i));
      const DensityMatrix rho = mix_separable(random_separable_spec(c_.terms, s));
      Engine engine = make_engine(derive_seed(s, 1));
      std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
      double worst = 0.0;
      for (int k = 0; k < c_.settings; ++k) {
        std::array<double, 12> x{};
        for (double& v : x) v = angle(engine);
        worst = std::max(worst, std::abs(chsh_value(rho, ChshSetting::from_angles(x))));
      }
      InequalityReport r = make_report("chsh_separable[terms=" + std::to_string(c_.terms) + "]",
                                       kClassicalBound, worst, 1e-9, digest(rho.matrix()));
      r.details["max_abs_B"] = worst;
      r.details["settings"] = c_.settings;
      return Outcome{r, s, {rho.matrix()}};
    }));
  }

  const RunConfig& c_;
  Sink sink_;
  std::vector<Outcome> violations_;
};

std::filesystem::path sidecar_path(const RunConfig& c) {
  if (c.violations) return *c.violations;
  if (c.output) return c.output->string() + ".violations.jsonl";
  return "quditcorr.violations.jsonl";
}

void write_violations(const std::filesystem::path& path, const std::vector<Outcome>& vs) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path.string());
  for (const Outcome& o : vs) {
    nlohmann::json j{{"report", to_json(o.report)}};
    if (o.seed) j["seed"] = *o.seed;
    j["states"] = nlohmann::json::array();
    for (const auto& m : o.states) j["states"].push_back(matrix_to_json(m));
    f << j.dump() << '\n';
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    Runner runner(config);
    runner.dispatch();
    if (config.output) {
      std::ofstream f(*config.output);
      if (!f) throw ParseError("cannot write " + config.output->string());
      runner.sink().flush(f);
    } else {
      runner.sink().flush(out);
    }
    if (runner.violations().empty()) return kExitPass;
    const auto sidecar = sidecar_path(config);
    write_violations(sidecar, runner.violations());
    err << runner.violations().size() << " violation(s); details in " << sidecar.string() << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInvalidInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string output, violations, state, unitary, format = "json";
  std::optional<double> tolerance;

  CLI::App app{"Numerical checks for qudit entropic, tomographic and Bell inequalities.", "quditcorr"};
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "Global seed; per-trial seeds are derived from it")
      ->envname("QUDITCORR_SEED");
  app.add_option("-o,--output", output, "Write reports to this file instead of stdout");
  app.add_option("--violations", violations, "Sidecar file for failing reports");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", tolerance, "Override every report's tolerance");
  app.add_option("--jobs", c.jobs, "Worker threads");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->final_callback([&c, parent, name] {
      c.command = parent->get_name();
      c.action = name;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto add_state = [&](CLI::App* sub) { sub->add_option("--state", state, "Density matrix JSON"); };
  auto add_trials = [&](CLI::App* sub) { sub->add_option("--trials", c.trials, "Number of trials"); };

  CLI::App* maps = group("maps", "Positive maps on qudits");
  for (const char* name : {"build", "check", "apply"}) {
    CLI::App* sub = leaf(maps, name,
                         std::string(name) == "build"   ? "Print a map matrix"
                         : std::string(name) == "check" ? "Sample positivity of a map"
                                                        : "Apply a map to a state");
    sub->add_option("--kind", c.kind, "Map kind")->check(CLI::IsMember({"m1", "m2", "m1t", "m2t"}));
    sub->add_option("--n", c.n, "Qudit dimension");
    if (std::string(name) == "check") add_trials(sub);
    if (std::string(name) == "apply") add_state(sub);
  }

  CLI::App* ineq = group("ineq", "Entropic inequalities");
  for (const char* name : {"subadd", "mutinfo"}) {
    CLI::App* sub = leaf(ineq, name,
                         std::string(name) == "subadd" ? "Single-qudit subadditivity"
                                                       : "Single-qudit mutual information");
    sub->add_option("--n", c.n, "Qudit dimension");
    sub->add_option("--q", c.q, "Deformation parameter");
    sub->add_option("--variant", c.variant, "Reduction pair")
        ->check(CLI::IsMember({"portrait", "raw"}));
    add_trials(sub);
    add_state(sub);
  }
  CLI::App* mono = leaf(ineq, "mono", "Relative-entropy monotonicity");
  mono->add_option("--reduction", c.reduction, "Reduction")
      ->check(CLI::IsMember({"ptrace", "j32", "alt", "perm"}));
  mono->add_option("--perm", c.perm, "Index permutation for j32, e.g. 2143");
  mono->add_option("--dims", c.dims, "Factor dimensions for ptrace")->delimiter(',');
  add_trials(mono);
  add_trials(leaf(ineq, "diag", "Diagonal inequality on random simplex points"));

  CLI::App* tomo = group("tomo", "Tomographic probabilities");
  CLI::App* eval = leaf(tomo, "eval", "Tomogram of a state under a unitary");
  add_state(eval);
  eval->add_option("--unitary", unitary, "Unitary matrix JSON (identity if omitted)");
  eval->add_option("--bijection", c.bijection, "Outcome labels")
      ->check(CLI::IsMember({"two_qubit", "qudit32", "qubit_qutrit"}));
  CLI::App* nosig = leaf(tomo, "nosig", "Marginal invariance under local unitaries");
  add_state(nosig);
  nosig->add_option("--dims", c.dims, "Factor dimensions, e.g. 2,3")->delimiter(',');
  add_trials(nosig);

  CLI::App* bell = group("bell", "CHSH and entanglement");
  CLI::App* chsh = leaf(bell, "chsh", "Maximize |B| over local settings");
  add_state(chsh);
  chsh->add_option("--restarts", c.restarts, "Nelder-Mead restarts");
  chsh->add_flag("--strict-paper-pairing", c.strict_pairing, "Use u3 = d(x)a");
  add_state(leaf(bell, "ppt", "Partial-transpose witness"));
  leaf(bell, "laplace", "Laplacian of the classical B")
      ->add_option("--points", c.points, "Random interior points");
  CLI::App* sep = leaf(bell, "separable", "|B| on random separable states");
  add_trials(sep);
  sep->add_option("--settings", c.settings, "Random settings per state");
  sep->add_option("--terms", c.terms, "Product terms per state");

  CLI::App* fixtures = app.add_subcommand("fixtures", "Write canonical state files");
  fixtures->fallthrough();
  fixtures->add_option("--out", c.fixtures_dir, "Target directory");
  fixtures->final_callback([&c] { c.command = "fixtures"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitPass;
    }
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  if (!output.empty()) c.output = output;
  if (!violations.empty()) c.violations = violations;
  if (!state.empty()) c.state = state;
  if (!unitary.empty()) c.unitary = unitary;
  c.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  c.tolerance = tolerance;
  return run(c, out, err);
}

}  // namespace quditcorr::cli
