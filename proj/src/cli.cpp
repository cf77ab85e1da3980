#include "semiwig/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semiwig/error.hpp"
#include "semiwig/io.hpp"
#include "semiwig/oscillator.hpp"
#include "semiwig/parallel.hpp"
#include "semiwig/specfun.hpp"
#include "semiwig/verify.hpp"

namespace semiwig {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json grid_json(const PhaseSpaceGrid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"p_min", g.p_min}, {"p_max", g.p_max}, {"nx", g.nx}, {"np", g.np}};
}

json base_meta(const char* command, const Scenario& s) {
  return {{"command", command}, {"scenario", to_json(s)}, {"grid", grid_json(s.grid)}};
}

CsvTable field_table(const ComplexField& f) {
  CsvTable t({"x", "p", "re", "im"});
  const PhaseSpaceGrid& g = f.grid();
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.np; ++j) t.row(std::vector<double>{g.x(i), g.p(j), f.at(i, j).real(), f.at(i, j).imag()});
  return t;
}

Scenario effective(const Scenario& s, const RunOptions& o) {
  Scenario e = s;
  if (o.backend) e.backend = *o.backend;
  e.validate();
  return e;
}

std::string timestamp_utc() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::vector<fs::path> cmd_eigen(const Scenario& in, const RunOptions& o) {
  Scenario s = effective(in, o);
  if (s.modes.empty()) throw Error(Errc::config, "eigen needs at least one entry in modes");
  fs::create_directories(o.out);
  std::vector<fs::path> files;

  CsvTable ev({"n", "eigenvalue"});
  for (int n : s.modes) ev.row(std::vector<double>{double(n), eigenvalue({s.eps, n, n})});
  files.push_back(write_table(o.out, s.prefix + "_eigenvalues", ev, base_meta("eigen", s)));

  Backend b = parse_backend(s.backend);
  for (int n : s.modes) {
    std::string tag = s.prefix + "_n" + std::to_string(n);
    WkbEigenfunction w(n, s.eps);
    double reach = std::sqrt(2.0 * w.energy()) + 1.0;
    // WKB is blank inside the turning bands; in_band = 1 marks those rows
    CsvTable tab({"x", "exact", "wkb", "in_band"});
    const int k = 801;
    for (int i = 0; i < k; ++i) {
      double x = -reach + 2.0 * reach * i / (k - 1);
      bool band = w.region(x) == WkbRegion::turning_band;
      tab.row(std::vector<double>{x, exact_eigenfunction({s.eps, n, n}, x), band ? 0.0 : w.value(x), band ? 1.0 : 0.0});
    }
    json meta = base_meta("eigen", s);
    meta["mode"] = n;
    meta["band_half_width"] = w.band();
    files.push_back(write_table(o.out, tag + "_eigenfunction", tab, meta));

    files.push_back(write_table(o.out, tag + "_wigner_exact", field_table(exact_wigner_field(n, n, s.eps, s.grid)), meta));
    bool airy_ok = n >= kAiryNmin;
    if (b != Backend::exact_laguerre && airy_ok) {
      EigencurveGeometry g = EigencurveGeometry::make(n, n, s.eps);
      ComplexField f(s.grid);
      parallel_for(s.grid.nx, [&](int i) {
        for (int j = 0; j < s.grid.np; ++j) f.at(i, j) = airy_diagonal(g, s.grid.x(i), s.grid.p(j));
      });
      files.push_back(write_table(o.out, tag + "_wigner_airy", field_table(f), meta));
    }
  }
  return files;
}

std::vector<fs::path> cmd_solve(const Scenario& in, const RunOptions& o) {
  Scenario s = effective(in, o);
  SpectralSolution sol;
  if (s.datum) {
    sol = coefficients_exact(make_datum(*s.datum, s.eps), s.n_max);
  } else if (!s.modes.empty()) {
    int top = 0;
    for (int n : s.modes) top = std::max(top, n);
    top = std::max(top, s.n_max);
    std::vector<cplx> a(top + 1, 0.0);
    for (int n : s.modes) a[n] += 1.0;
    double norm = 0.0;
    for (const cplx& v : a) norm += std::norm(v);
    for (cplx& v : a) v /= std::sqrt(norm);
    sol = SpectralSolution::from_amplitudes(a, s.eps);
  } else {
    throw Error(Errc::config, "solve needs a datum or a list of modes");
  }
  Backend b = parse_backend(s.backend);
  fs::create_directories(o.out);
  std::vector<fs::path> files;

  json meta = base_meta("solve", s);
  meta["n_max"] = sol.n_max;
  meta["trace"] = sol.trace();
  CsvTable coeff({"n", "m", "re", "im", "provenance"});
  for (int n = 0; n <= sol.n_max; ++n)
    for (int m = 0; m <= sol.n_max; ++m) {
      cplx c = sol.c(n, m);
      std::size_t k = static_cast<std::size_t>(n) * (sol.n_max + 1) + m;
      coeff.row(std::vector<std::string>{std::to_string(n), std::to_string(m), format_number(c.real()),
                                         format_number(c.imag()), provenance_name(sol.provenance[k])});
    }
  files.push_back(write_table(o.out, s.prefix + "_coefficients", coeff, meta));

  std::vector<double> xs;
  for (int i = 0; i < s.grid.nx; ++i) xs.push_back(s.grid.x(i));
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    double t = s.times[k];
    FieldReport report;
    ComplexField f = evolve(sol, b, s.grid, t, &report);
    json m = meta;
    m["time"] = t;
    m["backend"] = backend_name(b);
    m["substituted"] = report.substituted;
    std::string tag = s.prefix + "_t" + std::to_string(k);
    files.push_back(write_table(o.out, tag + "_field", field_table(f), m));

    AmplitudeDecomposition a = amplitude(sol, b, xs, t);
    CsvTable amp({"x", "coherent", "incoherent", "total"});
    for (std::size_t i = 0; i < xs.size(); ++i)
      amp.row(std::vector<double>{a.x[i], a.coherent[i], a.incoherent[i], a.total[i]});
    files.push_back(write_table(o.out, tag + "_amplitude", amp, m));
  }
  return files;
}

int cmd_verify(const std::string& suite, const RunOptions& o, std::ostream& log) {
  std::vector<int> ids = suite_criteria(suite);
  fs::create_directories(o.out);
  fs::path report = o.out / "verify_report.jsonl";
  int failed = 0;
  for (int id : ids) {
    CriterionResult r = run_criterion(id);
    json rec = {{"timestamp", timestamp_utc()}, {"suite", suite},         {"id", r.id},
                {"name", r.name},               {"measured", r.measured}, {"threshold", r.threshold},
                {"pass", r.pass},               {"seconds", r.seconds},   {"detail", r.detail}};
    // one write per record keeps concurrent appenders line-atomic
    std::string line = rec.dump() + "\n";
    std::ofstream out(report, std::ios::app | std::ios::binary);
    if (!out) throw Error(Errc::config, "cannot append to " + report.string());
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    log << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

fs::path cmd_bench(const RunOptions& o, std::ostream& log) {
  using clock = std::chrono::steady_clock;
  fs::create_directories(o.out);
  CsvTable t({"case", "seconds", "evaluations"});
  auto time = [&](const std::string& name, double evals, const std::function<void()>& body) {
    auto t0 = clock::now();
    body();
    double sec = std::chrono::duration<double>(clock::now() - t0).count();
    t.row(std::vector<std::string>{name, format_number(sec), format_number(evals)});
    log << name << ": " << sec << " s\n";
  };
  volatile double sink = 0.0;
  time("airy", 1e5, [&] {
    for (int i = 0; i < 100000; ++i) sink = sink + airy(-40.0 + 8e-4 * i).ai;
  });
  time("laguerre_n100", 1e5, [&] {
    for (int i = 0; i < 100000; ++i) sink = sink + laguerre(100, 1.0, 1e-3 * i);
  });
  PhaseSpaceGrid g{-3, 3, -3, 3, 64, 64};
  time("exact_wigner_field_n20", 64.0 * 64.0, [&] { sink = sink + exact_wigner_field(20, 20, 0.1, g).max_abs(); });
  SpectralSolution s = SpectralSolution::from_amplitudes({std::sqrt(0.5), 0.0, 0.0, std::sqrt(0.5)}, 0.5);
  time("evolve_two_mode", 64.0 * 64.0, [&] { sink = sink + evolve(s, Backend::exact_laguerre, g, 1.0).max_abs(); });
  InitialDatum d = make_datum({"gaussian", "quad_plus", 0.0, 0.5, {}}, 0.05);
  time("coefficients_exact", 1.0, [&] { sink = sink + coefficients_exact(d).trace(); });
  json meta = {{"command", "bench"}, {"threads", thread_count()}};
  return write_table(o.out, "bench", t, meta);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Semiclassical Wigner-function toolkit for the harmonic oscillator"};
  app.require_subcommand(1);
  std::string config, suite = "all", backend;
  std::string out = ".";
  int threads = 0;
  double perturb = 0.0;
  app.add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out, "output directory");

  auto* eigen = app.add_subcommand("eigen", "eigenvalues, eigenfunctions and Wigner eigenfunction grids");
  auto* solve = app.add_subcommand("solve", "coefficients, evolved fields and amplitude decompositions");
  auto* verify = app.add_subcommand("verify", "run acceptance criteria and append a report");
  auto* bench = app.add_subcommand("bench", "time core kernels");
  for (auto* sc : {eigen, solve}) {
    sc->add_option("--config", config, "scenario file")->required();
    sc->add_option("--backend", backend, "exact | airy | hybrid");
  }
  verify->add_option("--suite", suite, "specfun | stationary-phase | oscillator | wigner | solver | all");
  verify->add_option("--perturb-airy", perturb, "mutation test: relative change of the Ai(0) constant")
      ->group("");
  for (auto* sc : {eigen, solve, verify, bench}) {
    sc->add_option("--out", out, "output directory");
    sc->add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_thread_count(threads);
    RunOptions o;
    o.out = out;
    if (!backend.empty()) o.backend = backend;
    if (*eigen || *solve) {
      Scenario s = load_scenario(config);
      auto files = *eigen ? cmd_eigen(s, o) : cmd_solve(s, o);
      for (const auto& f : files) std::cout << f.string() << "\n";
      return 0;
    }
    if (*verify) {
      set_airy_constant_perturbation(perturb);
      return cmd_verify(suite, o, std::cout);
    }
    std::cout << cmd_bench(o, std::cout).string() << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace semiwig
