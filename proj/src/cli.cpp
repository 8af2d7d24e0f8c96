#include "vacshift/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vacshift/constants.hpp"
#include "vacshift/cutoff.hpp"
#include "vacshift/dipole.hpp"
#include "vacshift/mode_sum.hpp"
#include "vacshift/plates_static.hpp"
#include "vacshift/plates_total.hpp"
#include "vacshift/plates_transverse.hpp"
#include "vacshift/quadrature.hpp"
#include "vacshift/sphere.hpp"
#include "vacshift/units.hpp"

namespace vacshift {
namespace {

enum class OutFormat { Csv, JsonLines };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Cell {
  std::string text;
  bool is_string = false;

  Cell(double v) : text(fmt(v)) {}
  Cell(long v) : text(std::to_string(v)) {}
  Cell(int v) : text(std::to_string(v)) {}
  Cell(const std::string& s) : text(s), is_string(true) {}
  Cell(const char* s) : text(s), is_string(true) {}
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

/// Buffered table writer with a fixed schema; CSV or JSON-lines.
class TableWriter {
 public:
  TableWriter(std::vector<std::string> header, OutFormat format)
      : header_(std::move(header)), format_(format) {}

  void comment(const std::string& text) {
    if (format_ == OutFormat::Csv) buffer_ += "# " + text + "\n";
  }

  void row(const std::vector<Cell>& cells) {
    if (format_ == OutFormat::Csv) {
      if (!header_written_) {
        for (std::size_t i = 0; i < header_.size(); ++i) {
          if (i) buffer_ += ',';
          buffer_ += header_[i];
        }
        buffer_ += '\n';
        header_written_ = true;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += cells[i].is_string ? csv_escape(cells[i].text)
                                      : cells[i].text;
      }
      buffer_ += '\n';
    } else {
      buffer_ += '{';
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += "\"" + header_[i] + "\":";
        if (cells[i].is_string) {
          buffer_ += "\"" + json_escape(cells[i].text) + "\"";
        } else {
          buffer_ += cells[i].text;
        }
      }
      buffer_ += "}\n";
    }
  }

  int flush(const std::string& output_path) {
    if (format_ == OutFormat::Csv && !header_written_) {
      row({});  // header-only table
      buffer_.pop_back();
    }
    if (output_path.empty()) {
      std::fwrite(buffer_.data(), 1, buffer_.size(), stdout);
      return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file " << output_path << "\n";
      return 1;
    }
    out.write(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    return out.good() ? 0 : 1;
  }

 private:
  std::vector<std::string> header_;
  OutFormat format_;
  std::string buffer_;
  bool header_written_ = false;
};

int resolve_jobs(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("VACSHIFT_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// Runs fn(i) for i in [0, n) across `jobs` threads; results land in
/// input order. fn must not throw (rows carry their own error column).
template <typename Fn>
std::vector<std::vector<Cell>> parallel_rows(std::size_t n, int jobs, Fn fn) {
  std::vector<std::vector<Cell>> rows(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      rows[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<std::size_t>(jobs, n);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return rows;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
  std::vector<double> g;
  g.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
    g.push_back(lo * std::pow(hi / lo, t));
  }
  return g;
}

struct PlatesInput {
  double d_nm = 0.0;
  double z0_frac = 0.5;
  double a0_nm = 0.1;
  double q_e = 1.0;
  double omega0_ev = 0.0;
  double z_ratio = 0.0;
  double omega_c_ev = 0.0;  // 0 => default 10 omega0
};

const std::vector<std::string> kPlatesHeader = {
    "d_nm",     "z0_frac",  "a0_nm",    "q_e",       "omega0_ev",
    "omega_c_ev", "z_ratio", "nu0",     "eta",       "F_im",
    "F_A",      "vc_ev",    "e_im_vc",  "e_a_vc",    "e_cav_vc",
    "total_vc", "e_im_ev",  "e_a_ev",   "e_cav_ev",  "total_ev",
    "total_over_homega0", "error"};

// Eager input validation; throws std::invalid_argument (exit code 1).
// Failures during the actual computation are per-row (exit code 2).
void validate_plates_input(const PlatesInput& in) {
  const DipoleModel m(in.q_e, in.a0_nm, in.omega0_ev);
  (void)m;
  if (!(in.z0_frac > 0.0 && in.z0_frac < 1.0)) {
    throw std::invalid_argument("z0-frac must lie strictly in (0,1)");
  }
}

std::vector<Cell> plates_row(const PlatesInput& in, bool* numeric_failure) {
  try {
    const DipoleModel m(in.q_e, in.a0_nm, in.omega0_ev);
    const PlateGeometry g(in.d_nm, in.z0_frac);
    std::optional<double> wc;
    if (in.omega_c_ev > 0.0) wc = in.omega_c_ev;
    const PlateSetup setup(g, m, in.z_ratio, wc);
    const ShiftBreakdown b = total_shift(setup);
    const double vc = coulomb_scale(m);
    const double x = in.z0_frac;
    return {in.d_nm,
            in.z0_frac,
            in.a0_nm,
            in.q_e,
            in.omega0_ev,
            setup.homega_c_ev,
            in.z_ratio,
            nu0(in.d_nm, m),
            eta(setup),
            f_im(x),
            f_A(nu0(in.d_nm, m), x),
            vc,
            b.e_im,
            b.e_a,
            b.e_cav,
            b.total,
            b.e_im * vc,
            b.e_a * vc,
            b.e_cav * vc,
            b.total * vc,
            b.total * vc / in.omega0_ev,
            ""};
  } catch (const std::exception& e) {
    if (numeric_failure) *numeric_failure = true;
    std::vector<Cell> row;
    row.push_back(in.d_nm);
    row.push_back(in.z0_frac);
    row.push_back(in.a0_nm);
    row.push_back(in.q_e);
    row.push_back(in.omega0_ev);
    row.push_back(in.omega_c_ev);
    row.push_back(in.z_ratio);
    for (int i = 0; i < 14; ++i) row.push_back(0.0);
    row.push_back(std::string(e.what()));
    return row;
  }
}

int cmd_plates(const PlatesInput& in, const std::string& output,
               OutFormat format) {
  validate_plates_input(in);
  if (!(in.d_nm > 0.0)) {
    throw std::invalid_argument("d-nm must be positive");
  }
  TableWriter w(kPlatesHeader, format);
  bool failed = false;
  w.row(plates_row(in, &failed));
  const int io = w.flush(output);
  if (io != 0) return io;
  return failed ? 2 : 0;
}

struct SphereInput {
  double r_nm = 0.0;
  double z0_nm = 0.0;
  double a0_nm = 0.1;
  double q_e = 1.0;
  double omega0_ev = 0.0;
  double omega_p_ev = 0.0;
  long ell_max = kEllInfinity;
};

const std::vector<std::string> kSphereHeader = {
    "r_nm",    "z0_nm",   "a0_nm",    "q_e",     "omega0_ev",
    "omega_p_ev", "ell_max", "eta_p", "zeff_zvac", "F_im_sp",
    "F_P",     "vc_ev",   "e_im_vc",  "e_p_vc",  "total_vc",
    "e_im_ev", "e_p_ev",  "total_ev", "total_over_homega0", "error"};

int cmd_sphere(const SphereInput& in, const std::string& output,
               OutFormat format) {
  const DipoleModel m(in.q_e, in.a0_nm, in.omega0_ev);
  const SphereSetup setup(in.r_nm, in.z0_nm, in.omega_p_ev, m, in.ell_max);
  TableWriter w(kSphereHeader, format);
  bool failed = false;
  try {
    const SphereSetup& s = setup;
    const ShiftBreakdown b = sphere_total(s);
    const double vc = coulomb_scale(m);
    w.row({in.r_nm, in.z0_nm, in.a0_nm, in.q_e, in.omega0_ev, in.omega_p_ev,
           in.ell_max, eta_p(s), z_eff_over_zvac(in.z0_nm, in.omega_p_ev),
           f_im_sp(in.z0_nm / in.r_nm, in.ell_max),
           f_p(in.omega0_ev / in.omega_p_ev, in.z0_nm / in.r_nm, in.ell_max),
           vc, b.e_im, b.e_cav, b.total, b.e_im * vc, b.e_cav * vc,
           b.total * vc, b.total * vc / in.omega0_ev, ""});
  } catch (const std::exception& e) {
    failed = true;
    std::vector<Cell> row;
    row.push_back(in.r_nm);
    row.push_back(in.z0_nm);
    row.push_back(in.a0_nm);
    row.push_back(in.q_e);
    row.push_back(in.omega0_ev);
    row.push_back(in.omega_p_ev);
    row.push_back(in.ell_max);
    for (int i = 0; i < 12; ++i) row.push_back(0.0);
    row.push_back(std::string(e.what()));
    w.row(row);
  }
  const int io = w.flush(output);
  if (io != 0) return io;
  return failed ? 2 : 0;
}

struct SweepInput {
  PlatesInput base;
  double d_min_nm = 0.0;
  double d_max_nm = 0.0;
  int d_steps = 0;
  double z_min = 0.0;
  double z_max = 0.0;
  int z_steps = 0;
};

int cmd_sweep(const SweepInput& in, const std::string& output,
              OutFormat format, int jobs) {
  validate_plates_input(in.base);
  const std::vector<double> ds = log_grid(in.d_min_nm, in.d_max_nm, in.d_steps);
  const std::vector<double> zs = log_grid(in.z_min, in.z_max, in.z_steps);
  std::vector<PlatesInput> points;
  points.reserve(ds.size() * zs.size());
  for (double d : ds) {
    for (double z : zs) {
      PlatesInput p = in.base;
      p.d_nm = d;
      p.z_ratio = z;
      points.push_back(p);
    }
  }
  std::atomic<bool> failed{false};
  auto rows = parallel_rows(points.size(), jobs, [&](std::size_t i) {
    bool f = false;
    auto r = plates_row(points[i], &f);
    if (f) failed = true;
    return r;
  });
  TableWriter w(kPlatesHeader, format);
  for (auto& r : rows) w.row(r);
  const int io = w.flush(output);
  if (io != 0) return io;
  return failed ? 2 : 0;
}

int cmd_figure(const std::string& name, const std::string& output,
               OutFormat format, int jobs) {
  std::atomic<bool> failed{false};
  auto guard = [&](auto fn) -> std::vector<Cell> {
    try {
      return fn();
    } catch (const std::exception& e) {
      failed = true;
      return {std::string(e.what())};
    }
  };

  std::optional<TableWriter> w;
  if (name == "fig2a") {
    w.emplace(std::vector<std::string>{"z0_over_d", "F_im", "F_A_nu0_0"},
              format);
    const int n = 181;
    auto rows = parallel_rows(n, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double x = 0.05 + 0.005 * static_cast<double>(i);
        return {x, f_im(x), f_A(0.0, x)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "fig2b") {
    w.emplace(std::vector<std::string>{"nu0", "F_A_z0_over_d_0.5",
                                       "F_A_z0_over_d_0.2"},
              format);
    w->comment(
        "positions z0/d in {0.5, 0.2} are an assumed reading of the "
        "'two different positions' in the source figure");
    const int n = 300;
    auto rows = parallel_rows(n, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double nu = 0.01 * static_cast<double>(i + 1);
        return {nu, f_A(nu, 0.5), f_A(nu, 0.2)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "fig2c") {
    w.emplace(std::vector<std::string>{"d_over_a0", "z_over_zvac", "e_im_vc",
                                       "e_a_vc", "e_cav_vc", "total_vc",
                                       "sign", "contour_z_star"},
              format);
    const auto dg = log_grid(2.0, 100.0, 41);
    const auto zg = log_grid(0.1, 300.0, 41);
    const SignBoundaryResult res = sign_boundary_grid(dg, zg, 0.5, 0.5, 1.0);
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      const SignBoundaryRow& r = res.rows[i];
      const double zc = res.contour_z[i / zg.size()];
      std::vector<Cell> cells = {r.d_over_a0,    r.z_over_zvac,
                                 r.shift.e_im,   r.shift.e_a,
                                 r.shift.e_cav,  r.shift.total,
                                 r.sign};
      if (std::isnan(zc)) cells.push_back("");
      else cells.push_back(zc);
      w->row(cells);
    }
  } else if (name == "fig3b") {
    w.emplace(std::vector<std::string>{"ell_max", "ratio_y_0.1", "ratio_y_0.5",
                                       "ratio_y_1"},
              format);
    const double x = 1.0;
    const double f01 = f_p(x, 0.1);
    const double f05 = f_p(x, 0.5);
    const double f10 = f_p(x, 1.0);
    auto rows = parallel_rows(100, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const long le = static_cast<long>(i) + 1;
        return {le, f_p(x, 0.1, le) / f01, f_p(x, 0.5, le) / f05,
                f_p(x, 1.0, le) / f10};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_g1") {
    w.emplace(std::vector<std::string>{"lambda", "g_a2_sharp", "g_a2_logistic",
                                       "one_twelfth"},
              format);
    auto rows = parallel_rows(291, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double lam = 1.0 + 0.1 * static_cast<double>(i);
        return {lam, g_a2(CutoffSpec::sharp(lam)).value,
                g_a2(CutoffSpec::logistic(lam)).value, 1.0 / 12.0};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_f1") {
    w.emplace(std::vector<std::string>{"lambda", "f_a2_sharp_z0.5",
                                       "f_a2_logistic_z0.5", "f_a2_sharp_z0.2",
                                       "f_a2_logistic_z0.2", "closed_z0.5",
                                       "closed_z0.2"},
              format);
    auto rows = parallel_rows(291, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double lam = 1.0 + 0.1 * static_cast<double>(i);
        return {lam,
                f_a2(0.5, CutoffSpec::sharp(lam)).value,
                f_a2(0.5, CutoffSpec::logistic(lam)).value,
                f_a2(0.2, CutoffSpec::sharp(lam)).value,
                f_a2(0.2, CutoffSpec::logistic(lam)).value,
                f_a2(0.5).value,
                f_a2(0.2).value};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_gm") {
    w.emplace(std::vector<std::string>{"nu0", "g_ap_sharp_L10",
                                       "g_ap_logistic_L10", "low_freq",
                                       "high_freq"},
              format);
    const auto nus = log_grid(0.01, 100.0, 81);
    auto rows = parallel_rows(nus.size(), jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double nu = nus[i];
        return {nu, g_ap(nu, CutoffSpec::sharp(10.0)).value,
                g_ap(nu, CutoffSpec::logistic(10.0)).value, g_ap_low_freq(nu),
                g_ap_high_freq(nu)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_fm") {
    w.emplace(std::vector<std::string>{"nu0", "f_ap_sharp_L10",
                                       "f_ap_logistic_L10", "contour",
                                       "low_freq", "high_freq"},
              format);
    const auto nus = log_grid(0.01, 100.0, 81);
    auto rows = parallel_rows(nus.size(), jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double nu = nus[i];
        const double x = 0.5;
        return {nu, f_ap(nu, x, CutoffSpec::sharp(10.0)).value,
                f_ap(nu, x, CutoffSpec::logistic(10.0)).value,
                f_ap_contour(nu, x), f_ap_low_freq(nu),
                f_ap_high_freq(nu, x)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_vim") {
    w.emplace(std::vector<std::string>{"disp_over_d", "v_full_z", "v_quad_z",
                                       "v_full_x", "v_quad_x"},
              format);
    const DipoleModel m(1.0, 0.1, 1.0);
    const PlateGeometry g(1.0, 0.2);
    auto rows = parallel_rows(141, jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const double u = -0.15 + 0.005 * static_cast<double>(i);
        const DipoleDisplacement rz{0.0, 0.0, u * g.d_nm};
        const DipoleDisplacement rx{u * g.d_nm, 0.0, 0.0};
        return {u, v_im_full(g, rz, m), v_im_quadratic(g, rz, m),
                v_im_full(g, rx, m), v_im_quadratic(g, rx, m)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else if (name == "sm_FA") {
    w.emplace(std::vector<std::string>{"z0_over_d", "nu0", "F_A",
                                       "bound_ratio"},
              format);
    const auto nus = log_grid(0.01, 10.0, 25);
    std::vector<std::pair<double, double>> pts;
    for (int ix = 0; ix < 19; ++ix) {
      const double x = 0.05 + 0.05 * ix;
      for (double nu : nus) pts.emplace_back(x, nu);
    }
    auto rows = parallel_rows(pts.size(), jobs, [&](std::size_t i) {
      return guard([&]() -> std::vector<Cell> {
        const auto [x, nu] = pts[i];
        const double fa = f_A(nu, x);
        return {x, nu, fa, kPi * nu * fa / f_im(x)};
      });
    });
    for (auto& r : rows) w->row(r);
  } else {
    std::cerr << "error: unknown figure name " << name << "\n";
    return 1;
  }
  const int io = w->flush(output);
  if (io != 0) return io;
  return failed ? 2 : 0;
}

int cmd_selftest(const std::string& output) {
  struct Check {
    std::string name;
    double value;
    double expected;
    double tol;
  };
  std::vector<Check> checks;
  checks.push_back({"F_im(1/2)", f_im(0.5), 4.2072, 0.005});
  checks.push_back({"g_A2_logistic_L10", g_a2(CutoffSpec::logistic(10.0)).value,
                    1.0 / 12.0, 1e-3});
  checks.push_back({"F_A(0,1/2)", f_A(0.0, 0.5), 2.0 * kPi / 3.0, 1e-3});
  checks.push_back({"F_P(x->0,y=0.01)", f_p(1e-12, 0.01),
                    kPi / std::sqrt(32.0), 0.02 * kPi / std::sqrt(32.0)});
  std::string buf;
  bool all_pass = true;
  for (const Check& c : checks) {
    const bool pass = std::abs(c.value - c.expected) <= c.tol;
    all_pass = all_pass && pass;
    buf += pass ? "PASS " : "FAIL ";
    buf += c.name + " value=" + fmt(c.value) + " expected=" + fmt(c.expected) +
           " tol=" + fmt(c.tol) + "\n";
  }
  if (output.empty()) {
    std::fwrite(buf.data(), 1, buf.size(), stdout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output file " << output << "\n";
      return 1;
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  return all_pass ? 0 : 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"vacshift: vacuum energy shifts of a harmonic dipole in "
               "cavity and plasmonic geometries"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file; flags win");
  app.allow_extras(false);

  std::string output;
  std::string format_name = "csv";
  int jobs_flag = 0;
  app.add_option("-o,--output", output, "Output file (default: stdout)");
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs_flag,
                 "Worker threads (default: 1 or VACSHIFT_JOBS)");

  PlatesInput plates;
  CLI::App* plates_cmd =
      app.add_subcommand("plates", "Parallel-plate + LC resonator shift");
  plates_cmd->add_option("--d-nm", plates.d_nm, "Plate spacing d [nm]")
      ->required();
  plates_cmd->add_option("--z0-frac", plates.z0_frac, "Dipole position z0/d")
      ->capture_default_str();
  plates_cmd->add_option("--a0-nm", plates.a0_nm, "Dipole size a0 [nm]")
      ->capture_default_str();
  plates_cmd->add_option("--q-e", plates.q_e, "Charge ratio q/e")
      ->capture_default_str();
  plates_cmd
      ->add_option("--omega0-ev", plates.omega0_ev,
                   "Transition energy hbar omega0 [eV]")
      ->required();
  plates_cmd->add_option("--z-ratio", plates.z_ratio, "Impedance Z/Z_vac")
      ->required();
  plates_cmd->add_option("--omega-c-ev", plates.omega_c_ev,
                         "LC resonance hbar omega_c [eV] (default 10 omega0)");

  SphereInput sphere;
  CLI::App* sphere_cmd =
      app.add_subcommand("sphere", "Plasmonic nanosphere shift");
  sphere_cmd->add_option("--r-nm", sphere.r_nm, "Sphere radius R [nm]")
      ->required();
  sphere_cmd->add_option("--z0-nm", sphere.z0_nm, "Gap z0 [nm]")->required();
  sphere_cmd->add_option("--a0-nm", sphere.a0_nm, "Dipole size a0 [nm]")
      ->capture_default_str();
  sphere_cmd->add_option("--q-e", sphere.q_e, "Charge ratio q/e")
      ->capture_default_str();
  sphere_cmd
      ->add_option("--omega0-ev", sphere.omega0_ev,
                   "Transition energy hbar omega0 [eV]")
      ->required();
  sphere_cmd
      ->add_option("--omega-p-ev", sphere.omega_p_ev,
                   "Plasma energy hbar omega_P [eV]")
      ->required();
  sphere_cmd->add_option("--ell-max", sphere.ell_max,
                         "Multipole truncation (-1: all)");

  SweepInput sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Log-log sweep over plate spacing and impedance");
  sweep_cmd->add_option("--z0-frac", sweep.base.z0_frac, "Dipole position z0/d")
      ->capture_default_str();
  sweep_cmd->add_option("--a0-nm", sweep.base.a0_nm, "Dipole size a0 [nm]")
      ->capture_default_str();
  sweep_cmd->add_option("--q-e", sweep.base.q_e, "Charge ratio q/e")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--omega0-ev", sweep.base.omega0_ev,
                   "Transition energy hbar omega0 [eV]")
      ->required();
  sweep_cmd->add_option("--omega-c-ev", sweep.base.omega_c_ev,
                        "LC resonance hbar omega_c [eV] (default 10 omega0)");
  sweep_cmd->add_option("--d-min-nm", sweep.d_min_nm, "Smallest d [nm]")
      ->required();
  sweep_cmd->add_option("--d-max-nm", sweep.d_max_nm, "Largest d [nm]")
      ->required();
  sweep_cmd->add_option("--d-steps", sweep.d_steps, "Points in d")->required();
  sweep_cmd->add_option("--z-min", sweep.z_min, "Smallest Z/Z_vac")
      ->required();
  sweep_cmd->add_option("--z-max", sweep.z_max, "Largest Z/Z_vac")->required();
  sweep_cmd->add_option("--z-steps", sweep.z_steps, "Points in Z")->required();

  std::string figure_name;
  CLI::App* figure_cmd =
      app.add_subcommand("figure", "Emit the data behind a published figure");
  figure_cmd
      ->add_option("name", figure_name, "Figure identifier")
      ->required()
      ->check(CLI::IsMember({"fig2a", "fig2b", "fig2c", "fig3b", "sm_g1",
                             "sm_f1", "sm_gm", "sm_fm", "sm_vim", "sm_FA"}));

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "Check the analytic anchor constants");
  for (CLI::App* sub :
       {plates_cmd, sphere_cmd, sweep_cmd, figure_cmd, selftest_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const OutFormat format =
      format_name == "jsonl" ? OutFormat::JsonLines : OutFormat::Csv;
  const int jobs = resolve_jobs(jobs_flag);

  try {
    if (plates_cmd->parsed()) return cmd_plates(plates, output, format);
    if (sphere_cmd->parsed()) return cmd_sphere(sphere, output, format);
    if (sweep_cmd->parsed()) {
      if (sweep.d_steps < 1 || sweep.z_steps < 1 || sweep.d_min_nm <= 0.0 ||
          sweep.z_min <= 0.0 || sweep.d_max_nm < sweep.d_min_nm ||
          sweep.z_max < sweep.z_min) {
        std::cerr << "error: invalid sweep ranges\n";
        return 1;
      }
      return cmd_sweep(sweep, output, format, jobs);
    }
    if (figure_cmd->parsed()) return cmd_figure(figure_name, output, format,
                                                jobs);
    return cmd_selftest(output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vacshift
