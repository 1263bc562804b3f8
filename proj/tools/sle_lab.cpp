#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sle/batch.hpp"
#include "sle/check_suite.hpp"
#include "sle/closed_form.hpp"
#include "sle/errors.hpp"
#include "sle/estimators.hpp"
#include "sle/integral_means.hpp"
#include "sle/log_coeffs.hpp"
#include "sle/parallel.hpp"
#include "sle/phase_grid.hpp"
#include "sle/spectrum.hpp"
#include "sle/universal.hpp"
#include "sle/xy_geometry.hpp"

using json = nlohmann::json;
using sle::cplx;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kInvalid = 1, kNumerical = 2, kCheckFailed = 3 };

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  json meta = json::object();

  void add(std::vector<Cell> r) {
    if (r.size() != columns.size()) throw std::logic_error(name + ": row width mismatch");
    rows.push_back(std::move(r));
  }
};

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return fmt(*d);
  if (auto i = std::get_if<long long>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

json json_field(const Cell& c) {
  if (auto d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(fmt(*d));
  if (auto i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Output {
  std::string path;  // empty: stdout
  std::string format = "csv";
  bool no_header = false;
};

void write_table(const Table& t, const Output& o, const std::string& path) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw sle::ConfigError("cannot open output file " + path);
  }
  std::ostream& os = path.empty() ? std::cout : file;
  if (o.format == "json") {
    json j;
    j["schema"] = "sle-lab/" + t.name;
    j["version"] = kSchemaVersion;
    if (!o.no_header) j["generated"] = timestamp();
    j["columns"] = t.columns;
    j["meta"] = t.meta;
    j["rows"] = json::array();
    for (const auto& r : t.rows) {
      json row = json::object();
      for (std::size_t i = 0; i < r.size(); ++i) row[t.columns[i]] = json_field(r[i]);
      j["rows"].push_back(row);
    }
    os << j.dump(2) << '\n';
  } else {
    os << "# schema sle-lab/" << t.name << " v" << kSchemaVersion << '\n';
    if (!o.no_header) os << "# generated " << timestamp() << '\n';
    for (const auto& [k, v] : t.meta.items()) os << "# " << k << '=' << v.dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << '\n';
    }
  }
  if (!os) throw std::runtime_error("write failed");
}

// "0.3", "-0.2i", "0.3+0.2i", "1e-3-2e-1i".
cplx parse_complex(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  if (t.empty()) throw sle::ConfigError("empty complex number");
  auto num = [&](const std::string& x) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(x, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != x.size() || x.empty()) throw sle::ConfigError("bad complex number '" + s + "'");
    return v;
  };
  if (t.back() != 'i') return {num(t), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (t.empty() || t == "+") return {0.0, 1.0};
    if (t == "-") return {0.0, -1.0};
    return {0.0, num(t)};
  }
  std::string im = t.substr(split);
  double imv = im == "+" ? 1.0 : im == "-" ? -1.0 : num(im);
  return {num(t.substr(0, split)), imv};
}

std::vector<cplx> parse_points(const std::vector<std::string>& v) {
  std::vector<cplx> out;
  for (const auto& s : v) out.push_back(parse_complex(s));
  return out;
}

// Options of the selected subcommand that were not given on the command
// line take their values from the config file.
void apply_config(const std::string& path, CLI::App& app, CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw sle::ConfigError("cannot read config " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw sle::ConfigError(std::string("config: ") + e.what());
  }
  if (!cfg.is_object()) throw sle::ConfigError("config must be a JSON object");
  json flat = json::object();
  for (const auto& [k, v] : cfg.items()) {
    if (v.is_object()) {
      if (k == sub.get_name()) flat.update(v);
      continue;
    }
    flat[k] = v;
  }
  for (const auto& [k, v] : flat.items()) {
    if (k == "config") continue;
    CLI::Option* opt = sub.get_option_no_throw("--" + k);
    if (!opt) opt = app.get_option_no_throw("--" + k);
    if (!opt) throw sle::ConfigError("config: unknown key '" + k + "' for " + sub.get_name());
    if (opt->count() > 0) continue;
    auto text = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    if (v.is_array()) {
      for (const auto& e : v) opt->add_result(text(e));
    } else {
      opt->add_result(text(v));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw sle::ConfigError("config key '" + k + "': " + e.what());
    }
  }
}

struct SimFlags {
  double kappa = 2.0, horizon = 8.0, dt = 1e-3, delta = 0.1, r_max = 0.9;
  std::uint64_t seed = 1, stream = 0;
  std::size_t n = 1000;

  void add(CLI::App* c, std::size_t default_n) {
    n = default_n;
    c->add_option("--kappa", kappa, "SLE parameter")->capture_default_str();
    c->add_option("--T", horizon, "flow horizon")->capture_default_str();
    c->add_option("--dt", dt, "driver step")->capture_default_str();
    c->add_option("--seed", seed, "master seed")->capture_default_str();
    c->add_option("--stream", stream, "first stream id")->capture_default_str();
    c->add_option("--n", n, "number of samples")->capture_default_str();
    c->add_option("--delta", delta, "singularity guard")->capture_default_str();
    c->add_option("--r-max", r_max, "largest allowed |z|")->capture_default_str();
  }
  sle::SimConfig config() const {
    sle::SimConfig c;
    c.kappa = kappa;
    c.horizon = horizon;
    c.dt = dt;
    c.seed = seed;
    c.singular_delta = delta;
    c.r_max = r_max;
    c.validate();
    if (n == 0) throw sle::ConfigError("--n must be positive");
    return c;
  }
  void describe(json& meta) const {
    meta["kappa"] = kappa;
    meta["T"] = horizon;
    meta["dt"] = dt;
    meta["seed"] = seed;
    meta["first_stream"] = stream;
    meta["n"] = n;
  }
};

std::optional<double> gamma_of(double kappa, double p, double q) {
  return sle::MomentSpec::from_pq(kappa, p, q).gamma;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whole-plane SLE laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  Output out;
  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "JSON file with option values; flags override it");
  app.add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", out.path, "output file (default stdout)");
  app.add_flag("--no-header", out.no_header, "omit the timestamp line");
  app.add_option("--threads", threads, "worker count (default: SLE_LAB_THREADS or all cores)");

  std::function<Table()> run;
  std::function<int(const Table&)> status = [](const Table&) { return int(kOk); };

  // simulate
  SimFlags sim;
  std::vector<std::string> sim_z{"0.5"};
  auto* c_sim = app.add_subcommand("simulate", "dump log f(z)/z and log f'(z) per sample");
  sim.add(c_sim, 1);
  c_sim->add_option("--z", sim_z, "evaluation points, e.g. 0.3+0.2i");
  c_sim->callback([&] {
    run = [&] {
      auto cfg = sim.config();
      auto pts = parse_points(sim_z);
      auto b = sle::generate_batch(cfg, pts, sim.n, sim.stream);
      Table t{"simulate", {"stream", "z_re", "z_im", "log_f_over_z_re", "log_f_over_z_im", "logfp_re", "logfp_im"}};
      sim.describe(t.meta);
      for (std::size_t s = 0; s < b.n_samples; ++s)
        for (std::size_t j = 0; j < b.n_points(); ++j) {
          cplx a = b.ratio_at(s, j), d = b.logfp_at(s, j);
          t.add({static_cast<long long>(b.first_stream + s), pts[j].real(), pts[j].imag(), a.real(), a.imag(),
                 d.real(), d.imag()});
        }
      return t;
    };
  });

  // moments
  SimFlags mom;
  double mp = 2.0, mq = 2.0;
  std::vector<std::string> mom_z{"0.5"};
  auto* c_mom = app.add_subcommand("moments", "Monte Carlo one-point moments against the closed forms");
  mom.add(c_mom, 1000);
  c_mom->add_option("--p", mp)->capture_default_str();
  c_mom->add_option("--q", mq)->capture_default_str();
  c_mom->add_option("--z", mom_z, "evaluation points");
  c_mom->callback([&] {
    run = [&] {
      auto cfg = mom.config();
      auto pts = parse_points(mom_z);
      auto b = sle::generate_batch(cfg, pts, mom.n, mom.stream);
      auto g = gamma_of(mom.kappa, mp, mq);
      Table t{"moments", {"kind", "z_re", "z_im", "p", "q", "mc_re", "mc_im", "std_error", "closed_re", "closed_im"}};
      mom.describe(t.meta);
      t.meta["gamma"] = g ? json(*g) : json(nullptr);
      for (cplx z : pts) {
        auto one = sle::estimate_one_point(b, mp, mq, z);
        cplx c1 = g ? sle::closed_one_point(z, mom.kappa, *g) : cplx(NAN, NAN);
        t.add({std::string("one_point"), z.real(), z.imag(), mp, mq, one.value.real(), one.value.imag(),
               one.std_error, c1.real(), c1.imag()});
        auto mod = sle::estimate_moduli(b, mp, mq, z);
        cplx c2 = g ? sle::closed_two_point(z, std::conj(z), mom.kappa, *g) : cplx(NAN, NAN);
        t.add({std::string("moduli"), z.real(), z.imag(), mp, mq, mod.value.real(), mod.value.imag(), mod.std_error,
               c2.real(), c2.imag()});
      }
      return t;
    };
  });

  // two-point
  SimFlags two;
  double tp = 2.0, tq = 2.0;
  std::vector<std::string> z1s{"0.3"}, z2s{"0.3+0.3i"};
  auto* c_two = app.add_subcommand("two-point", "Monte Carlo E X(z1) conj X(z2) against the closed form");
  two.add(c_two, 1000);
  c_two->add_option("--p", tp)->capture_default_str();
  c_two->add_option("--q", tq)->capture_default_str();
  c_two->add_option("--z1", z1s, "first points");
  c_two->add_option("--z2", z2s, "second points, paired with --z1");
  c_two->callback([&] {
    run = [&] {
      auto cfg = two.config();
      auto a = parse_points(z1s), b2 = parse_points(z2s);
      if (a.size() != b2.size()) throw sle::ConfigError("--z1 and --z2 need the same length");
      std::vector<cplx> pts;
      for (cplx z : a)
        if (std::find(pts.begin(), pts.end(), z) == pts.end()) pts.push_back(z);
      for (cplx z : b2)
        if (std::find(pts.begin(), pts.end(), z) == pts.end()) pts.push_back(z);
      auto b = sle::generate_batch(cfg, pts, two.n, two.stream);
      auto g = gamma_of(two.kappa, tp, tq);
      Table t{"two-point",
              {"z1_re", "z1_im", "z2_re", "z2_im", "p", "q", "mc_re", "mc_im", "std_error", "closed_re", "closed_im"}};
      two.describe(t.meta);
      t.meta["gamma"] = g ? json(*g) : json(nullptr);
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto e = sle::estimate_two_point(b, tp, tq, a[i], b2[i]);
        cplx c = g ? sle::closed_two_point(a[i], std::conj(b2[i]), two.kappa, *g) : cplx(NAN, NAN);
        t.add({a[i].real(), a[i].imag(), b2[i].real(), b2[i].imag(), tp, tq, e.value.real(), e.value.imag(),
               e.std_error, c.real(), c.imag()});
      }
      return t;
    };
  });

  // log-coeffs
  SimFlags lc;
  double lc_r = 0.7;
  int lc_M = 256, lc_nmax = 10;
  auto* c_lc = app.add_subcommand("log-coeffs", "mean logarithmic coefficients of f");
  lc.add(c_lc, 1000);
  c_lc->add_option("--radius", lc_r)->capture_default_str();
  c_lc->add_option("--M", lc_M, "points on the circle")->capture_default_str();
  c_lc->add_option("--n-max", lc_nmax)->capture_default_str();
  c_lc->callback([&] {
    run = [&] {
      auto cfg = lc.config();
      auto pts = sle::circle_points(lc_r, lc_M);
      auto b = sle::generate_batch(cfg, pts, lc.n, lc.stream);
      auto st = sle::extract_log_coeffs(b, lc_r, lc_nmax, lc_M);
      Table t{"log-coeffs", {"n", "mean_re", "mean_im", "se_re", "se_im", "mean_sq", "se_sq", "cross_re", "cross_im",
                             "se_cross_re", "se_cross_im"}};
      lc.describe(t.meta);
      t.meta["radius"] = lc_r;
      t.meta["M"] = lc_M;
      t.meta["aliasing_bound"] = st.aliasing_bound;
      for (int n = 1; n <= lc_nmax; ++n) {
        std::size_t i = n - 1;
        bool has = i < st.cross.size();
        t.add({static_cast<long long>(n), st.mean_gamma[i].real(), st.mean_gamma[i].imag(), st.se_gamma_re[i],
               st.se_gamma_im[i], st.mean_sq[i], st.se_sq[i], has ? st.cross[i].real() : NAN,
               has ? st.cross[i].imag() : NAN, has ? st.se_cross_re[i] : NAN, has ? st.se_cross_im[i] : NAN});
      }
      return t;
    };
  });

  // means-scan
  SimFlags ms;
  double ms_p = 2.0, ms_q = 2.0;
  std::string ms_mode = "closed";
  int ms_count = 26, ms_M = 16384;
  double ms_klo = 0.5, ms_khi = 3.0;
  auto* c_ms = app.add_subcommand("means-scan", "integral means over circles and the fitted exponent");
  ms.add(c_ms, 200);
  c_ms->add_option("--p", ms_p)->capture_default_str();
  c_ms->add_option("--q", ms_q)->capture_default_str();
  c_ms->add_option("--mode", ms_mode)->check(CLI::IsMember({"closed", "mc"}))->capture_default_str();
  c_ms->add_option("--radii", ms_count, "number of radii 1 - 10^-k")->capture_default_str();
  c_ms->add_option("--k-lo", ms_klo)->capture_default_str();
  c_ms->add_option("--k-hi", ms_khi)->capture_default_str();
  c_ms->add_option("--angular-M", ms_M)->capture_default_str();
  c_ms->callback([&] {
    run = [&] {
      auto radii = sle::default_radii(ms_count, ms_klo, ms_khi);
      sle::MeansScan scan;
      Table t{"means-scan", {"radius", "integral"}};
      if (ms_mode == "closed") {
        scan = sle::integral_means_scan_closed(ms.kappa, ms_p, ms_q, radii, ms_M);
        t.meta["kappa"] = ms.kappa;
      } else {
        auto cfg = ms.config();
        auto pts = sle::means_scan_points(radii, ms_M);
        auto b = sle::generate_batch(cfg, pts, ms.n, ms.stream);
        scan = sle::integral_means_scan_mc(b, ms_p, ms_q, radii, ms_M);
        ms.describe(t.meta);
      }
      t.meta["mode"] = ms_mode;
      t.meta["p"] = ms_p;
      t.meta["q"] = ms_q;
      t.meta["beta"] = scan.beta ? json(*scan.beta) : json(nullptr);
      t.meta["tip_dominated"] = scan.tip_dominated;
      for (std::size_t i = 0; i < scan.radii.size(); ++i) t.add({scan.radii[i], scan.integrals[i]});
      return t;
    };
  });

  // spectrum
  double sk = 6.0;
  int sm = 1;
  std::vector<double> sps{0.0}, sqs{0.0};
  auto* c_sp = app.add_subcommand("spectrum", "region and integral means spectrum at (p, q)");
  c_sp->add_option("--kappa", sk)->capture_default_str();
  c_sp->add_option("--m", sm, "m-fold transform")->capture_default_str();
  c_sp->add_option("--p", sps, "p values");
  c_sp->add_option("--q", sqs, "q values, paired with --p");
  c_sp->callback([&] {
    run = [&] {
      if (!(sk > 0.0)) throw sle::ConfigError("--kappa must be positive");
      if (sps.size() != sqs.size()) throw sle::ConfigError("--p and --q need the same length");
      Table t{"spectrum", {"p", "q", "kappa", "m", "region", "beta", "adjacent"}};
      for (std::size_t i = 0; i < sps.size(); ++i) {
        auto s = sle::classify_mfold(sps[i], sqs[i], sk, sm);
        t.add({s.p, s.q, sk, static_cast<long long>(sm), std::string(sle::region_name(s.region)), s.beta,
               s.adjacent ? std::string(sle::region_name(*s.adjacent)) : std::string()});
      }
      return t;
    };
  });

  // phase-diagram
  double pk = 6.0;
  int pm = 1, pnp = 400, pnq = 400, psamples = 201;
  std::vector<double> prange, qrange;
  std::string curves_path;
  auto* c_pd = app.add_subcommand("phase-diagram", "region grid and separatrix curves");
  c_pd->add_option("--kappa", pk)->capture_default_str();
  c_pd->add_option("--m", pm)->capture_default_str();
  c_pd->add_option("--p-range", prange, "p_lo,p_hi")->expected(2)->delimiter(',');
  c_pd->add_option("--q-range", qrange, "q_lo,q_hi")->expected(2)->delimiter(',');
  c_pd->add_option("--np", pnp)->capture_default_str();
  c_pd->add_option("--nq", pnq)->capture_default_str();
  c_pd->add_option("--curves", curves_path, "also write curves and special points here");
  c_pd->add_option("--curve-samples", psamples)->capture_default_str();
  c_pd->callback([&] {
    run = [&] {
      if (!(pk > 0.0)) throw sle::ConfigError("--kappa must be positive");
      if (pm == 0) throw sle::ConfigError("--m must be nonzero");
      sle::GridSpec g = sle::default_grid(pk);
      if (!prange.empty()) g.p_lo = prange[0], g.p_hi = prange[1];
      if (!qrange.empty()) g.q_lo = qrange[0], g.q_hi = qrange[1];
      g.np = pnp;
      g.nq = pnq;
      try {
        g.validate();
      } catch (const sle::UsageError& e) {
        throw sle::ConfigError(e.what());
      }
      json meta{{"kappa", pk}, {"m", pm}, {"p_range", {g.p_lo, g.p_hi}}, {"q_range", {g.q_lo, g.q_hi}}};
      if (!curves_path.empty()) {
        Table c{"phase-curves", {"curve", "param", "p", "q"}};
        c.meta = meta;
        for (const auto& r : sle::phase_curves(pk, pm, g, psamples)) c.add({r.curve, r.param, r.p, r.q});
        write_table(c, out, curves_path);
      }
      Table t{"phase-diagram", {"p", "q", "region", "beta", "adjacent"}};
      t.meta = meta;
      for (const auto& s : sle::phase_grid(pk, pm, g))
        t.add({s.p, s.q, std::string(sle::region_name(s.region)), s.beta,
               s.adjacent ? std::string(sle::region_name(*s.adjacent)) : std::string()});
      return t;
    };
  });

  // xy-geometry
  double xk = 6.0;
  int xn = 201;
  double xspan = 40.0;
  auto* c_xy = app.add_subcommand("xy-geometry", "quartic as a hyperbola in (x, y) and its asymptotes");
  c_xy->add_option("--kappa", xk)->capture_default_str();
  c_xy->add_option("--samples", xn)->capture_default_str();
  c_xy->add_option("--y-span", xspan, "y range is [-span, span] around k/4")->capture_default_str();
  c_xy->callback([&] {
    run = [&] {
      if (!(xk > 0.0)) throw sle::ConfigError("--kappa must be positive");
      if (xn < 2) throw sle::ConfigError("--samples must be at least 2");
      auto as = sle::quartic_asymptotes(xk);
      Table t{"xy-geometry", {"curve", "y", "x", "p", "q"}};
      t.meta = {{"kappa", xk}, {"center_x", as.center_x}, {"center_y", as.center_y},
                {"linear_slope", as.slope}, {"linear_intercept", as.intercept}, {"parabola_c", as.parabola_c},
                {"lower_component_relevant", as.lower_component_relevant}};
      for (int i = 0; i < xn; ++i) {
        double y = as.center_y - xspan + 2.0 * xspan * i / (xn - 1);
        for (bool upper : {true, false}) {
          double x = sle::hyperbola_x(y, xk, upper);
          double p = NAN, q = NAN;
          if (x >= 0.0) {
            auto pq = sle::xy_inverse(x, y, xk);
            p = pq.p;
            q = pq.q;
          }
          t.add({std::string(upper ? "hyperbola_upper" : "hyperbola_lower"), y, x, p, q});
        }
        for (int s : {1, -1}) {
          double x = as.center_x + 2.0 * s * (y - as.center_y);
          t.add({std::string(s > 0 ? "asymptote_a" : "asymptote_b"), y, x, NAN, NAN});
        }
      }
      return t;
    };
  });

  // universal
  double pdag = -2.0;
  std::string table_path;
  int usamples = 101;
  double up_lo = -8.0, up_hi = 8.0;
  auto* c_un = app.add_subcommand("universal", "partition of the universal spectrum");
  c_un->add_option("--p-dagger", pdag)->capture_default_str();
  c_un->add_option("--b0-table", table_path, "CSV of p,B0 rows; default is the Kraetzer model");
  c_un->add_option("--samples", usamples)->capture_default_str();
  c_un->add_option("--p-lo", up_lo)->capture_default_str();
  c_un->add_option("--p-hi", up_hi)->capture_default_str();
  c_un->callback([&] {
    run = [&] {
      sle::B0Model model = sle::B0Model::kraetzer(pdag);
      if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in) throw sle::ConfigError("cannot read " + table_path);
        std::vector<std::pair<double, double>> rows;
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty() || line[0] == '#' || line[0] == 'p') continue;
          std::istringstream ls(line);
          double p, b;
          char comma;
          if (!(ls >> p >> comma >> b) || comma != ',') throw sle::ConfigError("bad B0 row: " + line);
          rows.emplace_back(p, b);
        }
        model = sle::B0Model::from_table(std::move(rows), pdag);
      }
      Table t{"universal", {"curve", "param", "p", "q", "B"}};
      t.meta = {{"p_dagger", pdag}, {"model", table_path.empty() ? "kraetzer" : "table"}};
      for (const auto& r : sle::universal_partition(model, usamples, up_lo, up_hi))
        t.add({r.curve, r.param, r.p, r.q, sle::universal_B(r.p, r.q, model)});
      return t;
    };
  });

  // check
  std::string suite = "all";
  auto* c_ck = app.add_subcommand("check", "residual and identity checks");
  c_ck->add_option("--suite", suite)->check(CLI::IsMember(sle::suite_names()))->capture_default_str();
  c_ck->callback([&] {
    run = [&] {
      Table t{"check", {"check", "pass", "residual", "tolerance", "order_estimate", "inputs"}};
      t.meta["suite"] = suite;
      long long failed = 0;
      for (const auto& r : sle::run_suite(suite)) {
        failed += r.pass ? 0 : 1;
        t.add({r.check, std::string(r.pass ? "true" : "false"), r.residual, r.tolerance,
               r.order ? *r.order : NAN, r.inputs.dump()});
      }
      t.meta["failed"] = failed;
      return t;
    };
    status = [](const Table& t) { return t.meta["failed"].get<long long>() == 0 ? int(kOk) : int(kCheckFailed); };
  });

  // diagnose
  SimFlags dg;
  std::string dz = "0.3";
  double dp = 2.0, dq = 2.0;
  std::vector<double> horizons{6.0, 8.0, 10.0};
  auto* c_dg = app.add_subcommand("diagnose", "stationarity of a reference moment across horizons");
  dg.add(c_dg, 2000);
  c_dg->add_option("--z", dz)->capture_default_str();
  c_dg->add_option("--p", dp)->capture_default_str();
  c_dg->add_option("--q", dq)->capture_default_str();
  c_dg->add_option("--horizons", horizons)->delimiter(',');
  c_dg->callback([&] {
    run = [&] {
      auto cfg = dg.config();
      auto rows = sle::stationarity_diagnostic(cfg, parse_complex(dz), horizons, dg.n, dp, dq);
      Table t{"diagnose", {"horizon", "estimate", "std_error"}};
      dg.describe(t.meta);
      t.meta["z"] = dz;
      for (const auto& r : rows) t.add({r.horizon, r.estimate, r.std_error});
      return t;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (!config_path.empty()) apply_config(config_path, app, *app.get_subcommands().front());
    if (threads < 0) throw sle::ConfigError("--threads must be positive");
    threads = threads > 0 ? threads : sle::worker_count_from_env(0);
    sle::set_worker_count(threads);
    Table t = run();
    write_table(t, out, out.path);
    return status(t);
  } catch (const sle::ConfigError& e) {
    std::cerr << "sle-lab: " << e.what() << '\n';
    return kInvalid;
  } catch (const sle::UsageError& e) {
    std::cerr << "sle-lab: " << e.what() << '\n';
    return kInvalid;
  } catch (const sle::DomainError& e) {
    std::cerr << "sle-lab: " << e.what() << '\n';
    return kInvalid;
  } catch (const sle::SingularityError& e) {
    std::cerr << "sle-lab: " << e.what() << " at t=" << e.time() << '\n';
    return kNumerical;
  } catch (const std::overflow_error& e) {
    std::cerr << "sle-lab: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "sle-lab: " << e.what() << '\n';
    return kNumerical;
  }
}
