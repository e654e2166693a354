// zp-lab: batch experiments on finite sections of the Kalton-Peck spaces.
//
// Exit status: 0 when every asserted invariant in the run passed, 1 when an
// invariant failed, 2 on usage or parse errors.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zplab/biorth.hpp"
#include "zplab/blocks.hpp"
#include "zplab/centralizer.hpp"
#include "zplab/io.hpp"
#include "zplab/seq.hpp"

namespace {

using namespace zplab;

struct CommonOpts {
  double p = 2.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ZP_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("ZP_LAB_SEED", "not an unsigned integer");
    }
  }
  return 0;
}

void emit(const CommonOpts& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(opts.out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << payload;
  }
}

std::string record(const std::string& input_json, const std::string& value_json) {
  return "{\"input\":" + input_json + ",\"value\":" + value_json + "}";
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::size_t> parse_count_grid(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_grid(text)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

std::string validation_to_json(const ValidationReport& report) {
  std::ostringstream out;
  out << "{\"pass\":" << (report.pass ? "true" : "false")
      << ",\"same_index_ok\":" << (report.same_index_ok ? "true" : "false")
      << ",\"cross_ok\":" << (report.cross_ok ? "true" : "false")
      << ",\"norms_ok\":" << (report.norms_ok ? "true" : "false")
      << ",\"families\":[";
  bool first = true;
  for (const auto& m : report.per_family) {
    if (!first) out << ",";
    first = false;
    out << "{\"same_index_min\":" << format_double(m.same_index_min)
        << ",\"cross_max\":" << format_double(m.cross_max)
        << ",\"element_norm_error\":" << format_double(m.worst_element_norm_error)
        << ",\"dual_norm_excess\":" << format_double(m.worst_dual_norm_excess)
        << "}";
  }
  out << "]}";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zp-lab: finite-dimensional experiments on Kalton-Peck twisted sums"};
  app.require_subcommand(1);

  CommonOpts opts;
  try {
    opts.seed = default_seed();
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }

  std::string vec_text, a_text, x_text, y_text;
  std::string system_path, pairs_path, span_path;
  std::string profile = "singleton", mode = "second", op = "loglift";
  std::string n_values_text = "1,2,4,8,16";
  std::string p_grid_text, n_grid_text, eps_grid_text, delta_grid_text;
  std::size_t n = 4, width = 1, dim = 8, trials = 100, budget = 1000;
  std::size_t family_count = 2, family_size = 2, family_index = 1;
  std::size_t distinguished = 1, other = 2;
  double eps = 0.1, delta = 0.1, tol = 1e-6, eta = 1.0;
  bool no_normalize = false;

  auto add_common = [&](CLI::App* cmd, bool with_p = true) {
    if (with_p) cmd->add_option("--p", opts.p, "exponent p, 1 < p < inf");
    cmd->add_option("--seed", opts.seed, "RNG seed (env ZP_LAB_SEED as fallback)");
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    cmd->add_option("--format", opts.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* c_omega = app.add_subcommand("omega", "Kalton-Peck map of a vector");
  add_common(c_omega);
  c_omega->add_option("--vec", vec_text, "sparse vector i1:v1;i2:v2;...")->required();

  CLI::App* c_qnorm = app.add_subcommand("qnorm", "Z_p quasi-norm of a pair");
  add_common(c_qnorm);
  c_qnorm->add_option("--x", x_text, "first coordinate")->required();
  c_qnorm->add_option("--y", y_text, "second coordinate")->required();

  CLI::App* c_defect = app.add_subcommand("defect", "centralizer defect of (a, x)");
  add_common(c_defect);
  c_defect->add_option("--a", a_text, "multiplier")->required();
  c_defect->add_option("--vec", vec_text, "vector x")->required();

  CLI::App* c_cconst =
      app.add_subcommand("cconst", "empirical centralizer-constant lower estimate");
  add_common(c_cconst);
  c_cconst->add_option("--dim", dim, "coordinate count");
  c_cconst->add_option("--trials", trials, "random trials");

  CLI::App* c_loglift =
      app.add_subcommand("loglift", "log-divergence of disjoint blocks");
  add_common(c_loglift);
  c_loglift->add_option("--n", n, "block count");
  c_loglift->add_option("--width", width, "block width");
  c_loglift->add_option("--profile", profile, "flat|geometric|singleton");
  c_loglift->add_flag("--no-normalize", no_normalize, "skip l_p normalization");
  c_loglift->add_option("--eta", eta, "seminormalization floor for the bound check");

  CLI::App* c_psp = app.add_subcommand("psp", "flatten pairs to first-coordinate blocks");
  add_common(c_psp);
  c_psp->add_option("--pairs", pairs_path, "JSON array of {x, y}")->required();

  CLI::App* c_growth = app.add_subcommand("growth", "block-sum growth table");
  add_common(c_growth);
  c_growth->add_option("--n-values", n_values_text, "comma list of n");
  c_growth->add_option("--mode", mode, "first (e_j,0) | second (0,e_j)")
      ->check(CLI::IsMember({"first", "second"}));
  c_growth->add_option("--pairs", pairs_path, "explicit pairs JSON (overrides --mode)");

  CLI::App* c_validate = app.add_subcommand("validate", "check biorthogonal conditions");
  add_common(c_validate, false);
  c_validate->add_option("--system", system_path, "system JSON path")->required();

  CLI::App* c_lift = app.add_subcommand("lift", "lift an ellp system to Z_p");
  add_common(c_lift, false);
  c_lift->add_option("--system", system_path, "system JSON path")->required();

  CLI::App* c_distort = app.add_subcommand("distort", "distortion ratio lower bound");
  add_common(c_distort, false);
  c_distort->add_option("--system", system_path, "system JSON path")->required();
  c_distort->add_option("--eps", eps, "renorming epsilon");
  c_distort->add_option("--index", distinguished, "distinguished family (1-based)");
  c_distort->add_option("--other", other, "comparison family (1-based)");

  CLI::App* c_probe = app.add_subcommand("probe", "finite inevitability diagnostic");
  add_common(c_probe);
  c_probe->add_option("--system", system_path, "system JSON path")->required();
  c_probe->add_option("--index", family_index, "family index (1-based)");
  c_probe->add_option("--span", span_path, "JSON array of basis vectors")->required();
  c_probe->add_option("--budget", budget, "objective evaluation budget");
  c_probe->add_option("--tol", tol, "search tolerance");

  CLI::App* c_synth = app.add_subcommand("synth", "generate a synthetic system");
  add_common(c_synth);
  c_synth->add_option("--delta", delta, "biorthogonality constant");
  c_synth->add_option("--families", family_count, "family count");
  c_synth->add_option("--size", family_size, "elements per family");
  c_synth->add_option("--width", width, "support width per element");

  CLI::App* c_sweep = app.add_subcommand("sweep", "grid sweep over an operation");
  add_common(c_sweep, false);
  c_sweep->add_option("--op", op, "loglift|bound")
      ->check(CLI::IsMember({"loglift", "bound"}));
  c_sweep->add_option("--p-grid", p_grid_text, "comma list of p");
  c_sweep->add_option("--n-grid", n_grid_text, "comma list of n");
  c_sweep->add_option("--eps-grid", eps_grid_text, "comma list of eps");
  c_sweep->add_option("--delta-grid", delta_grid_text, "comma list of delta");
  c_sweep->add_option("--profile", profile, "block profile for loglift");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  int status = 0;
  try {
    PExponent p(opts.p);

    if (*c_omega) {
      SeqVector x = parse_seq(vec_text);
      emit(opts, record("{\"p\":" + format_double(opts.p) + ",\"vec\":" +
                            seq_to_json(x) + "}",
                        seq_to_json(omega_p(x, p))));
    } else if (*c_qnorm) {
      TwistedVector z{parse_seq(x_text), parse_seq(y_text), p};
      emit(opts, record("{\"p\":" + format_double(opts.p) + ",\"x\":" +
                            seq_to_json(z.x) + ",\"y\":" + seq_to_json(z.y) + "}",
                        format_double(quasi_norm(z))));
    } else if (*c_defect) {
      SeqVector a = parse_seq(a_text), x = parse_seq(vec_text);
      emit(opts, record("{\"p\":" + format_double(opts.p) + ",\"a\":" +
                            seq_to_json(a) + ",\"x\":" + seq_to_json(x) + "}",
                        format_double(centralizer_defect(a, x, p))));
    } else if (*c_cconst) {
      double c = estimate_centralizer_constant(p, dim, trials, opts.seed);
      emit(opts, record("{\"p\":" + format_double(opts.p) +
                            ",\"dim\":" + std::to_string(dim) +
                            ",\"trials\":" + std::to_string(trials) +
                            ",\"seed\":" + std::to_string(opts.seed) + "}",
                        format_double(c)));
    } else if (*c_loglift) {
      BlockSequence blocks =
          make_disjoint_blocks(n, width, parse_profile(profile), p, !no_normalize);
      BoundCheck check = log_lift_lower_bound_check(blocks, eta);
      emit(opts,
           record("{\"p\":" + format_double(opts.p) + ",\"n\":" + std::to_string(n) +
                      ",\"width\":" + std::to_string(width) + ",\"profile\":\"" +
                      profile + "\",\"eta\":" + format_double(eta) + "}",
                  "{\"loglift\":" + format_double(check.value) +
                      ",\"lower_bound\":" + format_double(check.bound) +
                      ",\"holds\":" + (check.holds ? "true" : "false") + "}"));
      if (!check.holds) status = 1;
    } else if (*c_psp) {
      auto pairs = pairs_from_json(read_file(pairs_path), p);
      auto flattened = psp_flatten(pairs);
      std::ostringstream out;
      out << "[";
      for (std::size_t j = 0; j < flattened.size(); ++j) {
        if (j) out << ",";
        out << "{\"y\":" << seq_to_json(flattened[j].y)
            << ",\"err\":" << format_double(flattened[j].err) << "}";
      }
      out << "]";
      emit(opts, record("{\"p\":" + format_double(opts.p) + ",\"pairs\":\"" +
                            pairs_path + "\"}",
                        out.str()));
    } else if (*c_growth) {
      std::vector<std::size_t> n_values = parse_count_grid(n_values_text);
      std::vector<TwistedVector> pairs;
      if (!pairs_path.empty()) {
        pairs = pairs_from_json(read_file(pairs_path), p);
      } else {
        std::size_t count = 0;
        for (std::size_t m : n_values) count = std::max(count, m);
        for (std::size_t j = 1; j <= count; ++j) {
          SeqVector e = SeqVector::unit(static_cast<std::int64_t>(j));
          if (mode == "first")
            pairs.push_back({e, {}, p});
          else
            pairs.push_back({{}, e, p});
        }
      }
      GrowthTable table = block_sum_growth(pairs, n_values);
      emit(opts, opts.format == "csv" ? growth_table_to_csv(table)
                                      : growth_table_to_json(table));
    } else if (*c_validate) {
      ValidationReport report = validate_biorth(load_system(system_path));
      emit(opts, validation_to_json(report));
      if (!report.pass) status = 1;
    } else if (*c_lift) {
      emit(opts, system_to_json(lift_system(load_system(system_path))));
    } else if (*c_distort) {
      if (distinguished < 1 || other < 1)
        throw std::invalid_argument("family indices are 1-based");
      BiorthSystem sys = load_system(system_path);
      DistortionResult r =
          distortion_lower_bound(sys, eps, distinguished - 1, other - 1);
      emit(opts,
           record("{\"system\":\"" + system_path + "\",\"eps\":" +
                      format_double(eps) + ",\"delta\":" + format_double(sys.delta) +
                      "}",
                  "{\"ratio\":" + format_double(r.ratio) + ",\"bound\":" +
                      format_double(r.bound) + ",\"witness\":[" +
                      std::to_string(r.witness_numerator + 1) + "," +
                      std::to_string(r.witness_denominator + 1) + "],\"holds\":" +
                      (r.holds ? "true" : "false") + "}"));
      if (!r.holds) status = 1;
    } else if (*c_probe) {
      BiorthSystem sys = load_system(system_path);
      if (sys.tag != SpaceTag::Ellp)
        throw std::invalid_argument("probe: only ellp systems are supported");
      if (family_index < 1 || family_index > sys.families.size())
        throw std::invalid_argument("probe: family index out of range");
      std::vector<SeqVector> family;
      for (const auto& z : sys.families[family_index - 1].A) family.push_back(z.x);
      InevitabilityProbe probe{seq_list_from_json(read_file(span_path)), tol,
                               budget, opts.seed};
      double d = inevitability_proxy(family, probe, sys.p);
      emit(opts, record("{\"system\":\"" + system_path + "\",\"index\":" +
                            std::to_string(family_index) + ",\"budget\":" +
                            std::to_string(budget) + ",\"seed\":" +
                            std::to_string(opts.seed) + "}",
                        format_double(d)));
    } else if (*c_synth) {
      BiorthSystem sys =
          synth_system(p, delta, family_count, family_size, width, opts.seed);
      emit(opts, system_to_json(sys));
    } else if (*c_sweep) {
      std::ostringstream csv, json;
      bool first = true;
      if (op == "loglift") {
        std::vector<double> ps =
            p_grid_text.empty() ? std::vector<double>{2.0} : parse_grid(p_grid_text);
        std::vector<std::size_t> ns = n_grid_text.empty()
                                          ? std::vector<std::size_t>{2, 4, 8, 16}
                                          : parse_count_grid(n_grid_text);
        if (ps.empty() || ns.empty())
          throw std::invalid_argument("sweep: empty grid");
        csv << "p,n,value,reference\n";
        json << "[";
        for (double pv : ps) {
          PExponent pe(pv);
          for (std::size_t nv : ns) {
            BlockSequence blocks =
                make_disjoint_blocks(nv, width, parse_profile(profile), pe, true);
            double value = log_lift(blocks);
            double reference = std::pow(static_cast<double>(nv), 1.0 / pv) *
                               std::log(static_cast<double>(nv)) / pv;
            csv << format_double(pv) << "," << nv << "," << format_double(value)
                << "," << format_double(reference) << "\n";
            if (!first) json << ",";
            first = false;
            json << "{\"p\":" << format_double(pv) << ",\"n\":" << nv
                 << ",\"value\":" << format_double(value)
                 << ",\"reference\":" << format_double(reference) << "}";
          }
        }
        json << "]";
      } else {  // op == "bound"
        std::vector<double> es = eps_grid_text.empty()
                                     ? std::vector<double>{0.01, 0.05, 0.1, 0.5}
                                     : parse_grid(eps_grid_text);
        std::vector<double> ds = delta_grid_text.empty()
                                     ? std::vector<double>{0.05, 0.1, 0.2, 0.4}
                                     : parse_grid(delta_grid_text);
        if (es.empty() || ds.empty())
          throw std::invalid_argument("sweep: empty grid");
        csv << "eps,delta,bound\n";
        json << "[";
        for (double e : es)
          for (double d : ds) {
            double bound = (1.0 + e - d) / (e + d);
            csv << format_double(e) << "," << format_double(d) << ","
                << format_double(bound) << "\n";
            if (!first) json << ",";
            first = false;
            json << "{\"eps\":" << format_double(e)
                 << ",\"delta\":" << format_double(d)
                 << ",\"bound\":" << format_double(bound) << "}";
          }
        json << "]";
      }
      emit(opts, opts.format == "csv" ? csv.str() : json.str());
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  // Timing goes to stderr only so report files stay byte-reproducible.
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return status;
}
