// tfseq: Gabor/Wilson analysis, exponent-sequence calculus, and Beurling-Bjorck
// space classification on uniform grids.
//
// Subcommands: dual, wilson-build, analyze, synthesize, seqrep, sharp, nu, lemmas,
// classify, decay, corpus. Exit codes: 0 success, 2 validation error, 3 numeric
// non-convergence, 4 resource cap.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfseq/io.hpp"

using namespace tfseq;

namespace {

struct GridOptions {
  double T = 16.0;
  std::size_t N = 2048;
};

struct LatticeOptions {
  double a = 0.5;
  double b = 1.0;
  int K = 0;  // 0: choose from the grid
  int M = 0;
};

struct OutputOptions {
  std::string out;  // empty: stdout
  std::string format = "json";
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--grid-T", g.T, "nominal half width of the grid");
  cmd->add_option("--grid-N", g.N, "number of grid points (power of two)");
}

void add_lattice_options(CLI::App* cmd, LatticeOptions& l) {
  cmd->add_option("--a", l.a, "time lattice step");
  cmd->add_option("--b", l.b, "frequency lattice step");
  cmd->add_option("--K", l.K, "time truncation |k| <= K (0: automatic)");
  cmd->add_option("--M", l.M, "frequency truncation |n| <= M (0: automatic)");
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "output path or prefix (default: stdout)");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

LatticeSpec resolve_lattice(const LatticeOptions& lo, const GridSpec& grid) {
  LatticeSpec lat{lo.a, lo.b, lo.K, lo.M};
  if (lat.K == 0) lat.K = std::max(1, static_cast<int>(std::floor(0.6 * grid.half_width / lat.a)));
  if (lat.M == 0) lat.M = std::max(1, static_cast<int>(std::floor(0.6 * grid.nyquist() / lat.b)));
  return lat;
}

json grid_config(const GridOptions& go, const GridSpec& grid) {
  return json{{"T_nominal", go.T}, {"T", grid.half_width}, {"N", grid.size}};
}

json lattice_config(const LatticeSpec& lat) { return lattice_to_json(lat); }

void emit(const OutputOptions& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
}

SampledSignal load_signal(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open signal file: " + path);
    return signal_from_csv(in);
  }
  return signal_from_json(read_json_file(path));
}

void save_signal(const SampledSignal& f, const std::string& path, const std::string& format,
                 const json& config) {
  if (format == "csv") {
    std::ostringstream os;
    os << "# config: " << config.dump() << "\n" << signal_to_csv(f);
    write_text_file(path, os.str());
  } else {
    json j = signal_to_json(f);
    j["config"] = config;
    write_text_file(path, j.dump());
  }
}

// window source: "gaussian", "box", or a signal file path
SampledSignal load_window(const std::string& spec, const GridSpec& grid) {
  if (spec == "gaussian") return gaussian(grid);
  if (spec == "box") return box_window(grid);
  SampledSignal w = load_signal(spec);
  if (w.grid != grid)
    throw validation_error("window file grid does not match the requested grid");
  return w;
}

WeightFunction parse_weight(const std::string& text) {
  return weight_from_json(json::parse(text));
}

std::vector<double> parse_probes(const std::string& text) {
  // comma-separated values, or "lo:hi:count" geometric
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::istringstream is(text);
    std::string lo_s, hi_s, n_s;
    std::getline(is, lo_s, ':');
    std::getline(is, hi_s, ':');
    std::getline(is, n_s, ':');
    const double lo = std::stod(lo_s), hi = std::stod(hi_s);
    const int n = std::stoi(n_s);
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw validation_error("bad probe range");
    for (int i = 0; i < n; ++i)
      out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
  }
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<SampledSignal> hermite_corpus(const GridSpec& grid, int m_max) {
  std::vector<SampledSignal> corpus;
  for (int m = 0; m <= m_max; ++m) corpus.push_back(hermite(m, grid));
  return corpus;
}

// ---------------------------------------------------------------------------

int cmd_corpus(const GridOptions& go, int m_max, const OutputOptions& oo) {
  const GridSpec grid = GridSpec::make(go.T, go.N);
  const json config{{"command", "corpus"}, {"grid", grid_config(go, grid)}, {"m_max", m_max}};
  const std::string dir = oo.out.empty() ? "." : oo.out;
  std::filesystem::create_directories(dir);
  for (int m = 0; m <= m_max; ++m) {
    char name[64];
    std::snprintf(name, sizeof(name), "hermite_%02d.%s", m, oo.format.c_str());
    save_signal(hermite(m, grid), dir + "/" + name, oo.format, config);
  }
  std::cout << "wrote " << (m_max + 1) << " corpus files to " << dir << "\n";
  return 0;
}

int cmd_dual(const GridOptions& go, const LatticeOptions& lo, const std::string& window_spec,
             double tol, int max_iter, int wr_box, int corpus_m, const OutputOptions& oo) {
  const GridSpec grid = GridSpec::aligned(go.T, go.N, {lo.a, 1.0 / lo.b});
  const LatticeSpec lat = resolve_lattice(lo, grid);
  const SampledSignal psi = load_window(window_spec, grid);
  const auto info = canonical_dual_info(psi, lat, tol, max_iter);

  const json config{{"command", "dual"},          {"grid", grid_config(go, grid)},
                    {"lattice", lattice_config(lat)}, {"window", window_spec},
                    {"tol", tol},                  {"max_iter", max_iter},
                    {"wr_box", wr_box},            {"corpus_m", corpus_m}};

  const double wr = wexler_raz_defect(psi, info.window, lat, wr_box);
  const auto corpus = hermite_corpus(grid, corpus_m);
  const double dual = duality_defect(psi, info.window, lat, corpus);
  // the same defect probed on signals the truncated system can actually represent
  std::vector<SampledSignal> representable;
  for (const auto& f : corpus) representable.push_back(frame_operator(psi, lat, f));
  const double dual_repr = duality_defect(psi, info.window, lat, representable);

  const std::string prefix = oo.out.empty() ? "dual" : oo.out;
  save_signal(info.window, prefix + "_window." + oo.format, oo.format, config);

  json report{{"config", config},
              {"wexler_raz_defect", wr},
              {"duality_defect", dual},
              {"duality_defect_representable", dual_repr},
              {"tol", tol},
              {"box", wr_box},
              {"lattice", lattice_config(lat)},
              {"grid", grid_to_json(grid)},
              {"cg_iterations", info.cg_iterations},
              {"cg_residual", info.residual},
              {"ritz", json::array({info.ritz_min, info.ritz_max})}};
  write_text_file(prefix + "_report.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_wilson_build(const GridOptions& go, int K, int M, double tol, int gram_K, int gram_M,
                     const OutputOptions& oo) {
  const GridSpec grid = GridSpec::aligned(go.T, go.N, {0.5, 1.0});
  const SampledSignal w = build_wilson_window(grid, tol, K, M);

  const json config{{"command", "wilson-build"}, {"grid", grid_config(go, grid)},
                    {"K", K},                    {"M", M},
                    {"tol", tol},                {"gram_K", gram_K},
                    {"gram_M", gram_M}};

  // Gram deviation over the requested box
  double gram_dev = 0.0;
  {
    std::vector<SampledSignal> atoms;
    for (int k = -gram_K; k <= gram_K; ++k)
      for (int n = 0; n <= gram_M; ++n) atoms.push_back(wilson_atom(w, k, n));
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double expect = (i == j) ? 1.0 : 0.0;
        gram_dev = std::max(gram_dev, std::abs(inner(atoms[i], atoms[j]) - expect));
      }
  }
  // tightness at frame bound 2 and Parseval over the Hermite corpus
  double tight_defect = 0.0, parseval_worst = 0.0;
  {
    const LatticeSpec lat{0.5, 1.0, K, M};
    for (const auto& f : hermite_corpus(grid, 9)) {
      const auto sf = frame_operator(w, lat, f);
      double num = 0.0;
      for (std::size_t j = 0; j < f.values.size(); ++j)
        num += std::norm(sf.values[j] - 2.0 * f.values[j]);
      tight_defect = std::max(tight_defect, std::sqrt(num * grid.step()) / l2_norm(f));

      const auto c = wilson_analyze(w, f, K, M);
      double sum = 0.0;
      for (const auto& v : c.entries) sum += std::norm(v);
      parseval_worst =
          std::max(parseval_worst, std::abs(std::sqrt(sum) - l2_norm(f)) / l2_norm(f));
    }
  }
  double boundary = 0.0;
  for (std::size_t j = 0; j < grid.size; ++j)
    if (std::abs(grid.point(j)) > grid.half_width * 0.95)
      boundary = std::max(boundary, std::abs(w.values[j]));

  const std::string prefix = oo.out.empty() ? "wilson" : oo.out;
  save_signal(w, prefix + "_window." + oo.format, oo.format, config);
  json report{{"config", config},
              {"gram_max_deviation", gram_dev},
              {"tightness_defect", tight_defect},
              {"parseval_worst", parseval_worst},
              {"boundary_magnitude", boundary}};
  write_text_file(prefix + "_report.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_analyze(const std::string& basis, const LatticeOptions& lo,
                const std::string& window_spec, const std::string& signal_path,
                const OutputOptions& oo) {
  const SampledSignal f = load_signal(signal_path);
  const GridOptions actual{f.grid.half_width, f.grid.size};
  json config{{"command", "analyze"}, {"basis", basis}, {"grid", grid_config(actual, f.grid)},
              {"signal", signal_path}, {"window", window_spec}};
  std::string text;
  if (basis == "gabor") {
    const LatticeSpec lat = resolve_lattice(lo, f.grid);
    config["lattice"] = lattice_config(lat);
    const auto c = analyze(load_window(window_spec, f.grid), lat, f);
    if (oo.format == "csv")
      text = coeffs_to_csv(c, config);
    else {
      json j = gabor_coeffs_to_json(c);
      j["config"] = config;
      text = j.dump();
    }
  } else if (basis == "wilson") {
    const int K = lo.K > 0 ? lo.K : 16;
    const int M = lo.M > 0 ? lo.M : 12;
    config["K"] = K;
    config["M"] = M;
    const auto c = wilson_analyze(load_window(window_spec, f.grid), f, K, M);
    if (oo.format == "csv")
      text = coeffs_to_csv(c, config);
    else {
      json j = wilson_coeffs_to_json(c);
      j["config"] = config;
      text = j.dump();
    }
  } else {
    throw validation_error("analyze: basis must be gabor or wilson");
  }
  emit(oo, text + "\n");
  return 0;
}

int cmd_synthesize(const std::string& basis, const GridOptions& go,
                   const std::string& window_spec, const std::string& coeffs_path,
                   const OutputOptions& oo) {
  const json cj = read_json_file(coeffs_path);
  const GridSpec grid = [&] {
    if (basis == "gabor") {
      const auto lat = lattice_from_json(cj.at("lattice"));
      return GridSpec::aligned(go.T, go.N, {lat.a});
    }
    return GridSpec::aligned(go.T, go.N, {0.5, 1.0});
  }();
  const SampledSignal w = load_window(window_spec, grid);
  json config{{"command", "synthesize"},
              {"basis", basis},
              {"grid", json{{"T", grid.half_width}, {"N", grid.size}}},
              {"coeffs", coeffs_path},
              {"window", window_spec}};
  SampledSignal f;
  if (basis == "gabor") {
    const auto c = gabor_coeffs_from_json(cj);
    f = synthesize(w, c.lattice, c);
  } else if (basis == "wilson") {
    f = wilson_synthesize(w, wilson_coeffs_from_json(cj));
  } else {
    throw validation_error("synthesize: basis must be gabor or wilson");
  }
  const std::string path = oo.out.empty() ? ("synthesized." + oo.format) : oo.out;
  save_signal(f, path, oo.format, config);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int cmd_seqrep(const std::string& window_spec, const std::string& signal_path, int K, int M,
               const OutputOptions& oo) {
  const SampledSignal f = load_signal(signal_path);
  const SampledSignal w = load_window(window_spec, f.grid);
  const json config{{"command", "seqrep"},
                    {"grid", json{{"T", f.grid.half_width}, {"N", f.grid.size}}},
                    {"K", K},
                    {"M", M},
                    {"signal", signal_path},
                    {"window", window_spec}};
  const auto d = sequence_rep(w, f, K, M);
  const auto back = sequence_rep_inverse(w, d);
  double num = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) num += std::norm(back.values[j] - f.values[j]);
  const double rt = std::sqrt(num * f.grid.step()) / l2_norm(f);

  const std::string prefix = oo.out.empty() ? "seqrep" : oo.out;
  if (oo.format == "csv") {
    write_text_file(prefix + "_coeffs.csv", coeffs_to_csv(d, config));
  } else {
    json j = grid2d_coeffs_to_json(d);
    j["config"] = config;
    write_text_file(prefix + "_coeffs.json", j.dump());
  }
  json report{{"config", config}, {"round_trip_rel_error", rt}};
  write_text_file(prefix + "_report.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

int cmd_sharp(const std::string& left, const std::string& right, int count,
              const OutputOptions& oo) {
  const auto a = sequence_from_json(json::parse(left));
  const auto b = sequence_from_json(json::parse(right));
  const auto s = ExponentSequence::sharp(a, b);
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# config: " << json{{"command", "sharp"}, {"count", count}}.dump() << "\n";
  os << "n,value\n";
  for (int n = 0; n < count; ++n) os << n << "," << s.term(static_cast<std::size_t>(n)) << "\n";
  emit(oo, os.str());
  return 0;
}

int cmd_nu(const std::string& seq, const std::string& probes_text, const OutputOptions& oo) {
  const auto a = sequence_from_json(json::parse(seq));
  const auto probes = parse_probes(probes_text);
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# config: " << json{{"command", "nu"}}.dump() << "\n";
  os << "s,nu\n";
  for (double s : probes) os << s << "," << a.counting(s) << "\n";
  emit(oo, os.str());
  return 0;
}

int cmd_lemmas(const std::string& left, const std::string& right, const std::string& probes_text,
               const OutputOptions& oo) {
  const auto w = parse_weight(left);
  const auto h = parse_weight(right);
  const auto probes = parse_probes(probes_text);
  const auto fund = check_fundamental(ExponentSequence::from_weight(w),
                                      ExponentSequence::from_weight(h), probes);
  const auto expl = check_explicit_lemma(w, h, probes);
  json report{{"config", json{{"command", "lemmas"}, {"omega", json::parse(left)},
                              {"eta", json::parse(right)}}},
              {"fundamental_holds", fund},
              {"explicit_equivalence",
               json{{"holds", expl.holds},
                    {"L", expl.L},
                    {"probe_range", json::array({expl.probe_lo, expl.probe_hi})},
                    {"exact_counts", expl.exact}}}};
  emit(oo, report.dump(2) + "\n");
  return 0;
}

int cmd_classify(const std::string& omega1, const std::string& eta1, const std::string& omega2,
                 const std::string& eta2, const std::string& case_name, const std::string& mode,
                 const OutputOptions& oo) {
  const SpaceCase cs = (case_name == "roumieu") ? SpaceCase::roumieu : SpaceCase::beurling;
  const auto sp1 = SpaceDescriptor::make(parse_weight(omega1), parse_weight(eta1), cs);
  const auto sp2 = SpaceDescriptor::make(parse_weight(omega2), parse_weight(eta2), cs);
  const auto zprobes = default_isomorphism_log_probes(sp1, sp2);
  const auto iso = decide_isomorphic_log(sp1, sp2, zprobes, mode == "numeric");
  std::vector<double> probes;
  for (double t = 1.0; t <= 1e7; t *= 1.8) probes.push_back(t);
  const auto incl = decide_inclusion(sp1, sp2, probes);

  json report{
      {"config",
       json{{"command", "classify"},
            {"case", case_name},
            {"mode", mode},
            {"space1", json{{"omega", json::parse(omega1)}, {"eta", json::parse(eta1)}}},
            {"space2", json{{"omega", json::parse(omega2)}, {"eta", json::parse(eta2)}}}}},
      {"isomorphism", verdict_to_json(iso)},
      {"inclusion", verdict_to_json(incl)}};
  if (oo.format == "json") {
    emit(oo, report.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "relation      verdict          method         witness\n";
    os << "isomorphism   " << std::setw(16) << std::left << relation_name(iso.rel)
       << (iso.method == decision_method::closed_form ? " closed_form   " : " numeric_probe ")
       << (iso.witness_L ? ("L=" + std::to_string(*iso.witness_L)) : std::string("-")) << "\n";
    os << "inclusion     " << std::setw(16) << std::left << relation_name(incl.rel)
       << (incl.method == decision_method::closed_form ? " closed_form   " : " numeric_probe ")
       << (incl.witness_L ? ("L=" + std::to_string(*incl.witness_L)) : std::string("-")) << "\n";
    emit(oo, os.str());
  }
  return 0;
}

int cmd_decay(const std::string& coeffs_path, const std::string& omega, const std::string& eta,
              const std::string& case_name, const OutputOptions& oo) {
  const SpaceCase cs = (case_name == "roumieu") ? SpaceCase::roumieu : SpaceCase::beurling;
  const auto sp = SpaceDescriptor::make(parse_weight(omega), parse_weight(eta), cs);
  const json cj = read_json_file(coeffs_path);
  EnvelopeFit fit;
  const std::string domain = cj.value("domain", "gabor");
  if (domain == "wilson")
    fit = decay_envelope(wilson_coeffs_from_json(cj), sp);
  else
    fit = decay_envelope(gabor_coeffs_from_json(cj), sp);

  const json config{{"command", "decay"}, {"coeffs", coeffs_path}, {"case", case_name},
                    {"omega", json::parse(omega)}, {"eta", json::parse(eta)}};
  const std::string prefix = oo.out.empty() ? "decay" : oo.out;
  // plot-ready shell maxima: weight value vs log|c|
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# config: " << config.dump() << "\n";
  os << "weight,log_abs_c\n";
  for (const auto& [wgt, logc] : fit.shell_maxima) os << wgt << "," << logc << "\n";
  write_text_file(prefix + "_shells.csv", os.str());

  json report{{"config", config}, {"fit", envelope_to_json(fit)}};
  write_text_file(prefix + "_report.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor/Wilson frames and Beurling-Bjorck sequence-space toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML-style config file");

  GridOptions go;
  LatticeOptions lo;
  OutputOptions oo;
  std::string window_spec = "gaussian";
  std::string signal_path, coeffs_path, basis = "gabor";
  std::string left, right, seq, probes = "1:10000:40";
  std::string omega1, eta1, omega2, eta2, case_name = "roumieu", mode = "auto";
  double tol = 1e-10;
  double wb_tol = 1e-8;
  int max_iter = 200, wr_box = 8, corpus_m = 9, m_max = 9, count = 16;
  int K = 28, M = 14, gram_K = 12, gram_M = 24;

  auto* corpus = app.add_subcommand("corpus", "write the Hermite test corpus");
  add_grid_options(corpus, go);
  corpus->add_option("--m-max", m_max, "largest Hermite order");
  add_output_options(corpus, oo);

  auto* dual = app.add_subcommand("dual", "canonical dual window with defect reports");
  add_grid_options(dual, go);
  add_lattice_options(dual, lo);
  dual->add_option("--window", window_spec, "gaussian | box | signal file");
  dual->add_option("--tol", tol, "conjugate gradient relative residual tolerance");
  dual->add_option("--max-iter", max_iter, "conjugate gradient iteration cap");
  dual->add_option("--wr-box", wr_box, "Wexler-Raz offset box");
  dual->add_option("--corpus-m", corpus_m, "Hermite corpus order for the duality defect");
  add_output_options(dual, oo);

  auto* wb = app.add_subcommand("wilson-build", "orthonormal Wilson window with reports");
  add_grid_options(wb, go);
  wb->add_option("--K", K, "frame-operator time truncation");
  wb->add_option("--M", M, "frame-operator frequency truncation");
  wb->add_option("--tol", wb_tol, "Newton-Schulz step tolerance");
  wb->add_option("--gram-K", gram_K, "Gram check box |k| <= gram-K");
  wb->add_option("--gram-M", gram_M, "Gram check box n <= gram-M");
  add_output_options(wb, oo);

  auto* an = app.add_subcommand("analyze", "Gabor or Wilson coefficients of a signal");
  an->add_option("--basis", basis, "gabor | wilson");
  add_lattice_options(an, lo);
  an->add_option("--window", window_spec, "gaussian | box | signal file");
  an->add_option("--signal", signal_path, "input signal file")->required();
  add_output_options(an, oo);

  auto* sy = app.add_subcommand("synthesize", "signal from Gabor or Wilson coefficients");
  sy->add_option("--basis", basis, "gabor | wilson");
  add_grid_options(sy, go);
  sy->add_option("--window", window_spec, "gaussian | box | signal file");
  sy->add_option("--coeffs", coeffs_path, "coefficient file (json)")->required();
  add_output_options(sy, oo);

  auto* sr = app.add_subcommand("seqrep", "sequence-space representation and round trip");
  sr->add_option("--window", window_spec, "Wilson window file")->required();
  sr->add_option("--signal", signal_path, "input signal file")->required();
  sr->add_option("--K", K, "Wilson time truncation");
  sr->add_option("--M", M, "Wilson frequency truncation");
  add_output_options(sr, oo);

  auto* sh = app.add_subcommand("sharp", "terms of a sharp product");
  sh->add_option("--left", left, "left sequence descriptor (json)")->required();
  sh->add_option("--right", right, "right sequence descriptor (json)")->required();
  sh->add_option("--count", count, "number of terms");
  add_output_options(sh, oo);

  auto* nu = app.add_subcommand("nu", "counting function table");
  nu->add_option("--seq", seq, "sequence descriptor (json)")->required();
  nu->add_option("--probes", probes, "comma list or lo:hi:count (geometric)");
  add_output_options(nu, oo);

  auto* lm = app.add_subcommand("lemmas", "fundamental and explicit lemma certificates");
  lm->add_option("--omega", left, "weight descriptor (json)")->required();
  lm->add_option("--eta", right, "weight descriptor (json)")->required();
  lm->add_option("--probes", probes, "comma list or lo:hi:count (geometric)");
  add_output_options(lm, oo);

  auto* cl = app.add_subcommand("classify", "inclusion and isomorphism verdicts");
  cl->add_option("--omega1", omega1, "first space: omega descriptor (json)")->required();
  cl->add_option("--eta1", eta1, "first space: eta descriptor (json)")->required();
  cl->add_option("--omega2", omega2, "second space: omega descriptor (json)")->required();
  cl->add_option("--eta2", eta2, "second space: eta descriptor (json)")->required();
  cl->add_option("--case", case_name, "beurling | roumieu")
      ->check(CLI::IsMember({"beurling", "roumieu"}));
  cl->add_option("--mode", mode, "auto | numeric")->check(CLI::IsMember({"auto", "numeric"}));
  add_output_options(cl, oo);

  auto* dc = app.add_subcommand("decay", "coefficient decay envelope fit");
  dc->add_option("--coeffs", coeffs_path, "coefficient file (json)")->required();
  dc->add_option("--omega", omega1, "omega descriptor (json)")->required();
  dc->add_option("--eta", eta1, "eta descriptor (json)")->required();
  dc->add_option("--case", case_name, "beurling | roumieu");
  add_output_options(dc, oo);

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) return cmd_corpus(go, m_max, oo);
    if (dual->parsed()) return cmd_dual(go, lo, window_spec, tol, max_iter, wr_box, corpus_m, oo);
    if (wb->parsed()) return cmd_wilson_build(go, K, M, wb_tol, gram_K, gram_M, oo);
    if (an->parsed()) return cmd_analyze(basis, lo, window_spec, signal_path, oo);
    if (sy->parsed()) return cmd_synthesize(basis, go, window_spec, coeffs_path, oo);
    if (sr->parsed()) return cmd_seqrep(window_spec, signal_path, K, M, oo);
    if (sh->parsed()) return cmd_sharp(left, right, count, oo);
    if (nu->parsed()) return cmd_nu(seq, probes, oo);
    if (lm->parsed()) return cmd_lemmas(left, right, probes, oo);
    if (cl->parsed()) return cmd_classify(omega1, eta1, omega2, eta2, case_name, mode, oo);
    if (dc->parsed()) return cmd_decay(coeffs_path, omega1, eta1, case_name, oo);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const non_convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
