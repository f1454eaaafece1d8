#ifndef TFSEQ_IO_HPP
#define TFSEQ_IO_HPP

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tfseq/classify.hpp"
#include "tfseq/expseq.hpp"
#include "tfseq/gabor.hpp"
#include "tfseq/signal.hpp"
#include "tfseq/weights.hpp"
#include "tfseq/wilson.hpp"

namespace tfseq {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// weight and sequence descriptors

inline json weight_to_json(const WeightFunction& w) {
  switch (w.kind) {
    case weight_kind::power_log:
      return json{{"kind", "powerlog"}, {"mu", w.mu}, {"u", w.u}};
    case weight_kind::log_power:
      return json{{"kind", "log"}, {"u", w.u}};
    case weight_kind::tabulated: {
      json knots = json::array();
      for (const auto& [t, v] : w.knots) knots.push_back(json::array({t, v}));
      return json{{"kind", "tabulated"}, {"knots", knots}, {"slope", w.extrapolation_slope}};
    }
  }
  throw validation_error("weight_to_json: bad kind");
}

inline WeightFunction weight_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw validation_error("weight descriptor: expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "powerlog") return WeightFunction::power_log(j.at("mu").get<double>(), j.at("u").get<double>());
  if (kind == "log") return WeightFunction::log_power(j.at("u").get<double>());
  if (kind == "tabulated") {
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j.at("knots")) knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
    std::optional<double> slope;
    if (j.contains("slope")) slope = j.at("slope").get<double>();
    return WeightFunction::tabulated(std::move(knots), slope);
  }
  throw validation_error("weight descriptor: unknown kind \"" + kind + "\"");
}

// Sequence descriptors mirror the weight descriptors plus
//   {"kind":"explicit","terms":[...]}, {"kind":"sharp","left":...,"right":...},
//   {"kind":"pair","omega":...,"eta":...}.
inline ExponentSequence sequence_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw validation_error("sequence descriptor: expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit")
    return ExponentSequence::explicit_terms(j.at("terms").get<std::vector<double>>());
  if (kind == "sharp")
    return ExponentSequence::sharp(sequence_from_json(j.at("left")),
                                   sequence_from_json(j.at("right")));
  if (kind == "pair")
    return ExponentSequence::from_weight_pair(weight_from_json(j.at("omega")),
                                              weight_from_json(j.at("eta")));
  return ExponentSequence::from_weight(weight_from_json(j));
}

// ---------------------------------------------------------------------------
// signals

inline json grid_to_json(const GridSpec& g) { return json{{"T", g.half_width}, {"N", g.size}}; }

inline GridSpec grid_from_json(const json& j) {
  return GridSpec::make(j.at("T").get<double>(), j.at("N").get<std::size_t>());
}

inline json signal_to_json(const SampledSignal& f) {
  json re = json::array(), im = json::array();
  for (const auto& v : f.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"grid", grid_to_json(f.grid)}, {"re", re}, {"im", im}};
}

inline SampledSignal signal_from_json(const json& j) {
  SampledSignal f;
  f.grid = grid_from_json(j.at("grid"));
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != f.grid.size || im.size() != f.grid.size)
    throw validation_error("signal: value arrays do not match the grid size");
  f.values.resize(f.grid.size);
  for (std::size_t i = 0; i < f.grid.size; ++i)
    f.values[i] = cplx(re[i].get<double>(), im[i].get<double>());
  return f;
}

inline std::string signal_to_csv(const SampledSignal& f) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# T=" << f.grid.half_width << " N=" << f.grid.size << "\n";
  os << "x,re,im\n";
  for (std::size_t j = 0; j < f.grid.size; ++j)
    os << f.grid.point(j) << "," << f.values[j].real() << "," << f.values[j].imag() << "\n";
  return os.str();
}

inline SampledSignal signal_from_csv(std::istream& in) {
  std::string line;
  double T = 0.0;
  std::size_t N = 0;
  std::vector<cplx> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("T=", 0) == 0) T = std::stod(tok.substr(2));
        if (tok.rfind("N=", 0) == 0) N = static_cast<std::size_t>(std::stoull(tok.substr(2)));
      }
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;  // column header
    std::istringstream ls(line);
    std::string x, re, im;
    std::getline(ls, x, ',');
    std::getline(ls, re, ',');
    std::getline(ls, im, ',');
    values.emplace_back(std::stod(re), im.empty() ? 0.0 : std::stod(im));
  }
  if (N == 0 || T == 0.0) throw validation_error("signal csv: missing `# T=... N=...` header");
  if (values.size() != N) throw validation_error("signal csv: row count does not match N");
  return SampledSignal{GridSpec::make(T, N), std::move(values)};
}

// ---------------------------------------------------------------------------
// coefficient arrays; `domain` is one of "gabor", "wilson", "grid2d"

inline json lattice_to_json(const LatticeSpec& lat) {
  return json{{"a", lat.a}, {"b", lat.b}, {"K", lat.K}, {"M", lat.M}};
}

inline LatticeSpec lattice_from_json(const json& j) {
  return LatticeSpec{j.at("a").get<double>(), j.at("b").get<double>(), j.at("K").get<int>(),
                     j.at("M").get<int>()};
}

inline json gabor_coeffs_to_json(const GaborCoefficients& c) {
  json entries = json::array();
  for (int k = -c.lattice.K; k <= c.lattice.K; ++k)
    for (int n = -c.lattice.M; n <= c.lattice.M; ++n) {
      const cplx v = c.at(k, n);
      entries.push_back(json::array({k, n, v.real(), v.imag()}));
    }
  return json{{"domain", "gabor"}, {"lattice", lattice_to_json(c.lattice)}, {"entries", entries}};
}

inline GaborCoefficients gabor_coeffs_from_json(const json& j) {
  if (j.value("domain", "gabor") != "gabor")
    throw validation_error("coefficients: expected domain \"gabor\"");
  GaborCoefficients c = GaborCoefficients::zeros(lattice_from_json(j.at("lattice")));
  for (const auto& e : j.at("entries"))
    c.at(e.at(0).get<int>(), e.at(1).get<int>()) = cplx(e.at(2).get<double>(), e.at(3).get<double>());
  return c;
}

inline json wilson_coeffs_to_json(const WilsonCoefficients& c) {
  json entries = json::array();
  for (int k = -c.K; k <= c.K; ++k)
    for (int n = 0; n <= c.M; ++n) {
      const cplx v = c.at(k, n);
      entries.push_back(json::array({k, n, v.real(), v.imag()}));
    }
  return json{{"domain", "wilson"}, {"K", c.K}, {"M", c.M}, {"entries", entries}};
}

inline WilsonCoefficients wilson_coeffs_from_json(const json& j) {
  if (j.value("domain", "") != "wilson")
    throw validation_error("coefficients: expected domain \"wilson\"");
  WilsonCoefficients c = WilsonCoefficients::zeros(j.at("K").get<int>(), j.at("M").get<int>());
  for (const auto& e : j.at("entries"))
    c.at(e.at(0).get<int>(), e.at(1).get<int>()) = cplx(e.at(2).get<double>(), e.at(3).get<double>());
  return c;
}

inline json grid2d_coeffs_to_json(const GridCoefficients2D& c) {
  json entries = json::array();
  for (int k = 0; k < c.rows; ++k)
    for (int n = 0; n < c.cols; ++n) {
      const cplx v = c.at(k, n);
      entries.push_back(json::array({k, n, v.real(), v.imag()}));
    }
  return json{{"domain", "grid2d"}, {"rows", c.rows}, {"cols", c.cols}, {"entries", entries}};
}

inline GridCoefficients2D grid2d_coeffs_from_json(const json& j) {
  if (j.value("domain", "") != "grid2d")
    throw validation_error("coefficients: expected domain \"grid2d\"");
  GridCoefficients2D c = GridCoefficients2D::zeros(j.at("rows").get<int>(), j.at("cols").get<int>());
  for (const auto& e : j.at("entries"))
    c.at(e.at(0).get<int>(), e.at(1).get<int>()) = cplx(e.at(2).get<double>(), e.at(3).get<double>());
  return c;
}

template <typename Coeffs>
inline std::string coeffs_to_csv(const Coeffs& c, const json& header) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "# " << header.dump() << "\n";
  os << "k,n,re,im\n";
  const json j = [&] {
    if constexpr (std::is_same_v<Coeffs, GaborCoefficients>) return gabor_coeffs_to_json(c);
    else if constexpr (std::is_same_v<Coeffs, WilsonCoefficients>) return wilson_coeffs_to_json(c);
    else return grid2d_coeffs_to_json(c);
  }();
  for (const auto& e : j.at("entries"))
    os << e.at(0).get<int>() << "," << e.at(1).get<int>() << "," << e.at(2).get<double>() << ","
       << e.at(3).get<double>() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// reports

inline const char* relation_name(relation r) {
  switch (r) {
    case relation::isomorphic: return "isomorphic";
    case relation::not_isomorphic: return "not_isomorphic";
    case relation::included: return "included";
    case relation::not_included: return "not_included";
    case relation::equal: return "equal";
    case relation::inconclusive: return "inconclusive";
  }
  return "?";
}

inline json verdict_to_json(const ClassificationVerdict& v) {
  json j{{"relation", relation_name(v.rel)},
         {"method", v.method == decision_method::closed_form ? "closed_form" : "numeric_probe"},
         {"probe_range", json::array({v.probe_lo, v.probe_hi})}};
  json witness = json::object();
  if (v.witness_L) witness["L"] = *v.witness_L;
  if (v.witness_log_s0) witness["log_s0"] = *v.witness_log_s0;
  j["witness"] = witness;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline json envelope_to_json(const EnvelopeFit& f) {
  json j{{"r_star", std::isinf(f.r_star) ? json("inf") : json(f.r_star)},
         {"residual", f.residual},
         {"degenerate", f.degenerate},
         {"shells", f.shells}};
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open output file: " + path);
  out << text;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace tfseq

#endif
