#pragma once

// Analysis report assembly and rendering. One schema (report_version 1) is
// shared by the text, JSON and CSV renderers; machine-readable output is
// byte-stable for a fixed (input, seed, version).

#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "gbs/analysis.hpp"
#include "gbs/corpus.hpp"
#include "gbs/numeric.hpp"

#ifndef GBSDETECT_VERSION
#define GBSDETECT_VERSION "0.0.0"
#endif

namespace gbs {

struct AnalyzeOptions {
  bool verify = false;     // eigenbasis + protocol residuals
  bool search = false;     // feasibility optimizer
  int restarts = 64;
  int iters = 2000;
  std::uint64_t seed = 0;
  double tol = 1e-8;       // feasibility success threshold
  bool assume_small_sets = true;
};

struct NumericSection {
  std::string witness_kind;  // "detector-eigenbasis" or "uniform-pair-state"
  std::optional<McsId> detector;
  std::optional<double> eigenbasis_residual;
  std::optional<double> protocol_residual;
  std::optional<FeasibilityReport> feasibility;
};

struct AnalysisReport {
  int report_version = 1;
  std::string tool_version = GBSDETECT_VERSION;
  int d = 0;
  std::vector<Gpm> input;
  std::set<Gpm> delta;
  std::set<Gpm> discriminant;
  DetectorSet detectors;
  FEquivalenceWitness f_equivalence;
  Verdict verdict;
  std::uint64_t seed = 0;
  std::optional<NumericSection> numeric;
};

/// Uniform two-level state (|0> + |1>)/sqrt(2): the witness that works for
/// every half-period triple difference set.
inline Vector uniform_pair_state(Dimension d) {
  Vector v = Vector::Zero(d);
  v[0] = v[1] = 1.0 / std::sqrt(2.0);
  return v;
}

inline AnalysisReport analyze(const GbsSet& s, const AnalyzeOptions& opts = {}) {
  AnalysisReport rep;
  rep.d = s.dim();
  rep.input = s.elements();
  rep.delta = diff_set(s).elements();
  rep.discriminant = discriminant_set(s);
  rep.detectors = detectors_of(s);
  rep.f_equivalence = f_equivalent(s);
  rep.verdict = verdict(s, {opts.assume_small_sets});
  rep.seed = opts.seed;

  if (opts.verify || opts.search) {
    NumericSection num;
    if (opts.verify) {
      if (rep.verdict.reason == VerdictReason::DetectorFound && rep.verdict.detector) {
        const auto eig = common_eigenbasis(*rep.verdict.detector, s.dim(), opts.seed);
        num.witness_kind = "detector-eigenbasis";
        num.detector = *rep.verdict.detector;
        num.eigenbasis_residual = eig.residual;
        double worst = 0.0;
        for (int k = 0; k < s.dim(); ++k)
          worst = std::max(worst, protocol_verify(s, eig.basis.col(k)));
        num.protocol_residual = worst;
      } else if (rep.verdict.reason == VerdictReason::HalfPeriodTriple) {
        num.witness_kind = "uniform-pair-state";
        num.protocol_residual = protocol_verify(s, uniform_pair_state(s.dim()));
      }
    }
    if (opts.search)
      num.feasibility = feasibility_search(s, opts.restarts, opts.iters, opts.seed, opts.tol);
    rep.numeric = std::move(num);
  }
  return rep;
}

inline nlohmann::json to_json(const AnalysisReport& rep) {
  nlohmann::json j;
  j["report_version"] = rep.report_version;
  j["tool_version"] = rep.tool_version;
  j["d"] = rep.d;
  auto gpms = [](const auto& range) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : range) arr.push_back({g.m, g.n});
    return arr;
  };
  j["input"] = gpms(rep.input);
  j["delta"] = gpms(rep.delta);
  j["discriminant"] = gpms(rep.discriminant);
  nlohmann::json dets = nlohmann::json::array();
  for (const auto& id : rep.detectors) dets.push_back(to_string(id));
  j["detectors"] = dets;
  j["f_equivalence"] = {{"found", rep.f_equivalence.found},
                        {"alpha", rep.f_equivalence.alpha},
                        {"beta", rep.f_equivalence.beta}};
  nlohmann::json verdict_json{{"status", to_string(rep.verdict.status)},
                              {"reason", to_string(rep.verdict.reason)}};
  if (rep.verdict.detector)
    verdict_json["witness"] = {{"type", "mcs"}, {"id", to_string(*rep.verdict.detector)}};
  else if (rep.verdict.comb_offset)
    verdict_json["witness"] = {{"type", "comb_offset"}, {"i0", *rep.verdict.comb_offset}};
  else
    verdict_json["witness"] = nullptr;
  j["verdict"] = verdict_json;
  j["seed"] = rep.seed;
  if (rep.numeric) {
    nlohmann::json num;
    num["witness_kind"] = rep.numeric->witness_kind.empty()
                              ? nlohmann::json(nullptr)
                              : nlohmann::json(rep.numeric->witness_kind);
    num["detector"] = rep.numeric->detector ? nlohmann::json(to_string(*rep.numeric->detector))
                                            : nlohmann::json(nullptr);
    num["eigenbasis_residual"] = rep.numeric->eigenbasis_residual
                                     ? nlohmann::json(*rep.numeric->eigenbasis_residual)
                                     : nlohmann::json(nullptr);
    num["protocol_residual"] = rep.numeric->protocol_residual
                                   ? nlohmann::json(*rep.numeric->protocol_residual)
                                   : nlohmann::json(nullptr);
    if (rep.numeric->feasibility) {
      const auto& f = *rep.numeric->feasibility;
      nlohmann::json witness = nlohmann::json::array();
      for (int k = 0; k < f.witness.size(); ++k)
        witness.push_back({f.witness[k].real(), f.witness[k].imag()});
      num["feasibility"] = {{"best_residual", f.best_residual},
                            {"witness", witness},
                            {"restarts", f.restarts},
                            {"iterations_per_restart", f.iterations_per_restart},
                            {"seed", f.seed},
                            {"tolerance", f.tolerance}};
    } else {
      num["feasibility"] = nullptr;
    }
    j["numeric"] = num;
  } else {
    j["numeric"] = nullptr;
  }
  return j;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  return "\"" + s + "\"";
}

inline std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace detail

inline std::string to_csv(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "report_version,tool_version,d,input,delta,discriminant,detectors,"
         "f_equivalent,f_alpha,f_beta,verdict_status,verdict_reason,verdict_witness,seed,"
         "eigenbasis_residual,protocol_residual,feasibility_best_residual,"
         "feasibility_restarts,feasibility_iterations,feasibility_seed,feasibility_tolerance\n";
  auto gpm_cell = [](const auto& range) {
    std::set<Gpm> s(range.begin(), range.end());
    return corpus::render_gpm_list(s);
  };
  out << rep.report_version << ',' << rep.tool_version << ',' << rep.d << ',';
  {
    // input keeps its stated order, unlike the sorted set cells
    std::string cell;
    for (const auto& g : rep.input) {
      if (!cell.empty()) cell += ';';
      cell += to_string(g);
    }
    out << detail::csv_quote(cell) << ',';
  }
  out << detail::csv_quote(gpm_cell(rep.delta)) << ',' << detail::csv_quote(gpm_cell(rep.discriminant))
      << ',' << detail::csv_quote(corpus::render_mcs_list(rep.detectors)) << ','
      << (rep.f_equivalence.found ? "true" : "false") << ',' << rep.f_equivalence.alpha << ','
      << rep.f_equivalence.beta << ',' << to_string(rep.verdict.status) << ','
      << to_string(rep.verdict.reason) << ',';
  if (rep.verdict.detector)
    out << detail::csv_quote(to_string(*rep.verdict.detector));
  else if (rep.verdict.comb_offset)
    out << "i0=" << *rep.verdict.comb_offset;
  out << ',' << rep.seed << ',';
  auto opt_cell = [&](const std::optional<double>& v) {
    if (v) out << detail::format_double(*v);
    out << ',';
  };
  if (rep.numeric) {
    opt_cell(rep.numeric->eigenbasis_residual);
    opt_cell(rep.numeric->protocol_residual);
    if (rep.numeric->feasibility) {
      const auto& f = *rep.numeric->feasibility;
      out << detail::format_double(f.best_residual) << ',' << f.restarts << ','
          << f.iterations_per_restart << ',' << f.seed << ',' << detail::format_double(f.tolerance);
    } else {
      out << ",,,,";
    }
  } else {
    out << ",,,,,,";
  }
  out << '\n';
  return out.str();
}

inline std::string to_text(const AnalysisReport& rep) {
  std::ostringstream out;
  out << "gbsdetect " << rep.tool_version << " (report v" << rep.report_version << ")\n";
  out << "dimension      : " << rep.d << "\n";
  out << "input set      : ";
  for (std::size_t k = 0; k < rep.input.size(); ++k)
    out << (k ? "; " : "") << "(" << to_string(rep.input[k]) << ")";
  out << "  [" << rep.input.size() << " states]\n";
  out << "difference set : " << corpus::render_gpm_list(rep.delta) << "  [" << rep.delta.size()
      << "]\n";
  out << "discriminant   : " << corpus::render_gpm_list(rep.discriminant) << "\n";
  out << "detectors      : " << corpus::render_mcs_list(rep.detectors) << "\n";
  if (rep.f_equivalence.found) {
    out << "F-equivalent   : yes, witness (alpha,beta) = (" << rep.f_equivalence.alpha << ","
        << rep.f_equivalence.beta << ")\n";
  } else {
    out << "F-equivalent   : no\n";
  }
  out << "verdict        : " << to_string(rep.verdict.status) << " [" << to_string(rep.verdict.reason);
  if (rep.verdict.detector) out << " " << to_string(*rep.verdict.detector);
  if (rep.verdict.comb_offset) out << " i0=" << *rep.verdict.comb_offset;
  out << "]\n";
  if (rep.numeric) {
    out << "numeric (seed " << rep.seed << ")\n";
    if (!rep.numeric->witness_kind.empty())
      out << "  witness kind       : " << rep.numeric->witness_kind << "\n";
    if (rep.numeric->detector) out << "  detector           : " << to_string(*rep.numeric->detector) << "\n";
    if (rep.numeric->eigenbasis_residual)
      out << "  eigenbasis residual: " << detail::format_double(*rep.numeric->eigenbasis_residual) << "\n";
    if (rep.numeric->protocol_residual)
      out << "  protocol residual  : " << detail::format_double(*rep.numeric->protocol_residual) << "\n";
    if (rep.numeric->feasibility) {
      const auto& f = *rep.numeric->feasibility;
      out << "  feasibility        : best residual " << detail::format_double(f.best_residual) << " after "
          << f.restarts << " restarts x " << f.iterations_per_restart << " iterations\n";
      out << "  feasibility status : "
          << (f.best_residual < f.tolerance
                  ? "witness found (distinguishing state exists)"
                  : "no witness found (EVIDENCE only, not a proof of infeasibility)")
          << "\n";
    }
  }
  return out.str();
}

}  // namespace gbs
