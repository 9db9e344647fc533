//
// Copyright 2026 The dppca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dppca/adaptive.h"
#include "dppca/audit.h"
#include "dppca/error.h"
#include "dppca/io.h"
#include "dppca/mechanism.h"
#include "dppca/preprocess.h"
#include "dppca/rng.h"
#include "dppca/spectral.h"
#include "dppca/theory.h"
#include "synth.h"

namespace dppca::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kPlugInLabel = "asymptotic plug-in estimate";
// Renyi orders reported next to every sigma_beta.
constexpr double kRenyiOrders[] = {2.0, 4.0, 8.0, 16.0, 32.0};

struct Options {
  std::string command;
  std::string input;
  std::string output;
  std::string synth;
  std::string seed_text;
  std::string sampler = "approximate";
  std::string format = "csv";
  std::string alpha_grid = "0.01:0.99:0.01";
  std::string beta_grid;
  std::string alternative = "worst_case_neighbor";
  std::string audit_kind = "both";
  std::optional<int> k;
  std::optional<double> beta;
  std::optional<double> w;
  std::optional<double> w_sq;
  std::optional<double> rho;
  int n_mc = kDefaultMonteCarloDraws;
  int workers = 1;
  int mh_burnin = 64;
  int mh_thin = 1;
  bool embed_clock = false;
  bool rank_transform = false;
  std::uint64_t seed = kDefaultSeed;
};

// Raised for invalid flag combinations; maps to kExitConfig.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRegime:
    case ErrorCode::kInfeasibleTarget:
    case ErrorCode::kPoleViolation:
    case ErrorCode::kChainInitFailure:
      return kExitRegime;
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kInvalidData:
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
    case ErrorCode::kNotSymmetric:
    case ErrorCode::kDegenerateGap:
    case ErrorCode::kMissingSampleCount:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kNormViolation:
    case ErrorCode::kTooFewSamples:
      return kExitData;
    case ErrorCode::kRankOutOfRange:
    case ErrorCode::kDomainError:
    case ErrorCode::kNonpositiveBudget:
    case ErrorCode::kUnsupportedDimension:
      return kExitConfig;
  }
  return kExitConfig;
}

std::uint64_t ParseSeed(const std::string& text) {
  if (text.empty()) return kDefaultSeed;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw ConfigError("--seed must be an unsigned 64-bit integer");
  }
  if (used != text.size())
    throw ConfigError("--seed must be an unsigned 64-bit integer");
  return value;
}

// "start:stop:step" or a comma-separated list.
std::vector<double> ParseGrid(const std::string& text,
                              const std::string& flag) {
  std::vector<double> values;
  const auto number = [&](const std::string& token) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(flag + ": bad number '" + token + "'");
    }
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3)
      throw ConfigError(flag + ": expected start:stop:step");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || stop < start)
      throw ConfigError(flag + ": empty range");
    const auto count =
        static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) {
      values.push_back(
          std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
  } else {
    std::stringstream ss(text);
    for (std::string token; std::getline(ss, token, ',');)
      values.push_back(number(token));
  }
  if (values.empty()) throw ConfigError(flag + ": empty grid");
  return values;
}

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Effective configuration. Worker count is omitted because results do not
// depend on it.
json ConfigEcho(const Options& o) {
  json config = {{"command", o.command}, {"seed", o.seed}};
  if (!o.input.empty()) config["input"] = o.input;
  if (!o.synth.empty()) config["synth"] = o.synth;
  if (!o.output.empty()) config["output"] = o.output;
  if (o.k) config["k"] = *o.k;
  if (o.beta) config["beta"] = *o.beta;
  if (o.w) config["w"] = *o.w;
  if (o.w_sq) config["w_sq"] = *o.w_sq;
  if (o.rho) config["rho"] = *o.rho;
  if (o.rank_transform) config["rank_transform"] = true;
  if (o.command == "privatize" || o.command == "adaptive" ||
      o.command == "audit") {
    config["sampler"] = o.sampler;
    if (o.sampler == "exact_mh") {
      config["mh_burnin"] = o.mh_burnin;
      config["mh_thin"] = o.mh_thin;
    }
  }
  if (o.command == "privatize" || o.command == "adaptive")
    config["format"] = o.format;
  if (o.command == "predict") config["beta_grid"] = o.beta_grid;
  if (o.command == "audit") {
    config["n_mc"] = o.n_mc;
    config["alpha_grid"] = o.alpha_grid;
    config["alternative"] = o.alternative;
    config["audit_kind"] = o.audit_kind;
  }
  return config;
}

json RenyiTable(double mu) {
  json table = json::array();
  for (double order : kRenyiOrders) {
    table.push_back({{"order", order}, {"divergence", RenyiGauss(mu, order)}});
  }
  return table;
}

json PredictionJson(const UtilityPrediction& u) {
  return {{"overlap_diag", VectorToJson(u.overlap_diag)},
          {"spec_err_sq", u.spec_err_sq},
          {"fro_err_sq", u.fro_err_sq},
          {"label", kPlugInLabel}};
}

json ProfileJson(const PrivacyProfile& p) {
  return {{"theta", p.theta},
          {"delta", p.delta},
          {"h", p.h},
          {"hprime", p.hprime},
          {"hsecond", p.hsecond},
          {"sigma_min_sq", p.sigma_min_sq},
          {"beta_crit", p.beta_crit},
          {"label", kPlugInLabel}};
}

struct Source {
  std::optional<Dataset> dataset;
  std::optional<SpectralSummary> summary;
  json description;
};

class Runner {
 public:
  Runner(Options options, std::ostream& out, std::ostream& err)
      : o_(std::move(options)), out_(out), err_(err) {}

  int Run() {
    const auto start = std::chrono::steady_clock::now();
    if (o_.workers < 1) throw ConfigError("--workers must be >= 1");
    if (o_.format != "csv" && o_.format != "json" && o_.format != "bin") {
      throw ConfigError("--format must be csv, json or bin");
    }
    report_ = {{"tool", "dppca"},
               {"version", DPPCA_VERSION},
               {"command", o_.command},
               {"config", ConfigEcho(o_)},
               {"seed", o_.seed}};
    if (o_.embed_clock) report_["wall_clock_utc"] = UtcNow();
    int status = kExitOk;
    if (o_.command == "preprocess") {
      status = Preprocess();
    } else if (o_.command == "privatize") {
      status = Privatize();
    } else if (o_.command == "calibrate") {
      status = Calibrate();
    } else if (o_.command == "predict") {
      status = Predict();
    } else if (o_.command == "adaptive") {
      status = Adaptive();
    } else if (o_.command == "audit") {
      status = Audit();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (o_.embed_clock) report_["runtime_seconds"] = seconds;
    EmitReport();
    err_ << o_.command << ": done in " << std::fixed << std::setprecision(3)
         << seconds << " s (seed " << o_.seed << ")\n";
    return status;
  }

 private:
  int Preprocess() {
    if (o_.input.empty()) throw ConfigError("preprocess requires --input");
    if (o_.output.empty()) throw ConfigError("preprocess requires --output");
    const CsvTable table = ReadCsvFile(o_.input);
    const RankDataset ranked = RankTransform(Dataset(table.values), o_.input);
    const std::string csv_path = o_.output + ".csv";
    WriteCsvFile(csv_path, ranked.data.values(), table.header);
    report_["output_csv"] = csv_path;
    report_["n"] = ranked.data.num_samples();
    report_["p"] = ranked.data.dim();
    report_["tie_counts"] = ranked.tie_counts;
    report_["norm_certified"] = ranked.data.norm_certified();
    report_["max_row_norm_sq"] = ranked.data.max_row_norm_sq();
    report_["source"] = ranked.source_label;
    return kExitOk;
  }

  int Privatize() {
    const double beta = Require(o_.beta, "privatize requires --beta");
    Source source = LoadSource();
    const SpectralSummary& summary = *source.summary;
    const GibbsTarget target(summary, beta);
    const SamplerConfig config = MakeSamplerConfig();
    Rng rng = MakeRng(o_.seed);
    MhDiagnostics diagnostics;
    const OrthoFrame frame =
        config.mode == SamplerMode::kExactMh
            ? SampleExactMh(target, config, rng, &diagnostics)
            : SampleApprox(target, rng);
    report_["beta"] = beta;
    AttachGuarantee(summary, beta);
    if (beta > 0.0)
      report_["utility_prediction"] =
          PredictionJson(PredictUtility(summary, beta));
    if (config.mode == SamplerMode::kExactMh && beta > 0.0) {
      report_["mh"] = {{"proposals", diagnostics.proposals},
                       {"accepted", diagnostics.accepted},
                       {"acceptance_rate", diagnostics.acceptance_rate()},
                       {"init_attempts", diagnostics.init_attempts}};
    }
    EmitFrame(frame.matrix());
    return kExitOk;
  }

  int Calibrate() {
    const double w_sq = TargetWSq(true);
    Source source = LoadSource();
    const PrivacyProfile profile = ComputePrivacyProfile(*source.summary);
    report_["profile"] = ProfileJson(profile);
    report_["w_sq"] = w_sq;
    report_["sigma_min_sq"] = profile.sigma_min_sq;
    report_["beta_crit"] = profile.beta_crit;
    report_["label"] = std::string(kPlugInLabel) + " (non-private calibration)";
    const bool feasible = w_sq >= profile.sigma_min_sq;
    report_["feasible"] = feasible;
    if (!feasible) {
      report_["beta"] = nullptr;
      err_ << "error: " << ErrorCodeName(ErrorCode::kInfeasibleTarget)
           << ": w^2 = " << w_sq
           << " is below sigma_min^2 = " << profile.sigma_min_sq << "\n";
      return kExitRegime;
    }
    const double beta = BetaForTarget(profile, w_sq);
    report_["beta"] = beta;
    report_["sigma_beta_sq_check"] = SigmaBetaSq(profile, beta);
    report_["utility_prediction"] =
        PredictionJson(PredictUtility(*source.summary, beta));
    return kExitOk;
  }

  int Predict() {
    std::vector<double> grid;
    if (!o_.beta_grid.empty()) {
      grid = ParseGrid(o_.beta_grid, "--beta-grid");
    } else if (o_.beta) {
      grid = {*o_.beta};
    } else {
      throw ConfigError("predict requires --beta-grid or --beta");
    }
    Source source = LoadSource();
    const SpectralSummary& summary = *source.summary;
    std::optional<PrivacyProfile> profile;
    if (summary.sample_count() && !summary.gap_degenerate()) {
      profile = ComputePrivacyProfile(summary);
      report_["profile"] = ProfileJson(*profile);
    }
    json rows = json::array();
    Eigen::MatrixXd table(static_cast<Eigen::Index>(grid.size()), 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double beta = grid[i];
      const UtilityPrediction u = PredictUtility(summary, beta);
      json row = PredictionJson(u);
      row["beta"] = beta;
      double sigma = std::nan("");
      if (profile && beta > profile->h) {
        sigma = std::sqrt(SigmaBetaSq(*profile, beta));
        row["sigma_beta"] = sigma;
      } else {
        row["sigma_beta"] = nullptr;
      }
      rows.push_back(row);
      const auto r = static_cast<Eigen::Index>(i);
      table.row(r) << beta, u.spec_err_sq, u.fro_err_sq, sigma;
    }
    report_["predictions"] = rows;
    if (o_.format == "csv" && !o_.output.empty()) {
      const std::string path = o_.output + ".csv";
      WriteCsvFile(path, table,
                   {"beta", "spec_err_sq", "fro_err_sq", "sigma_beta"});
      report_["output_csv"] = path;
    }
    return kExitOk;
  }

  int Adaptive() {
    const double rho = Require(o_.rho, "adaptive requires --rho");
    const double w_sq = TargetWSq(true);
    Source source = LoadSource();
    if (source.dataset && !source.dataset->norm_certified()) {
      err_ << "warning: dataset rows exceed the sqrt(p) norm bound\n";
    }
    const AdaptiveOutcome outcome =
        AdaptiveMechanism(*source.summary, rho, w_sq, MakeSamplerConfig());
    report_.update(outcome.Report());
    report_["seed"] = o_.seed;
    EmitFrame(outcome.frame);
    return kExitOk;
  }

  int Audit() {
    if (o_.audit_kind != "both" && o_.audit_kind != "utility" &&
        o_.audit_kind != "tradeoff") {
      throw ConfigError("--audit-kind must be both, utility or tradeoff");
    }
    TradeoffAlternative alternative;
    if (o_.alternative == "worst_case_neighbor") {
      alternative = TradeoffAlternative::kWorstCaseNeighbor;
    } else if (o_.alternative == "independent_null") {
      alternative = TradeoffAlternative::kIndependentNull;
    } else {
      throw ConfigError(
          "--alternative must be worst_case_neighbor or independent_null");
    }
    Source source = LoadSource();
    const SpectralSummary& summary = *source.summary;
    double beta = 0.0;
    if (o_.beta) {
      if (o_.w || o_.w_sq)
        throw ConfigError("give either --beta or --w/--w-sq, not both");
      beta = *o_.beta;
    } else {
      const double w_sq = TargetWSq(false);
      beta = BetaForTarget(ComputePrivacyProfile(summary), w_sq);
      report_["w_sq"] = w_sq;
    }
    report_["beta"] = beta;
    SamplerConfig config = MakeSamplerConfig();
    std::vector<ComparisonSection> sections;
    if (o_.audit_kind != "tradeoff") {
      const UtilityEstimate u = EstimateUtility(summary, beta, o_.n_mc, config);
      report_["utility"] = u.ToJson();
      sections.push_back({"utility_spec_err_sq",
                          {beta},
                          {u.spec_err_sq_hat},
                          {u.theoretical.spec_err_sq},
                          u.n_mc,
                          u.seed});
      sections.push_back({"utility_fro_err_sq",
                          {beta},
                          {u.fro_err_sq_hat},
                          {u.theoretical.fro_err_sq},
                          u.n_mc,
                          u.seed});
    }
    if (o_.audit_kind != "utility") {
      const std::vector<double> alphas =
          ParseGrid(o_.alpha_grid, "--alpha-grid");
      const TradeoffEstimate t =
          EstimateTradeoff(summary, beta, o_.n_mc, alphas, config, alternative);
      report_["tradeoff"] = t.ToJson();
      report_["renyi"] = RenyiTable(t.sigma_hat);
      sections.push_back({"tradeoff", t.alpha_grid, t.beta_hat,
                          t.theoretical_overlay, t.n_mc, t.seed});
    }
    report_["comparison"] = CompareReport(sections, {{"beta", beta}});
    return kExitOk;
  }

  template <typename T>
  T Require(const std::optional<T>& value, const std::string& message) {
    if (!value) throw ConfigError(message);
    return *value;
  }

  double TargetWSq(bool required) {
    if (o_.w && o_.w_sq) throw ConfigError("give --w or --w-sq, not both");
    if (o_.w) {
      if (!(*o_.w > 0.0)) throw ConfigError("--w must be positive");
      return *o_.w * *o_.w;
    }
    if (o_.w_sq) return *o_.w_sq;
    throw ConfigError(required ? "this command requires --w or --w-sq"
                               : "audit requires --beta, --w or --w-sq");
  }

  SamplerConfig MakeSamplerConfig() const {
    SamplerConfig config;
    config.mode = ParseSamplerMode(o_.sampler);
    config.mh_burnin = o_.mh_burnin;
    config.mh_thin = o_.mh_thin;
    config.seed = o_.seed;
    config.workers = o_.workers;
    return config;
  }

  Source LoadSource() {
    Source source;
    if (o_.input.empty() == o_.synth.empty()) {
      throw ConfigError("give exactly one of --input and --synth");
    }
    if (!o_.synth.empty()) {
      if (o_.rank_transform)
        throw ConfigError("--rank-transform needs --input");
      SpectralSummary summary = ParseSynth(o_.synth);
      if (o_.k && *o_.k != summary.rank()) {
        throw ConfigError("--k disagrees with the rank in --synth");
      }
      source.summary = std::move(summary);
      source.description = {{"kind", "synthetic"}, {"generator", o_.synth}};
    } else {
      const int k = Require(o_.k, o_.command + " requires --k");
      Dataset data = ReadDatasetCsv(o_.input);
      if (o_.rank_transform) data = RankTransform(data, o_.input).data;
      source.summary = Summarize(data, k);
      source.description = {{"kind", "csv"},
                            {"path", o_.input},
                            {"n", data.num_samples()},
                            {"p", data.dim()},
                            {"rank_transformed", o_.rank_transform},
                            {"norm_certified", data.norm_certified()}};
      if (!data.norm_certified()) {
        err_ << "warning: rows exceed the sqrt(p) norm bound (max ||x||^2 = "
             << data.max_row_norm_sq()
             << "); privacy statements do not apply\n";
      }
      source.dataset = std::move(data);
    }
    report_["data"] = source.description;
    return source;
  }

  void AttachGuarantee(const SpectralSummary& summary, double beta) {
    if (beta > 0.0 && !summary.sample_count()) {
      report_["guarantee_label"] = "unavailable: sample count unknown";
      return;
    }
    const GuaranteeStatement g = DescribeGuarantee(summary, beta);
    report_["guarantee_label"] = g.label;
    if (g.sigma_beta) {
      report_["sigma_beta"] = *g.sigma_beta;
      report_["renyi"] = RenyiTable(*g.sigma_beta);
    } else {
      report_["sigma_beta"] = nullptr;
    }
  }

  void EmitFrame(const Eigen::MatrixXd& frame) {
    report_["frame_shape"] = {frame.rows(), frame.cols()};
    if (o_.output.empty() || o_.format == "json") {
      report_["frame"] = MatrixToJson(frame);
      return;
    }
    const std::string path = o_.output + ".frame." + o_.format;
    if (o_.format == "bin") {
      WriteFrameBinaryFile(path, frame);
    } else {
      WriteCsvFile(path, frame);
    }
    report_["frame_file"] = path;
  }

  void EmitReport() {
    const std::string text = report_.dump(2) + "\n";
    if (o_.output.empty()) {
      out_ << text;
    } else {
      WriteTextFile(o_.output + ".json", text);
    }
  }

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
  json report_;
};

void AddCommonFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "CSV dataset, one sample per row");
  cmd->add_option("--synth", o.synth, "spiked:p,k,spike_1..spike_k,bulk,theta");
  cmd->add_option("--output", o.output, "Artifact path prefix");
  cmd->add_option("--k", o.k, "Target rank");
  cmd->add_option("--seed", o.seed_text, "Master seed (default 0x5EED)");
  cmd->add_option("--workers", o.workers, "Worker threads for batch sampling");
  cmd->add_flag("--embed-clock", o.embed_clock,
                "Embed wall-clock time in artifacts");
  cmd->add_flag("--rank-transform", o.rank_transform,
                "Rank-transform the input first");
}

void AddSamplerFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--sampler", o.sampler, "approximate or exact_mh");
  cmd->add_option("--mh-burnin", o.mh_burnin, "MH burn-in steps");
  cmd->add_option("--mh-thin", o.mh_thin, "MH steps per retained draw");
}

void AddTargetFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--w", o.w, "Target privacy level w");
  cmd->add_option("--w-sq", o.w_sq, "Target privacy level w^2");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Differentially private PCA via the exponential mechanism",
               "dppca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DPPCA_VERSION);

  CLI::App* preprocess =
      app.add_subcommand("preprocess", "Rank-transform a CSV dataset");
  AddCommonFlags(preprocess, o);

  CLI::App* privatize =
      app.add_subcommand("privatize", "Sample a private frame at fixed beta");
  AddCommonFlags(privatize, o);
  AddSamplerFlags(privatize, o);
  privatize->add_option("--beta", o.beta, "Noise parameter beta >= 0");
  privatize->add_option("--format", o.format, "Frame format: csv, json or bin");

  CLI::App* calibrate =
      app.add_subcommand("calibrate", "Plug-in beta for a target w");
  AddCommonFlags(calibrate, o);
  AddTargetFlags(calibrate, o);

  CLI::App* predict =
      app.add_subcommand("predict", "Predicted utility and privacy curves");
  AddCommonFlags(predict, o);
  predict->add_option("--beta", o.beta, "Single beta");
  predict->add_option("--beta-grid", o.beta_grid,
                      "start:stop:step or comma list");
  predict->add_option("--format", o.format,
                      "csv adds a table next to the report");

  CLI::App* adaptive = app.add_subcommand(
      "adaptive", "Adaptive mechanism with private calibration");
  AddCommonFlags(adaptive, o);
  AddSamplerFlags(adaptive, o);
  AddTargetFlags(adaptive, o);
  adaptive->add_option("--rho", o.rho, "Calibration budget rho > 0");
  adaptive->add_option("--format", o.format, "Frame format: csv, json or bin");

  CLI::App* audit =
      app.add_subcommand("audit", "Monte-Carlo utility and trade-off audit");
  AddCommonFlags(audit, o);
  AddSamplerFlags(audit, o);
  AddTargetFlags(audit, o);
  audit->add_option("--beta", o.beta, "Noise parameter beta");
  audit->add_option("--n-mc", o.n_mc, "Draws per hypothesis");
  audit->add_option("--alpha-grid", o.alpha_grid,
                    "start:stop:step or comma list");
  audit->add_option("--alternative", o.alternative,
                    "worst_case_neighbor or independent_null");
  audit->add_option("--audit-kind", o.audit_kind, "both, utility or tradeoff");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  o.command = app.get_subcommands().front()->get_name();
  try {
    o.seed = ParseSeed(o.seed_text);
    return Runner(std::move(o), out, err).Run();
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace dppca::cli
