// mrfdenoise: binary image denoising with ICM and simulated annealing.
//
//   mrfdenoise corrupt    --in clean.pbm --out noisy.pbm --prob 0.1 --seed 7
//   mrfdenoise denoise    --in noisy.pbm --out restored.pbm --method sa --seed 3
//   mrfdenoise evaluate   --a restored.pbm --b original.pbm
//   mrfdenoise experiment --generate 256x256 --out-dir run/
//
// Every command is deterministic given its flags.

#include "mrf/mrf.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct ModelFlags {
  double h = 0.0;
  double beta = 1e-4;
  double eta = 2.1e-4;
  std::int64_t k_max = 30;
  double temperature_scale = 1.0 / 500.0;
  bool track_best = false;

  mrf::EnergyParams<double> params() const { return {h, beta, eta}; }

  void add_to(CLI::App& cmd) {
    cmd.add_option("--h", h, "Bias coefficient h")->capture_default_str();
    cmd.add_option("--beta", beta, "Pair coupling beta")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--eta", eta, "Data fidelity eta")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd.add_option("--k-max", k_max, "Number of sweeps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_option("--temperature-scale", temperature_scale, "Annealing schedule scale")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd.add_flag("--track-best", track_best, "SA returns the best state seen");
  }
};

mrf::PbmFormat parse_format(const std::string& name) {
  return name == "p1" ? mrf::PbmFormat::Plain : mrf::PbmFormat::Raw;
}

void write_json(const fs::path& path, const ordered_json& j) { mrf::write_file(path, j.dump(2) + "\n"); }

std::vector<double> trace_energies(const mrf::EnergyTrace<double>& trace) {
  std::vector<double> out;
  out.reserve(trace.size());
  for (const auto& s : trace) out.push_back(s.energy);
  return out;
}

struct MethodRun {
  mrf::DenoiseReport<double> report;
  mrf::RunSummary summary;
};

MethodRun run_method(const std::string& method, const mrf::SpinImage& noisy,
                     const std::optional<mrf::SpinImage>& reference, const ModelFlags& model,
                     std::uint64_t sa_seed) {
  MethodRun run{method == "icm"
                    ? mrf::denoise_icm(noisy, model.params(), mrf::IcmConfig{model.k_max})
                    : mrf::denoise_sa(noisy, model.params(),
                                      mrf::AnnealConfig{model.k_max, sa_seed,
                                                        model.temperature_scale, model.track_best}),
                {}};
  auto& s = run.summary;
  const auto& r = run.report;
  s.method = method;
  s.params = model.params();
  s.k_max = model.k_max;
  if (method == "sa") s.seed = sa_seed;
  s.final_energy = r.final_energy;
  s.best_energy = r.best_energy;
  if (reference) s.agreement_vs_original_percent = mrf::agreement_percent(r.restored, *reference);
  s.agreement_vs_noisy_percent = mrf::agreement_percent(r.restored, noisy);
  s.flips_accepted = r.flips_accepted;
  s.sweeps_run = r.sweeps_run;
  s.trace = trace_energies(r.trace);
  return run;
}

mrf::SpinImage parse_generate(const std::string& spec) {
  const auto x = spec.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--generate", "expected WxH, got " + spec);
  try {
    std::size_t used_w = 0, used_h = 0;
    const long w = std::stol(spec.substr(0, x), &used_w);
    const long h = std::stol(spec.substr(x + 1), &used_h);
    if (used_w != x || used_h != spec.size() - x - 1 || w < 1 || h < 1 || w > 65536 || h > 65536) {
      throw std::invalid_argument(spec);
    }
    return mrf::make_glyph_image(w, h);
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--generate", "expected WxH with positive sizes, got " + spec);
  }
}

// ---- corrupt ----

struct CorruptFlags {
  std::string in, out, format = "p4";
  double prob = 0.1;
  std::uint64_t seed = 0;
};

int cmd_corrupt(const CorruptFlags& f) {
  const auto clean = mrf::load_pbm_file(f.in);
  const auto result = mrf::corrupt_counted(clean, {f.prob, f.seed});
  mrf::save_pbm_file(result.image, parse_format(f.format), f.out);
  std::printf("flips %lld of %lld pixels (rate %.6f)\n", static_cast<long long>(result.flips),
              static_cast<long long>(clean.size()),
              static_cast<double>(result.flips) / static_cast<double>(clean.size()));
  return 0;
}

// ---- denoise ----

struct DenoiseFlags {
  std::string in, out, method = "icm", reference, trace, summary, format = "p4";
  std::uint64_t seed = 0;
  ModelFlags model;
};

int cmd_denoise(const DenoiseFlags& f) {
  const auto noisy = mrf::load_pbm_file(f.in);
  std::optional<mrf::SpinImage> reference;
  if (!f.reference.empty()) {
    reference = mrf::load_pbm_file(f.reference);
    mrf::require_same_shape(*reference, noisy, "--reference");
  }
  const auto run = run_method(f.method, noisy, reference, f.model, f.seed);
  mrf::save_pbm_file(run.report.restored, parse_format(f.format), f.out);
  if (!f.trace.empty()) mrf::write_file(f.trace, mrf::write_trace_csv(run.report.trace));
  const fs::path summary = f.summary.empty() ? fs::path(f.out + ".json") : fs::path(f.summary);
  write_json(summary, mrf::to_json(run.summary));

  std::printf("%s: final energy %.12g, best %.12g, %lld flips in %lld sweeps\n", f.method.c_str(),
              run.report.final_energy, run.report.best_energy,
              static_cast<long long>(run.report.flips_accepted),
              static_cast<long long>(run.report.sweeps_run));
  if (reference) {
    std::printf("agreement with reference: %.4f%%\n", *run.summary.agreement_vs_original_percent);
  }
  return 0;
}

// ---- evaluate ----

struct EvaluateFlags {
  std::string a, b, json;
};

int cmd_evaluate(const EvaluateFlags& f) {
  const auto a = mrf::load_pbm_file(f.a);
  const auto b = mrf::load_pbm_file(f.b);
  const auto differing = mrf::disagreement_count(a, b);
  const double agreement = mrf::agreement_percent(a, b);
  std::printf("agreement %.4f%% (%lld of %lld pixels differ)\n", agreement,
              static_cast<long long>(differing), static_cast<long long>(a.size()));
  if (!f.json.empty()) {
    ordered_json j;
    j["width"] = a.width();
    j["height"] = a.height();
    j["disagreement_count"] = differing;
    j["agreement_percent"] = agreement;
    write_json(f.json, j);
  }
  return 0;
}

// ---- experiment ----

struct ExperimentFlags {
  std::string in, generate, out_dir;
  double prob = 0.1;
  std::uint64_t noise_seed = 1;
  std::uint64_t sa_seed = 1;
  int replicas = 1;
  ModelFlags model;
};

struct Replica {
  std::uint64_t noise_seed = 0;
  std::uint64_t sa_seed = 0;
  mrf::CorruptResult noisy;
  MethodRun icm, sa;
};

Replica run_replica(const mrf::SpinImage& original, const ExperimentFlags& f, int r) {
  const std::uint64_t noise_seed = f.noise_seed + static_cast<std::uint64_t>(r);
  const std::uint64_t sa_seed = f.sa_seed + static_cast<std::uint64_t>(r);
  auto noisy = mrf::corrupt_counted(original, {f.prob, noise_seed});
  auto icm = run_method("icm", noisy.image, original, f.model, sa_seed);
  auto sa = run_method("sa", noisy.image, original, f.model, sa_seed);
  return {noise_seed, sa_seed, std::move(noisy), std::move(icm), std::move(sa)};
}

int cmd_experiment(const ExperimentFlags& f) {
  const mrf::SpinImage original =
      f.generate.empty() ? mrf::load_pbm_file(f.in) : parse_generate(f.generate);
  mrf::NoiseSpec{f.prob, 0}.validate();

  std::error_code ec;
  fs::create_directories(f.out_dir, ec);
  if (ec || !fs::is_directory(f.out_dir)) {
    throw std::runtime_error("cannot create output directory '" + f.out_dir + "'");
  }

  // Replicas are independent; results are merged in replica order.
  std::vector<std::future<Replica>> pending;
  for (int r = 0; r < f.replicas; ++r) {
    pending.push_back(std::async(std::launch::async, run_replica, std::cref(original),
                                 std::cref(f), r));
  }
  std::vector<Replica> replicas;
  for (auto& p : pending) replicas.push_back(p.get());

  const fs::path dir(f.out_dir);
  const Replica& first = replicas.front();
  mrf::save_pbm_file(original, mrf::PbmFormat::Raw, dir / "original.pbm");
  mrf::save_pbm_file(first.noisy.image, mrf::PbmFormat::Raw, dir / "noisy.pbm");
  mrf::save_pbm_file(first.icm.report.restored, mrf::PbmFormat::Raw, dir / "icm.pbm");
  mrf::save_pbm_file(first.sa.report.restored, mrf::PbmFormat::Raw, dir / "sa.pbm");
  mrf::write_file(dir / "icm_trace.csv", mrf::write_trace_csv(first.icm.report.trace));
  mrf::write_file(dir / "sa_trace.csv", mrf::write_trace_csv(first.sa.report.trace));

  ordered_json summary;
  summary["image"] = {{"source", f.generate.empty() ? f.in : "generated " + f.generate},
                      {"width", original.width()},
                      {"height", original.height()}};
  summary["noise"] = {{"flip_probability", f.prob},
                      {"seed", first.noise_seed},
                      {"flips", first.noisy.flips},
                      {"agreement_noisy_vs_original_percent",
                       mrf::agreement_percent(first.noisy.image, original)}};
  summary["runs"] = {mrf::to_json(first.icm.summary), mrf::to_json(first.sa.summary)};
  ordered_json reps = ordered_json::array();
  for (const auto& rep : replicas) {
    reps.push_back({{"noise_seed", rep.noise_seed},
                    {"sa_seed", rep.sa_seed},
                    {"flips", rep.noisy.flips},
                    {"icm_agreement_percent", *rep.icm.summary.agreement_vs_original_percent},
                    {"sa_agreement_percent", *rep.sa.summary.agreement_vs_original_percent}});
  }
  summary["replicas"] = reps;
  write_json(dir / "summary.json", summary);

  std::printf("%-8s %12s %14s %14s\n", "method", "agreement%", "final energy", "best energy");
  for (const auto* run : {&first.icm, &first.sa}) {
    std::printf("%-8s %12.4f %14.8g %14.8g\n", run->summary.method.c_str(),
                *run->summary.agreement_vs_original_percent, run->summary.final_energy,
                run->summary.best_energy);
  }
  if (replicas.size() > 1) {
    for (const auto& rep : replicas) {
      std::printf("replica noise_seed=%llu sa_seed=%llu: icm %.4f%% sa %.4f%%\n",
                  static_cast<unsigned long long>(rep.noise_seed),
                  static_cast<unsigned long long>(rep.sa_seed),
                  *rep.icm.summary.agreement_vs_original_percent,
                  *rep.sa.summary.agreement_vs_original_percent);
    }
  }
  return 0;
}

// ---- oracle (hidden) ----

struct OracleFlags {
  std::string in, out;
  double h = 0, beta = 1e-4, eta = 2.1e-4;
  long max_pixels = mrf::kDefaultOracleCap;
};

int cmd_oracle(const OracleFlags& f) {
  const auto y = mrf::load_pbm_file(f.in);
  const auto result = mrf::exhaustive_minimize(y, mrf::EnergyParams<double>{f.h, f.beta, f.eta},
                                               f.max_pixels);
  std::printf("global minimum %.17g over %llu states, %zu minimiser(s)\n",
              result.global_min_energy,
              static_cast<unsigned long long>(result.states_enumerated),
              result.argmin_images.size());
  if (!f.out.empty()) mrf::save_pbm_file(result.argmin_images.front(), mrf::PbmFormat::Plain, f.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary image denoising by Ising energy minimisation (ICM and simulated annealing)"};
  // "--h" is a model flag, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"p1", "p4"});

  CorruptFlags corrupt;
  auto* c = app.add_subcommand("corrupt", "Flip each pixel independently with a given probability");
  c->add_option("--in", corrupt.in, "Clean PBM image")->required()->check(CLI::ExistingFile);
  c->add_option("--out", corrupt.out, "Output PBM")->required();
  c->add_option("--prob", corrupt.prob, "Flip probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  c->add_option("--seed", corrupt.seed, "Noise seed")->capture_default_str();
  c->add_option("--format", corrupt.format, "p1 or p4")->capture_default_str()->check(format_check);

  DenoiseFlags denoise;
  auto* d = app.add_subcommand("denoise", "Restore a noisy PBM image");
  d->add_option("--in", denoise.in, "Noisy PBM image")->required()->check(CLI::ExistingFile);
  d->add_option("--out", denoise.out, "Restored PBM")->required();
  d->add_option("--method", denoise.method, "icm or sa")
      ->capture_default_str()
      ->check(CLI::IsMember({"icm", "sa"}));
  d->add_option("--seed", denoise.seed, "Annealing seed")->capture_default_str();
  d->add_option("--reference", denoise.reference, "Original image for agreement reporting")
      ->check(CLI::ExistingFile);
  d->add_option("--trace", denoise.trace, "Write the per-sweep energy CSV here");
  d->add_option("--summary", denoise.summary, "Summary JSON path (default: <out>.json)");
  d->add_option("--format", denoise.format, "p1 or p4")->capture_default_str()->check(format_check);
  denoise.model.add_to(*d);

  EvaluateFlags evaluate;
  auto* e = app.add_subcommand("evaluate", "Pixel agreement between two PBM images");
  e->add_option("--a", evaluate.a, "First image")->required()->check(CLI::ExistingFile);
  e->add_option("--b", evaluate.b, "Reference image")->required()->check(CLI::ExistingFile);
  e->add_option("--json", evaluate.json, "Also write the result as JSON");

  ExperimentFlags experiment;
  auto* x = app.add_subcommand("experiment", "Corrupt, denoise with ICM and SA, and compare");
  auto* x_in = x->add_option("--in", experiment.in, "Original PBM image")->check(CLI::ExistingFile);
  auto* x_gen = x->add_option("--generate", experiment.generate,
                              "Synthesize a WxH glyph test image instead of --in");
  x_in->excludes(x_gen);
  x->add_option("--out-dir", experiment.out_dir, "Artifact directory")->required();
  x->add_option("--prob", experiment.prob, "Flip probability")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  x->add_option("--noise-seed", experiment.noise_seed, "Noise seed")->capture_default_str();
  x->add_option("--sa-seed", experiment.sa_seed, "Annealing seed")->capture_default_str();
  x->add_option("--replicas", experiment.replicas, "Independent seed replicas")
      ->capture_default_str()
      ->check(CLI::Range(1, 1024));
  experiment.model.add_to(*x);

  OracleFlags oracle;
  auto* o = app.add_subcommand("oracle", "Exhaustive minimiser for tiny images");
  o->group("");
  o->add_option("--in", oracle.in, "Observed PBM")->required()->check(CLI::ExistingFile);
  o->add_option("--out", oracle.out, "Write the first minimiser here");
  o->add_option("--h", oracle.h)->capture_default_str();
  o->add_option("--beta", oracle.beta)->capture_default_str()->check(CLI::NonNegativeNumber);
  o->add_option("--eta", oracle.eta)->capture_default_str()->check(CLI::NonNegativeNumber);
  o->add_option("--max-pixels", oracle.max_pixels)->capture_default_str()->check(CLI::Range(1, 30));

  try {
    app.parse(argc, argv);
    if (*x && experiment.in.empty() && experiment.generate.empty()) {
      throw CLI::RequiredError("experiment needs --in or --generate");
    }
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  try {
    if (*c) return cmd_corrupt(corrupt);
    if (*d) return cmd_denoise(denoise);
    if (*e) return cmd_evaluate(evaluate);
    if (*x) return cmd_experiment(experiment);
    if (*o) return cmd_oracle(oracle);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
