// Command-line front end: build, verify, encode, decode, sweep.
//
// Exit codes: 0 success, 1 verification/decoding failure, 2 usage error.
// Diagnostics go to stderr; stdout carries one JSON document per run.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ce/code.hpp"
#include "ce/code_io.hpp"
#include "ce/experiment.hpp"
#include "ce/noise.hpp"
#include "ce/statevec.hpp"
#include "ce/symplectic.hpp"
#include "ce/verifier.hpp"

namespace {

using json = nlohmann::ordered_json;

// Counts print as integers; everything else is rounded to 12 significant
// digits so repeated runs diff cleanly.
double round_sig(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string now_utc() {
  char buf[32];
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%FT%TZ", &tm);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << text;
    if (!out.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_build(int r, const std::string& out_path) {
  const ce::StabilizerCode code = ce::build_ce_code(r);
  if (!out_path.empty()) {
    ce::write_code_file(code, out_path);
  }
  json doc;
  doc["n"] = code.n;
  doc["k"] = code.k;
  doc["r"] = code.r;
  doc["generators"] = code.generators.size();
  if (!out_path.empty()) doc["out"] = out_path;
  emit(doc);
  return 0;
}

int cmd_verify(const ce::StabilizerCode& code, int wmax) {
  const ce::VerificationReport rep = ce::verify_code(code, wmax);
  json doc;
  doc["code"] = rep.code_id;
  doc["commutation_ok"] = rep.commutation_ok;
  doc["independence_ok"] = rep.independence_ok;
  if (rep.distance.distance) {
    doc["distance"] = *rep.distance.distance;
  } else {
    doc["distance"] = rep.distance.to_label();
  }
  if (rep.distance.witness) {
    doc["witness"] = rep.distance.witness->str();
  }
  if (rep.excitation) {
    doc["excitation"] = *rep.excitation;
  } else {
    doc["excitation"] = "non-constant";
  }
  doc["logicals_ok"] = rep.logicals_ok;
  if (!rep.claimed_logical.empty()) {
    doc["weight3_logical"] = rep.claimed_logical;
    doc["weight3_logical_ok"] = rep.claimed_logical_ok;
  }
  doc["wmax"] = wmax;
  doc["all_ok"] = rep.all_ok;
  emit(doc);
  return rep.all_ok ? 0 : 1;
}

int cmd_encode(double are, double aim, double bre, double bim) {
  const ce::cd alpha{are, aim};
  const ce::cd beta{bre, bim};
  const ce::StateVector state = ce::encode_8_1_3(alpha, beta);
  const ce::StabilizerCode code = ce::canonical_code_8_1_3();

  json doc;
  doc["gate_order"] = ce::resolved_encoding_gate_order();
  json synd = json::array();
  for (const auto& g : code.generators) {
    synd.push_back(round_sig(state.pauli_expectation(g).real()));
  }
  doc["syndrome_expectations"] = synd;
  doc["logical_x_expectation"] =
      round_sig(state.pauli_expectation(code.logical_x[0]).real());
  doc["logical_z_expectation"] =
      round_sig(state.pauli_expectation(code.logical_z[0]).real());
  json spectrum;
  for (const auto& [w, mass] : state.excitation_spectrum()) {
    spectrum[std::to_string(w)] = round_sig(mass);
  }
  doc["excitation_spectrum"] = spectrum;
  doc["codespace_projection"] =
      round_sig(ce::codespace_projection(state, code).probability);
  doc["oracle_fidelity"] =
      round_sig(ce::fidelity(state, ce::codeword_oracle_r2(alpha, beta)));
  emit(doc);
  return 0;
}

int cmd_decode(const std::string& code_path, const std::string& error_text) {
  const ce::StabilizerCode code = ce::read_code_file(code_path);
  const ce::PauliOperator error = ce::parse_pauli(error_text);
  if (error.n != code.n) {
    throw std::invalid_argument("error string length does not match the code");
  }
  const ce::SyndromeTable table = ce::build_lookup(code);
  const ce::SyndromeBits syndrome = ce::pauli_syndrome(error, code);
  const int m = static_cast<int>(code.generators.size());

  const ce::PauliOperator* corr = table.find(syndrome);
  const ce::PauliOperator correction =
      corr != nullptr ? *corr : ce::PauliOperator::identity(code.n);
  const ce::PauliOperator residual = ce::multiply(correction, error);

  std::string residual_class;
  const ce::SymplecticBasis stab(code.generators);
  if (stab.contains(residual, /*mod_phase=*/true)) {
    residual_class = "stabilizer";
  } else if (ce::pauli_syndrome(residual, code).none()) {
    residual_class = "logical";
  } else {
    residual_class = "detectable";
  }

  json doc;
  doc["code"] = code.id();
  doc["error"] = error.str();
  doc["syndrome"] = ce::syndrome_string(syndrome, m);
  doc["known_syndrome"] = corr != nullptr;
  doc["heralded"] = corr == nullptr;
  doc["correction"] = correction.str();
  doc["residual_class"] = residual_class;
  emit(doc);
  return residual_class == "stabilizer" ? 0 : 1;
}

int cmd_sweep(const ce::SweepConfig& config, const std::string& csv_path,
              const std::string& input_name, const std::string& dt_name) {
  const ce::ExperimentReport report = ce::monte_carlo_sweep(config);
  const auto& analysis = report.analysis;
  const int n = analysis.n;

  json doc;
  doc["code"] = report.code_id;
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  if (config.delta_t.random) {
    doc["delta_t"] = "random";
  } else {
    doc["delta_t"] = round_sig(config.delta_t.value);
  }
  doc["ordering"] = config.ordering == ce::ChannelOrdering::CCAfterPauli
                        ? "cc-after-pauli"
                        : "pauli-after-cc";
  doc["input"] = input_name;
  (void)dt_name;

  json points = json::array();
  for (const auto& pt : report.points) {
    json jp;
    jp["p"] = round_sig(pt.p);
    jp["trials"] = pt.trials;
    jp["failures"] = pt.failures;
    jp["heralded"] = pt.heralded;
    jp["fidelity"] = round_sig(pt.fidelity());
    jp["stderr"] = round_sig(pt.std_error());
    points.push_back(jp);
  }
  doc["points"] = points;

  // The three quadratic coefficients side by side: the value implied by the
  // 1/(n(n-2)) bound, the analytic no-weight-2 value, and the exact count
  // from the exhaustive oracle. The displayed binomial fidelity sum through
  // weight 2 expands with a vanishing quadratic term, which matches neither.
  json an;
  an["a0"] = analysis.correctable[0];
  an["a1"] = analysis.correctable.size() > 1 ? analysis.correctable[1] : 0;
  an["a2"] = analysis.correctable.size() > 2 ? analysis.correctable[2] : 0;
  an["quadratic_exact"] = round_sig(analysis.quadratic_coefficient());
  an["quadratic_from_threshold_bound"] = round_sig(double(n) * (n - 2));
  const double no_w2 =
      (analysis.correctable.size() > 1
           ? static_cast<double>(analysis.correctable[1]) * (n - 1) / 3.0
           : 0.0) -
      double(n) * (n - 1) / 2.0;
  an["quadratic_no_weight2"] = round_sig(no_w2);
  an["quadratic_binomial_sum"] = 0.0;
  an["bound_coefficient_consistent"] =
      std::abs(analysis.quadratic_coefficient() - double(n) * (n - 2)) < 0.5;
  if (report.threshold_quadratic) {
    an["pseudo_threshold"] = round_sig(*report.threshold_quadratic);
  }
  if (report.threshold_polynomial) {
    an["pseudo_threshold_polynomial"] = round_sig(*report.threshold_polynomial);
  }
  an["threshold_bound"] = round_sig(ce::threshold_bound(n));
  doc["analysis"] = an;
  doc["generated_at"] = now_utc();
  emit(doc);

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "p,trials,failures,heralded,fidelity,stderr\n";
    for (const auto& pt : report.points) {
      char line[256];
      std::snprintf(line, sizeof(line), "%.12g,%llu,%llu,%llu,%.12g,%.12g\n",
                    pt.p, static_cast<unsigned long long>(pt.trials),
                    static_cast<unsigned long long>(pt.failures),
                    static_cast<unsigned long long>(pt.heralded),
                    pt.fidelity(), pt.std_error());
      csv << line;
    }
    write_text_atomic(csv_path, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-excitation stabilizer code toolkit"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct a family code");
  int build_r = 2;
  std::string build_out;
  build->add_option("--r", build_r, "Family parameter (>= 2)")->required();
  build->add_option("--out", build_out, "Write the code file here");

  // verify
  auto* verify = app.add_subcommand("verify", "Check structural claims");
  int verify_r = -1;
  int verify_wmax = 3;
  std::string verify_code_path;
  verify->add_option("--r", verify_r, "Build and verify this family instance");
  verify->add_option("--code", verify_code_path, "Verify a code file");
  verify->add_option("--wmax", verify_wmax, "Distance search cutoff (1..4)");

  // encode
  auto* encode = app.add_subcommand("encode", "Run the encoding circuit");
  double are = 1.0, aim = 0.0, bre = 0.0, bim = 0.0;
  encode->add_option("--alpha-re", are, "Re(alpha)");
  encode->add_option("--alpha-im", aim, "Im(alpha)");
  encode->add_option("--beta-re", bre, "Re(beta)");
  encode->add_option("--beta-im", bim, "Im(beta)");

  // decode
  auto* decode = app.add_subcommand("decode", "Syndrome lookup for an error");
  std::string decode_code_path;
  std::string decode_error;
  decode->add_option("--code", decode_code_path, "Code file")->required();
  decode->add_option("--error", decode_error, "Pauli error string")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo failure-rate sweep");
  int sweep_r = 2;
  std::string sweep_p = "1e-3,5e-3,1e-2";
  uint64_t sweep_trials = 100000;
  uint64_t sweep_seed = 42;
  std::string sweep_dt = "random";
  std::string sweep_order = "cc-after-pauli";
  std::string sweep_input = "generic";
  std::string sweep_csv;
  int sweep_jobs = 0;
  sweep->add_option("--r", sweep_r, "Family parameter (2 or 3)");
  sweep->add_option("--p", sweep_p, "Comma-separated depolarizing rates");
  sweep->add_option("--trials", sweep_trials, "Trials per grid point");
  sweep->add_option("--seed", sweep_seed, "RNG seed (CE_SEED overrides)");
  sweep->add_option("--dt", sweep_dt, "Rotation time: 'random' or a value");
  sweep->add_option("--order", sweep_order,
                    "cc-after-pauli or pauli-after-cc");
  sweep->add_option("--input", sweep_input, "generic, zero, or one");
  sweep->add_option("--csv", sweep_csv, "Also write a CSV here");
  sweep->add_option("--jobs", sweep_jobs, "Worker threads (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*build) {
      return cmd_build(build_r, build_out);
    }
    if (*verify) {
      if ((verify_r < 0) == verify_code_path.empty()) {
        std::cerr << "verify: give exactly one of --r or --code\n";
        return 2;
      }
      const ce::StabilizerCode code = verify_code_path.empty()
                                          ? ce::build_ce_code(verify_r)
                                          : ce::read_code_file(verify_code_path);
      return cmd_verify(code, verify_wmax);
    }
    if (*encode) {
      return cmd_encode(are, aim, bre, bim);
    }
    if (*decode) {
      return cmd_decode(decode_code_path, decode_error);
    }
    if (*sweep) {
      ce::SweepConfig config;
      config.r = sweep_r;
      config.trials = sweep_trials;
      config.seed = sweep_seed;
      if (const char* env_seed = std::getenv("CE_SEED")) {
        config.seed = std::strtoull(env_seed, nullptr, 10);
      }
      config.jobs = sweep_jobs;
      std::stringstream ps(sweep_p);
      std::string tok;
      while (std::getline(ps, tok, ',')) {
        if (!tok.empty()) config.p_grid.push_back(std::stod(tok));
      }
      if (config.p_grid.empty()) {
        std::cerr << "sweep: empty p grid\n";
        return 2;
      }
      if (sweep_dt == "random") {
        config.delta_t = ce::DeltaTPolicy::uniform();
      } else {
        config.delta_t = ce::DeltaTPolicy::fixed(std::stod(sweep_dt));
      }
      if (sweep_order == "cc-after-pauli") {
        config.ordering = ce::ChannelOrdering::CCAfterPauli;
      } else if (sweep_order == "pauli-after-cc") {
        config.ordering = ce::ChannelOrdering::PauliAfterCC;
      } else {
        std::cerr << "sweep: unknown --order " << sweep_order << "\n";
        return 2;
      }
      if (sweep_input == "generic") {
        config.input = ce::LogicalInput::generic();
      } else if (sweep_input == "zero") {
        config.input = ce::LogicalInput::basis(0);
      } else if (sweep_input == "one") {
        config.input = ce::LogicalInput::basis(1);
      } else {
        std::cerr << "sweep: unknown --input " << sweep_input << "\n";
        return 2;
      }
      return cmd_sweep(config, sweep_csv, sweep_input, sweep_dt);
    }
  } catch (const ce::PauliParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
