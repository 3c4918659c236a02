// rotomode: deterministic simulations of polychromatic rotating light modes.
//
// Subcommands cover field snapshots, single-photon expectation values,
// Hong-Ou-Mandel sweeps, the rotating singlet, rotating-basis BB84 and the
// single-atom storage model. Outputs are CSV or JSON with stable formatting;
// identical flags and seed give byte-identical files.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotomode/atom.hpp"
#include "rotomode/field.hpp"
#include "rotomode/fock.hpp"
#include "rotomode/interference.hpp"
#include "rotomode/modes.hpp"
#include "rotomode/protocols.hpp"
#include "rotomode/transforms.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace rotomode;

constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw BadArgument("cannot open output file: " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void emit_json(const Json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_atomic(out_path, text);
  }
}

// ---------------------------------------------------------------------------
// Family selection shared by snapshot / expect / modes-list / hom.

struct FamilyArgs {
  std::string family = "g";
  std::string sign = "+";
  double omega = 1.0;
  double Omega = 0.01;
  double Omega2 = 0.0;
  int m = 0;
  int s = +1;
  std::string profile = "bessel";
  double kT = 0.0;  // 0: pick 0.02 * omega
  int nT = 0;
  double waist = 1.0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family, "mode family")
      ->check(CLI::IsMember({"b", "c", "d", "e", "f", "g", "h"}));
  cmd->add_option("--sign", args.sign, "pair member")
      ->check(CLI::IsMember({"+", "-"}));
  cmd->add_option("--omega", args.omega, "nominal frequency")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--Omega", args.Omega, "rotation rate");
  cmd->add_option("--Omega2", args.Omega2, "second rotation rate (family e)");
  cmd->add_option("--m", args.m, "orbital index");
  cmd->add_option("--s", args.s, "helicity")->check(CLI::IsMember({-1, 1}));
  cmd->add_option("--profile", args.profile, "transverse profile")
      ->check(CLI::IsMember({"bessel", "lg"}));
  cmd->add_option("--kT", args.kT, "Bessel transverse wavenumber (0: auto)");
  cmd->add_option("--nT", args.nT, "LG radial node count")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--waist", args.waist, "LG beam waist")
      ->check(CLI::PositiveNumber);
}

TransverseIndex make_transverse(const FamilyArgs& args) {
  if (args.profile == "lg")
    return TransverseIndex::laguerre_gauss(args.nT, args.waist);
  const double kT = args.kT > 0.0 ? args.kT : 0.02 * args.omega;
  return TransverseIndex::bessel(kT);
}

ModePair build_pair(ModeBasis& basis, const FamilyArgs& args,
                    Site site = Site::None) {
  const TransverseIndex transverse = make_transverse(args);
  if (args.family == "b")
    return build_b_pair(basis, args.omega, args.Omega, args.m, args.s,
                        transverse, site);
  if (args.family == "c")
    return build_c_pair(basis, args.omega, args.Omega, args.m, args.s,
                        transverse, site);
  if (args.family == "d")
    return build_d_pair(basis, args.omega, args.Omega, args.m, args.s,
                        transverse, site);
  if (args.family == "e")
    return build_e_pair(basis, args.omega, args.Omega, args.Omega2, args.m,
                        args.s, transverse, site);
  if (args.family == "f")
    return build_f_pair(basis, args.omega, args.Omega, transverse, site);
  if (args.family == "g")
    return build_g_pair(basis, args.omega, args.Omega, args.m, args.s,
                        transverse, site);
  if (args.family == "h")
    return build_h_pair(basis, args.omega, args.Omega, args.m, args.s,
                        transverse, site);
  throw BadArgument("unknown family: " + args.family);
}

const SuperpositionMode& select_sign(const ModePair& pair,
                                     const std::string& sign) {
  return sign == "+" ? pair.plus : pair.minus;
}

Json family_header(const FamilyArgs& args) {
  Json header;
  header["family"] = args.family;
  header["sign"] = args.sign;
  header["omega"] = args.omega;
  header["big_omega"] = args.Omega;
  if (args.family == "e") header["big_omega2"] = args.Omega2;
  header["m"] = args.m;
  header["s"] = args.s;
  header["profile"] = args.profile;
  if (args.profile == "bessel") {
    header["k_t"] = args.kT > 0.0 ? args.kT : 0.02 * args.omega;
  } else {
    header["n_t"] = args.nT;
    header["waist"] = args.waist;
  }
  return header;
}

// ---------------------------------------------------------------------------
// snapshot

struct SnapshotArgs {
  FamilyArgs family;
  std::vector<double> times{0.0};
  int grid = 129;
  double extent = 0.0;
  double z = 0.0;
  bool z_set = false;
  std::string component = "x";
  std::string out = "snapshot";
};

IntensityComponent parse_component(const std::string& name) {
  if (name == "x") return IntensityComponent::X;
  if (name == "y") return IntensityComponent::Y;
  return IntensityComponent::Total;
}

int run_snapshot(const SnapshotArgs& args) {
  ModeBasis basis;
  const ModePair pair = build_pair(basis, args.family);
  const SuperpositionMode& mode = select_sign(pair, args.family.sign);

  GridSpec grid;
  grid.n = args.grid;
  grid.extent = args.extent;

  std::vector<FieldSnapshot> snaps;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < args.times.size(); ++i) {
    const double z = args.z_set ? args.z : basis.z0();
    snaps.push_back(snapshot(basis, mode, grid, args.times[i], z));
    const FieldSnapshot& snap = snaps.back();

    std::string csv = "x,y,re_Ex,im_Ex,re_Ey,im_Ey,intensity,psi,chi\n";
    for (int iy = 0; iy < snap.grid.n; ++iy) {
      for (int ix = 0; ix < snap.grid.n; ++ix) {
        const std::size_t p = static_cast<std::size_t>(iy) * snap.grid.n + ix;
        csv += format_double(snap.coordinate(ix)) + ",";
        csv += format_double(snap.coordinate(iy)) + ",";
        csv += format_double(snap.ex[p].real()) + ",";
        csv += format_double(snap.ex[p].imag()) + ",";
        csv += format_double(snap.ey[p].real()) + ",";
        csv += format_double(snap.ey[p].imag()) + ",";
        csv += format_double(snap.intensity[p]) + ",";
        csv += format_double(snap.psi[p]) + ",";
        csv += format_double(snap.chi[p]) + "\n";
      }
    }
    char suffix[16];
    std::snprintf(suffix, sizeof(suffix), "_%03zu.csv", i);
    const std::string path = args.out + suffix;
    write_text_atomic(path, csv);
    files.push_back(path);
  }

  // Sidecar with the estimated rotation rates over the rendered instants.
  Json sidecar = family_header(args.family);
  sidecar["grid"] = args.grid;
  sidecar["extent"] = snaps.front().grid.extent;
  sidecar["component"] = args.component;
  sidecar["times"] = args.times;
  sidecar["files"] = files;

  Json pattern_rate;  // null unless estimable
  if (snaps.size() >= 2) {
    try {
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < snaps.size(); ++i) {
        acc += estimate_pattern_rotation(snaps[i], snaps[i + 1],
                                         parse_component(args.component));
      }
      pattern_rate = acc / static_cast<double>(snaps.size() - 1);
    } catch (const NoAzimuthalStructure&) {
      pattern_rate = nullptr;
    }
  }
  sidecar["pattern_rotation_rate"] = pattern_rate;

  Json polarization_rate;
  const double probe_x = 0.3 * snaps.front().grid.extent;
  if (args.times.size() >= 2) {
    try {
      polarization_rate = estimate_polarization_rotation(basis, mode, probe_x,
                                                         0.0, args.times);
    } catch (const Error&) {
      polarization_rate = nullptr;
    }
  }
  sidecar["polarization_rotation_rate"] = polarization_rate;
  sidecar["probe_point"] = {probe_x, 0.0};

  emit_json(sidecar, args.out + ".json");
  return 0;
}

// ---------------------------------------------------------------------------
// expect

int run_expect(const FamilyArgs& args, const std::string& out) {
  ModeBasis basis;
  const ModePair pair = build_pair(basis, args);
  const SuperpositionMode& mode = select_sign(pair, args.sign);
  const FockState one = create(FockState::vacuum(basis, 2), mode).state;

  const double sz = expect(one, ObservableKind::Sz);
  const double lz = expect(one, ObservableKind::Lz);
  const double jz = expect(one, ObservableKind::Jz);
  const double energy = expect(one, ObservableKind::Energy);

  const double sgn = args.sign == "+" ? 1.0 : -1.0;
  Json residuals;
  if (args.family == "g") {
    residuals["sz"] = std::abs(sz - (-sgn * args.Omega / args.omega));
    residuals["energy"] = std::abs(
        energy - (args.omega - sgn * args.Omega * args.Omega / args.omega));
  } else if (args.family == "h") {
    const double m2 = static_cast<double>(args.m) * args.m;
    residuals["lz"] = std::abs(lz - (-sgn * m2 * args.Omega / args.omega));
    residuals["energy"] = std::abs(
        energy - (args.omega - sgn * m2 * args.Omega * args.Omega / args.omega));
  } else if (args.family == "b") {
    residuals["sz"] = std::abs(sz);
    residuals["energy"] = std::abs(energy - args.omega);
  } else if (args.family == "c") {
    residuals["lz"] = std::abs(lz);
    residuals["energy"] = std::abs(energy - args.omega);
  } else {
    residuals["jz"] = std::abs(jz);
    residuals["energy"] = std::abs(energy - args.omega);
  }

  Json record = family_header(args);
  record["sz"] = sz;
  record["lz"] = lz;
  record["jz"] = jz;
  record["energy"] = energy;
  record["number"] = expect(one, ObservableKind::Number);
  record["closed_form_residuals"] = residuals;
  emit_json(record, out);
  return 0;
}

// ---------------------------------------------------------------------------
// hom

struct HomArgs {
  double omega = 1.0;
  double Omega = 0.01;
  int m = 0;
  int s = +1;
  int points = 64;
  double tau_max = 0.0;  // 0: one full rotation period
  std::string out = "hom.csv";
};

int run_hom(const HomArgs& args) {
  if (args.Omega == 0.0) throw BadArgument("hom sweep needs Omega != 0");
  const double span =
      args.tau_max > 0.0 ? args.tau_max : 2.0 * kPi / std::abs(args.Omega);
  std::string csv = "tau,analytic,bruteforce,abs_diff\n";
  for (int i = 0; i < args.points; ++i) {
    const double tau = span * i / args.points;
    const double analytic =
        hom_analytic(args.Omega, kPi / 4.0, tau, 1.0).coincidence;
    const double brute =
        hom_bruteforce_b(args.omega, args.Omega, args.m, args.s, tau);
    csv += format_double(tau) + ",";
    csv += format_double(analytic) + ",";
    csv += format_double(brute) + ",";
    csv += format_double(std::abs(analytic - brute)) + "\n";
  }
  write_text_atomic(args.out, csv);
  return 0;
}

// ---------------------------------------------------------------------------
// singlet

struct SingletArgs {
  std::string flavor = "polarization";
  double omega = 100.0;
  double Omega = 1.0;
  int m = 0;
  int s = +1;
  double kT = 0.0;
  std::string out;
};

Json conditional_entry(const ModeBasis& basis, const FockState& singlet,
                       const SingletSpec& spec, const char* name,
                       const SuperpositionMode& mode) {
  const ConditionalCorrelation r =
      conditional_correlations(basis, singlet, spec, mode);
  Json entry;
  entry["detected_mode"] = name;
  entry["probability"] = r.probability;
  entry["remote_sz"] = r.remote_sz;
  entry["remote_lz"] = r.remote_lz;
  entry["remote_energy"] = r.remote_energy;
  entry["local_rotation_rate"] = r.local_rotation_rate;
  entry["remote_rotation_rate"] = r.remote_rotation_rate;
  return entry;
}

int run_singlet(const SingletArgs& args) {
  SingletSpec spec;
  spec.flavor = args.flavor == "orbital" ? SingletFlavor::Orbital
                                         : SingletFlavor::Polarization;
  spec.omega = args.omega;
  spec.Omega = args.Omega;
  spec.m = args.m;
  spec.s = args.s;
  spec.transverse =
      TransverseIndex::bessel(args.kT > 0.0 ? args.kT : 0.02 * args.omega);

  ModeBasis basis;
  const Family weighted = spec.flavor == SingletFlavor::Orbital ? Family::h
                                                                : Family::g;
  const Family balanced = spec.flavor == SingletFlavor::Orbital ? Family::c
                                                                : Family::b;
  const FockState in_weighted = build_singlet(basis, spec, weighted);
  const FockState in_balanced = build_singlet(basis, spec, balanced);
  const FockState in_labels = build_singlet(basis, spec, Family::a);

  const char* weighted_name = spec.flavor == SingletFlavor::Orbital ? "h" : "g";
  const char* balanced_name = spec.flavor == SingletFlavor::Orbital ? "c" : "b";

  Json overlaps;
  overlaps[std::string(weighted_name) + "_" + balanced_name] =
      std::abs(inner(in_weighted, in_balanced));
  overlaps[std::string(weighted_name) + "_a"] =
      std::abs(inner(in_weighted, in_labels));
  overlaps[std::string(balanced_name) + "_a"] =
      std::abs(inner(in_balanced, in_labels));

  Json expectations;
  expectations["jz"] = expect(in_weighted, ObservableKind::Jz);
  expectations["sz"] = expect(in_weighted, ObservableKind::Sz);
  expectations["lz"] = expect(in_weighted, ObservableKind::Lz);
  expectations["energy"] = expect(in_weighted, ObservableKind::Energy);

  const ModePair w_at_a = singlet_pair(basis, spec, weighted, Site::A);
  const ModePair b_at_a = singlet_pair(basis, spec, balanced, Site::A);
  const ModePair a_at_a = singlet_pair(basis, spec, Family::a, Site::A);
  Json conditional = Json::array();
  const std::string wp = std::string(weighted_name) + "+";
  const std::string wm = std::string(weighted_name) + "-";
  const std::string bp = std::string(balanced_name) + "+";
  const std::string bm = std::string(balanced_name) + "-";
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, wp.c_str(), w_at_a.plus));
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, wm.c_str(), w_at_a.minus));
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, bp.c_str(), b_at_a.plus));
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, bm.c_str(), b_at_a.minus));
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, "a_high", a_at_a.plus));
  conditional.push_back(
      conditional_entry(basis, in_weighted, spec, "a_low", a_at_a.minus));

  Json record;
  record["flavor"] = args.flavor;
  record["omega"] = spec.omega;
  record["big_omega"] = spec.Omega;
  record["m"] = spec.m;
  record["s"] = spec.s;
  record["overlaps"] = overlaps;
  record["expectations"] = expectations;
  record["conditional_correlations"] = conditional;
  emit_json(record, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// qkd

struct QkdArgs {
  double omega = 1.0;
  double Omega = 0.01;
  int m = 0;
  long trials = 100000;
  std::uint64_t seed = 1;
  std::string eavesdrop = "none";
  int eve_basis = 1;
  std::string out;
};

int run_qkd(const QkdArgs& args) {
  Bb84Config config;
  config.omega = args.omega;
  config.Omega = args.Omega;
  config.m = args.m;
  config.transverse = TransverseIndex::bessel(0.02 * args.omega);
  config.trials = args.trials;
  config.seed = args.seed;
  config.eavesdrop = args.eavesdrop == "intercept_resend"
                         ? Bb84Config::Eavesdrop::InterceptResend
                         : Bb84Config::Eavesdrop::None;
  config.eve_basis = args.eve_basis - 1;

  const MubReport mub = mub_overlap_matrix(config);
  const Bb84Stats stats = bb84_simulate(config);
  const ComplementarityReport thresholds = measurement_complementarity(config);

  Json record;
  record["omega"] = args.omega;
  record["big_omega"] = args.Omega;
  record["m"] = args.m;
  record["trials"] = stats.trials;
  record["seed"] = args.seed;
  record["eavesdrop"] = args.eavesdrop;
  if (config.eavesdrop == Bb84Config::Eavesdrop::InterceptResend)
    record["eve_basis"] = args.eve_basis;
  record["sifted"] = stats.sifted;
  record["errors"] = stats.errors;
  record["sifted_fraction"] = stats.sifted_fraction;
  record["qber"] = stats.qber;
  record["mub_cross_overlaps"] = {
      {mub.cross[0][0], mub.cross[0][1]},
      {mub.cross[1][0], mub.cross[1][1]},
  };
  Json complementarity;
  complementarity["frequency_threshold"] = thresholds.frequency_threshold;
  complementarity["timing_threshold"] = thresholds.timing_threshold;
  complementarity["basis2_frequency_separation"] =
      thresholds.basis2_frequency_separation;
  complementarity["time_shift"] = thresholds.time_shift;
  complementarity["time_shift_residual"] = thresholds.time_shift_residual;
  record["complementarity"] = complementarity;
  emit_json(record, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// atom

struct AtomArgs {
  double omega0 = 100.0;
  double sigma = 0.5;
  double Omega = 0.4;
  double omega_a = 100.0;
  double gamma = 0.5;
  double z_prime = 0.0;
  double p0 = 0.0;
  double motional_sigma = 1.0;
  std::string out;
};

int run_atom(const AtomArgs& args) {
  const SpectralAmplitude spectrum = make_gaussian_spectrum(args.omega0,
                                                            args.sigma);
  AtomConfig config;
  config.omega_A = args.omega_a;
  config.gamma = args.gamma;
  config.z_prime = args.z_prime;
  config.p0 = args.p0;
  config.motional_sigma = args.motional_sigma;
  const StorageResult result = absorb(spectrum, args.Omega, config);

  Json record;
  record["omega0"] = args.omega0;
  record["sigma"] = args.sigma;
  record["big_omega"] = args.Omega;
  record["omega_a"] = args.omega_a;
  record["gamma"] = args.gamma;
  record["z_prime"] = args.z_prime;
  record["p0"] = args.p0;
  record["motional_sigma"] = args.motional_sigma;
  record["c_plus"] = {{"re", result.c_plus.real()},
                      {"im", result.c_plus.imag()}};
  record["c_minus"] = {{"re", result.c_minus.real()},
                       {"im", result.c_minus.imag()}};
  record["c_plus_abs"] = std::abs(result.c_plus);
  record["c_minus_abs"] = std::abs(result.c_minus);
  record["motional_overlap"] = result.motional_overlap;
  record["entanglement_entropy"] = result.entanglement_entropy;
  emit_json(record, args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// modes-list

int run_modes_list(const FamilyArgs& args, const std::string& out) {
  ModeBasis basis;
  const ModePair pair = build_pair(basis, args);

  const auto describe = [&](const SuperpositionMode& mode, const char* sign) {
    Json entry;
    entry["sign"] = sign;
    entry["nominal_omega"] = mode.nominal_omega;
    Json coeffs = Json::array();
    for (std::size_t k = 0; k < mode.coefficients.size(); ++k) {
      const Complex c = mode.coefficients[k];
      if (c == Complex(0.0, 0.0)) continue;
      const ModeLabel& label = basis.label(k);
      Json item;
      item["omega"] = label.omega;
      item["m"] = label.m;
      item["s"] = label.s;
      item["re"] = c.real();
      item["im"] = c.imag();
      coeffs.push_back(item);
    }
    entry["coefficients"] = coeffs;
    return entry;
  };

  Json record = family_header(args);
  record["modes"] = Json::array({describe(pair.plus, "+"),
                                 describe(pair.minus, "-")});
  emit_json(record, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotating light mode simulations"};
  app.require_subcommand(1);

  std::string convention = "sqrt-omega";
  app.add_option("--convention", convention,
                 "field normalization convention (reserved)")
      ->check(CLI::IsMember({"sqrt-omega"}));

  SnapshotArgs snapshot_args;
  CLI::App* snapshot_cmd =
      app.add_subcommand("snapshot", "render reference-plane field snapshots");
  add_family_options(snapshot_cmd, snapshot_args.family);
  snapshot_cmd->add_option("--times", snapshot_args.times, "sample times")
      ->delimiter(',');
  snapshot_cmd->add_option("--grid", snapshot_args.grid, "points per axis")
      ->check(CLI::Range(2, 4097));
  snapshot_cmd->add_option("--extent", snapshot_args.extent,
                           "grid half-width (0: auto)");
  snapshot_cmd->add_option("--z", snapshot_args.z, "plane coordinate")
      ->each([&](const std::string&) { snapshot_args.z_set = true; });
  snapshot_cmd->add_option("--component", snapshot_args.component,
                           "intensity component for the pattern estimate")
      ->check(CLI::IsMember({"x", "y", "total"}));
  snapshot_cmd->add_option("--out", snapshot_args.out, "output prefix");

  FamilyArgs expect_args;
  std::string expect_out;
  CLI::App* expect_cmd =
      app.add_subcommand("expect", "single-photon expectation values");
  add_family_options(expect_cmd, expect_args);
  expect_cmd->add_option("--out", expect_out, "output path (default stdout)");

  HomArgs hom_args;
  CLI::App* hom_cmd =
      app.add_subcommand("hom", "Hong-Ou-Mandel coincidence sweep");
  hom_cmd->add_option("--omega", hom_args.omega)->check(CLI::PositiveNumber);
  hom_cmd->add_option("--Omega", hom_args.Omega);
  hom_cmd->add_option("--m", hom_args.m);
  hom_cmd->add_option("--s", hom_args.s)->check(CLI::IsMember({-1, 1}));
  hom_cmd->add_option("--points", hom_args.points)->check(CLI::Range(2, 65536));
  hom_cmd->add_option("--tau-max", hom_args.tau_max,
                      "sweep span (0: one rotation period)");
  hom_cmd->add_option("--out", hom_args.out, "output CSV path");

  SingletArgs singlet_args;
  CLI::App* singlet_cmd =
      app.add_subcommand("singlet", "rotating two-photon singlet report");
  singlet_cmd->add_option("--flavor", singlet_args.flavor)
      ->check(CLI::IsMember({"polarization", "orbital"}));
  singlet_cmd->add_option("--omega", singlet_args.omega)
      ->check(CLI::PositiveNumber);
  singlet_cmd->add_option("--Omega", singlet_args.Omega);
  singlet_cmd->add_option("--m", singlet_args.m);
  singlet_cmd->add_option("--s", singlet_args.s)->check(CLI::IsMember({-1, 1}));
  singlet_cmd->add_option("--kT", singlet_args.kT);
  singlet_cmd->add_option("--out", singlet_args.out,
                          "output path (default stdout)");

  QkdArgs qkd_args;
  CLI::App* qkd_cmd =
      app.add_subcommand("qkd", "rotating-basis BB84 Monte Carlo");
  qkd_cmd->add_option("--omega", qkd_args.omega)->check(CLI::PositiveNumber);
  qkd_cmd->add_option("--Omega", qkd_args.Omega);
  qkd_cmd->add_option("--m", qkd_args.m);
  qkd_cmd->add_option("--trials", qkd_args.trials)
      ->check(CLI::Range(1L, 1000000000L));
  qkd_cmd->add_option("--seed", qkd_args.seed);
  qkd_cmd->add_option("--eavesdrop", qkd_args.eavesdrop)
      ->check(CLI::IsMember({"none", "intercept_resend"}));
  qkd_cmd->add_option("--eve-basis", qkd_args.eve_basis)
      ->check(CLI::IsMember({1, 2}));
  qkd_cmd->add_option("--out", qkd_args.out, "output path (default stdout)");

  AtomArgs atom_args;
  CLI::App* atom_cmd =
      app.add_subcommand("atom", "single-atom storage of a rotating photon");
  atom_cmd->add_option("--omega0", atom_args.omega0)
      ->check(CLI::PositiveNumber);
  atom_cmd->add_option("--sigma", atom_args.sigma)->check(CLI::PositiveNumber);
  atom_cmd->add_option("--Omega", atom_args.Omega);
  atom_cmd->add_option("--omega-a", atom_args.omega_a)
      ->check(CLI::PositiveNumber);
  atom_cmd->add_option("--gamma", atom_args.gamma)->check(CLI::PositiveNumber);
  atom_cmd->add_option("--z-prime", atom_args.z_prime);
  atom_cmd->add_option("--p0", atom_args.p0)->check(CLI::Range(0.0, 0.999999));
  atom_cmd->add_option("--motional-sigma", atom_args.motional_sigma)
      ->check(CLI::PositiveNumber);
  atom_cmd->add_option("--out", atom_args.out, "output path (default stdout)");

  FamilyArgs modes_args;
  std::string modes_out;
  CLI::App* modes_cmd =
      app.add_subcommand("modes-list", "labels and coefficients of a pair");
  add_family_options(modes_cmd, modes_args);
  modes_cmd->add_option("--out", modes_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "flag error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (snapshot_cmd->parsed()) return run_snapshot(snapshot_args);
    if (expect_cmd->parsed()) return run_expect(expect_args, expect_out);
    if (hom_cmd->parsed()) return run_hom(hom_args);
    if (singlet_cmd->parsed()) return run_singlet(singlet_args);
    if (qkd_cmd->parsed()) return run_qkd(qkd_args);
    if (atom_cmd->parsed()) return run_atom(atom_args);
    if (modes_cmd->parsed()) return run_modes_list(modes_args, modes_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
