#include "polembed/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "polembed/errors.hpp"
#include "polembed/qo_models.hpp"

namespace polembed {

namespace pt = boost::property_tree;

void validate(const ScanSpec& s) {
  if (!(s.omega_min > 0.0)) throw InvalidArgument("scan: omega_min must be > 0");
  if (!(s.omega_min < s.omega_max)) throw InvalidArgument("scan: omega_min must be < omega_max");
  if (s.points < 2) throw InvalidArgument("scan: points must be >= 2");
}

std::vector<double> frequency_grid(const ScanSpec& s) {
  validate(s);
  std::vector<double> grid(static_cast<std::size_t>(s.points));
  const double last = s.points - 1;
  for (int i = 0; i < s.points; ++i) {
    const double t = i / last;
    grid[i] = s.log_spacing ? s.omega_min * std::pow(s.omega_max / s.omega_min, t)
                            : s.omega_min + t * (s.omega_max - s.omega_min);
  }
  grid.front() = s.omega_min;
  grid.back() = s.omega_max;
  return grid;
}

const std::vector<std::string>& known_quantities() {
  static const std::vector<std::string> q{"J",    "J_bare", "J_sc",         "J_0",
                                          "re_G", "im_G",   "alpha_ave_re", "alpha_ave_im"};
  return q;
}

void validate(const Scenario& s) {
  validate(s.scan);
  validate(s.quadrature);
  validate(s.ensemble);
  if (s.cavity == CavityKind::single_mode && s.embedding != DressingKind::qerra) {
    throw InvalidArgument("scenario: a single_mode cavity is dressed with the qerra embedding");
  }
  if (s.cavity == CavityKind::fabry_perot && s.embedding != DressingKind::full_mqed) {
    throw InvalidArgument("scenario: a fabry_perot cavity is dressed with the full_mqed embedding");
  }
  if (s.cavity == CavityKind::single_mode) validate(s.mode);
  if (s.cavity == CavityKind::fabry_perot) {
    if (!(s.planar.length > 0.0)) throw InvalidArgument("scenario: cavity length must be > 0");
    if (!(s.r_c > 0.0)) throw InvalidArgument("scenario: r_c must be > 0");
  }
  if (s.quantities.empty()) throw InvalidArgument("scenario: no output quantities");
  for (const auto& q : s.quantities) {
    const auto& known = known_quantities();
    if (std::find(known.begin(), known.end(), q) == known.end()) {
      throw InvalidArgument("scenario: unknown quantity '" + q + "'");
    }
    if ((q == "J_sc" || q == "J_0") && s.embedding != DressingKind::full_mqed) {
      throw InvalidArgument("scenario: " + q + " needs the full_mqed embedding");
    }
  }
}

const std::vector<double>& ScanResult::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return values[i];
  }
  throw InvalidArgument("scan result: no column '" + name + "'");
}

std::vector<double> ScanResult::omega_ev() const {
  std::vector<double> out(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    out[i] = from_internal(constants::hbar * omega[i], Unit::electron_volt);
  }
  return out;
}

namespace {

double to_ev(double omega) { return from_internal(constants::hbar * omega, Unit::electron_volt); }

struct PointValues {
  std::map<std::string, double> q;
  bool size_warning = false;
};

template <typename F>
auto staged(const char* stage, double omega, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "stage '" << stage << "' at omega = " << to_ev(omega) << " eV: " << e.what();
    throw StageError(msg.str(), stage, to_ev(omega));
  }
}

bool wants(const Scenario& s, const char* q) {
  return std::find(s.quantities.begin(), s.quantities.end(), q) != s.quantities.end();
}

PointValues evaluate_point(const Scenario& s, const QerraCavity* qerra, double omega) {
  PointValues out;
  const Complex alpha = staged("polarizability", omega, [&] { return alpha_scalar(s.ensemble.model, omega); });
  out.q["alpha_ave_re"] = alpha.real();
  out.q["alpha_ave_im"] = alpha.imag();

  if (s.cavity == CavityKind::single_mode) {
    const Complex bare = staged("bare cavity", omega, [&] { return qerra->bare(omega); });
    const Complex dressed = staged("dressing", omega, [&] { return qerra->dressed(omega); });
    out.q["J"] = spectral_density(dressed.imag(), omega);
    out.q["J_bare"] = spectral_density(bare.imag(), omega);
    out.q["re_G"] = dressed.real();
    out.q["im_G"] = dressed.imag();
    return out;
  }

  const Complex eps = staged("fill permittivity", omega, [&] { return s.planar.fill(omega); });
  const Complex g1 = staged("scattering Green function", omega,
                            [&] { return fp_scattering_green_xx(s.planar, omega, s.quadrature); });
  const auto pieces = staged("local field", omega, [&] { return local_field_correct(g1, eps, s.r_c, omega); });
  const auto split = split_bulk_scattering(pieces, omega);
  out.size_warning = pieces.size_warning;
  out.q["J"] = split.j_total;
  out.q["J_sc"] = split.j_sc;
  out.q["J_0"] = split.j_0;
  out.q["re_G"] = pieces.total.real();
  out.q["im_G"] = pieces.total.imag();
  if (wants(s, "J_bare")) {
    PlanarCavity empty{s.planar.length, s.planar.mirror, Permittivity::vacuum()};
    const Complex g_empty = staged("empty-cavity Green function", omega,
                                   [&] { return fp_scattering_green_xx(empty, omega, s.quadrature); });
    out.q["J_bare"] = spectral_density(g_empty.imag(), omega);
  }
  return out;
}

}  // namespace

ScanResult run_scenario(const Scenario& s, int threads) {
  validate(s);
  const auto grid = frequency_grid(s.scan);
  std::optional<QerraCavity> qerra;
  if (s.cavity == CavityKind::single_mode) qerra.emplace(s.mode, s.ensemble.model, s.ensemble.count);

  std::vector<PointValues> points(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        points[i] = evaluate_point(s, qerra ? &*qerra : nullptr, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ScanResult r;
  r.name = s.name;
  r.omega = grid;
  r.columns = s.quantities;
  r.metadata = s.metadata;
  for (const auto& q : s.quantities) {
    std::vector<double> col(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) col[i] = points[i].q.at(q);
    r.values.push_back(std::move(col));
  }
  for (const auto& p : points) r.size_warnings += p.size_warning ? 1 : 0;
  return r;
}

// ---------------------------------------------------------------------------
// INI parsing

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

// Shortest text that reads back to the same double.
std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(where + ": '" + text + "' is not a number");
  }
  return v;
}

class Config {
 public:
  Config(const pt::ptree& root, Metadata& meta) : root_(root), meta_(meta) {}

  std::optional<std::string> raw(const std::string& section, const std::string& key) {
    const auto sec = root_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto v = sec->get_optional<std::string>(key);
    if (!v) return std::nullopt;
    used_.insert(section + "." + key);
    return trim(*v);
  }

  bool has(const std::string& section, const std::string& key) {
    const auto sec = root_.get_child_optional(section);
    return sec && sec->get_optional<std::string>(key);
  }

  std::string text(const std::string& section, const std::string& key) {
    auto v = raw(section, key);
    if (!v) throw ParseError("missing key " + section + "." + key);
    record(section, key, *v);
    return *v;
  }

  std::string text_or(const std::string& section, const std::string& key, const std::string& def) {
    auto v = raw(section, key);
    const std::string out = v ? *v : def;
    record(section, key, out);
    return out;
  }

  double number(const std::string& section, const std::string& key) {
    return parse_number(text(section, key), section + "." + key);
  }

  double number_or(const std::string& section, const std::string& key, double def) {
    auto v = raw(section, key);
    const double out = v ? parse_number(*v, section + "." + key) : def;
    record(section, key, v ? *v : format_number(def));
    return out;
  }

  std::vector<double> numbers(const std::string& section, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(text(section, key), ',')) {
      out.push_back(parse_number(item, section + "." + key));
    }
    return out;
  }

  void record(const std::string& section, const std::string& key, const std::string& value) {
    meta_.emplace_back(section + "." + key, value);
  }

  void reject_unknown() const {
    static const std::set<std::string> sections{"cavity", "ensemble", "embedding",
                                                "scan",   "output",   "quadrature"};
    for (const auto& [name, sec] : root_) {
      if (!sections.count(name)) throw ParseError("unknown section [" + name + "]");
      for (const auto& [key, value] : sec) {
        if (!used_.count(name + "." + key)) {
          throw ParseError("unknown or conflicting key " + name + "." + key);
        }
      }
    }
  }

 private:
  const pt::ptree& root_;
  Metadata& meta_;
  std::set<std::string> used_;
};

Complex parse_complex_pair(const std::string& text, const std::string& where) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError(where + ": expected 're,im'");
  return {parse_number(parts[0], where), parse_number(parts[1], where)};
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& file) {
  std::filesystem::path p(file);
  return p.is_absolute() ? p : base / p;
}

Permittivity parse_material(const std::string& spec, const std::filesystem::path& base,
                            const std::string& where) {
  if (spec == "drude_gold") return drude_gold_permittivity();
  if (spec == "vacuum") return Permittivity::vacuum();
  if (spec.rfind("constant:", 0) == 0) {
    return Permittivity::constant(parse_complex_pair(spec.substr(9), where));
  }
  if (spec.rfind("tabulated:", 0) == 0) return Permittivity::tabulated(resolve(base, spec.substr(10)));
  throw ParseError(where + ": unknown material '" + spec + "'");
}

EmitterModel parse_components(const std::string& text, double eta,
                              const std::filesystem::path& base) {
  std::vector<MixtureComponent> components;
  for (const auto& item : split(text, ',')) {
    const auto first = item.find(':');
    const auto last = item.rfind(':');
    if (first == std::string::npos || first == last) {
      throw ParseError("ensemble.components: expected kind:file:fraction, got '" + item + "'");
    }
    const std::string kind = trim(item.substr(0, first));
    const std::string file = trim(item.substr(first + 1, last - first - 1));
    const double fraction = parse_number(item.substr(last + 1), "ensemble.components");
    if (kind != "sos") throw ParseError("ensemble.components: unknown kind '" + kind + "'");
    components.push_back(
        {load_tddft_roots(resolve(base, file), eta), fraction, std::filesystem::path(file).stem().string()});
  }
  return MixtureModel(std::move(components));
}

struct Variant {
  std::string suffix;
  double omega_a = 0.0;
  double gamma_a = 0.0;
  Metadata meta;
};

std::filesystem::path with_suffix(const std::filesystem::path& p, const std::string& suffix) {
  if (suffix.empty()) return p;
  return p.parent_path() / (p.stem().string() + suffix + p.extension().string());
}

}  // namespace

std::vector<Scenario> parse_scenarios(const std::string& text, const std::string& name,
                                      const std::filesystem::path& base_dir) {
  pt::ptree root;
  try {
    std::istringstream in(text);
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError("scenario '" + name + "': " + e.message() + " (line " +
                     std::to_string(e.line()) + ")");
  }

  Scenario base;
  base.name = name;
  Config cfg(root, base.metadata);
  base.metadata.emplace_back("scenario.name", name);

  // scan
  base.scan.omega_min = ev(cfg.number("scan", "omega_min_ev")) / constants::hbar;
  base.scan.omega_max = ev(cfg.number("scan", "omega_max_ev")) / constants::hbar;
  const double points = cfg.number("scan", "points");
  if (points != std::floor(points) || points < 2 || points > 1e7) {
    throw ParseError("scan.points: expected an integer >= 2");
  }
  base.scan.points = static_cast<int>(points);
  const std::string spacing = cfg.text_or("scan", "spacing", "linear");
  if (spacing != "linear" && spacing != "log") throw ParseError("scan.spacing: linear or log");
  base.scan.log_spacing = spacing == "log";

  // quadrature
  base.quadrature.rel_tol = cfg.number_or("quadrature", "rel_tol", base.quadrature.rel_tol);
  base.quadrature.max_subdivisions = static_cast<int>(
      cfg.number_or("quadrature", "max_subdivisions", base.quadrature.max_subdivisions));
  base.quadrature.fill_offset = cfg.number_or("quadrature", "fill_offset", base.quadrature.fill_offset);

  // cavity kind first: detuning is relative to omega_c
  const std::string cavity_kind = cfg.text("cavity", "kind");
  if (cavity_kind == "single_mode") {
    base.cavity = CavityKind::single_mode;
  } else if (cavity_kind == "fabry_perot") {
    base.cavity = CavityKind::fabry_perot;
  } else {
    throw ParseError("cavity.kind: single_mode or fabry_perot, got '" + cavity_kind + "'");
  }
  double omega_c = 0.0;
  if (base.cavity == CavityKind::single_mode) omega_c = ev(cfg.number("cavity", "omega_c_ev"));

  // ensemble
  const std::string model = cfg.text_or("ensemble", "model", "rwa");
  std::optional<double> dipole;
  std::vector<Variant> variants;
  if (model == "rwa" || model == "full") {
    dipole = debye(cfg.number("ensemble", "dipole_debye"));
    std::vector<std::pair<double, std::string>> omegas;  // (omega_A, label)
    const bool by_detuning = cfg.has("ensemble", "detuning_over_omega");
    if (by_detuning && cfg.has("ensemble", "omega_a_ev")) {
      throw ParseError("ensemble: give either omega_a_ev or detuning_over_omega");
    }
    if (by_detuning) {
      if (omega_c == 0.0) throw ParseError("ensemble.detuning_over_omega needs a single_mode cavity");
      for (double d : cfg.numbers("ensemble", "detuning_over_omega")) {
        omegas.emplace_back(omega_c * (1.0 - d), "_detuning=" + format_number(d));
      }
    } else {
      for (double e : cfg.numbers("ensemble", "omega_a_ev")) {
        omegas.emplace_back(ev(e), "_omega_a=" + format_number(e));
      }
    }
    const bool by_ratio = cfg.has("ensemble", "gamma_a_ratio");
    if (by_ratio && cfg.has("ensemble", "gamma_a_ev")) {
      throw ParseError("ensemble: give either gamma_a_ev or gamma_a_ratio");
    }
    const auto gammas = by_ratio ? cfg.numbers("ensemble", "gamma_a_ratio")
                                 : cfg.numbers("ensemble", "gamma_a_ev");
    for (const auto& [omega_a, omega_label] : omegas) {
      for (double gv : gammas) {
        Variant v;
        v.omega_a = omega_a;
        if (by_ratio && !(gv > 0.0)) throw ParseError("ensemble.gamma_a_ratio must be > 0");
        v.gamma_a = by_ratio ? omega_a / gv : ev(gv);
        if (omegas.size() > 1) v.suffix += omega_label;
        if (gammas.size() > 1) v.suffix += (by_ratio ? "_gamma_ratio=" : "_gamma_a=") + format_number(gv);
        v.meta.emplace_back("resolved.omega_a_ev", format_number(to_ev(v.omega_a)));
        v.meta.emplace_back("resolved.gamma_a_ev", format_number(to_ev(v.gamma_a)));
        variants.push_back(std::move(v));
      }
    }
  } else if (model == "sos") {
    const double eta = cfg.number_or("ensemble", "eta_hartree", 5e-3);
    base.ensemble.model = parse_components(cfg.text("ensemble", "components"), eta, base_dir);
    variants.push_back({});
  } else {
    throw ParseError("ensemble.model: rwa, full or sos, got '" + model + "'");
  }

  const bool by_density = cfg.has("ensemble", "density_per_nm3");
  if (by_density && cfg.has("ensemble", "volume_nm3")) {
    throw ParseError("ensemble: give either density_per_nm3 or volume_nm3");
  }
  if (by_density) {
    const double density = cfg.number("ensemble", "density_per_nm3");
    base.ensemble.count = density / (nm(1.0) * nm(1.0) * nm(1.0));
    base.ensemble.volume = 1.0;
    if (cfg.has("ensemble", "N")) throw ParseError("ensemble: N conflicts with density_per_nm3");
  } else {
    base.ensemble.count = cfg.number("ensemble", "N");
    base.ensemble.volume = cfg.has("ensemble", "volume_nm3")
                               ? cfg.number("ensemble", "volume_nm3") * nm(1.0) * nm(1.0) * nm(1.0)
                               : 1.0;
  }
  base.ensemble.region =
      base.cavity == CavityKind::single_mode ? Region::microcavity_volume : Region::between_mirrors;

  // cavity details
  std::optional<double> f1;
  if (base.cavity == CavityKind::single_mode) {
    const double q = cfg.number("cavity", "quality_factor");
    const int given = cfg.has("cavity", "f1") + cfg.has("cavity", "rabi_over_omega") +
                      cfg.has("cavity", "splitting_over_omega");
    if (given != 1) throw ParseError("cavity: give exactly one of f1, rabi_over_omega, splitting_over_omega");
    if (cfg.has("cavity", "f1")) {
      f1 = cfg.number("cavity", "f1");
    } else {
      const double rabi = cfg.has("cavity", "rabi_over_omega")
                              ? cfg.number("cavity", "rabi_over_omega") * omega_c
                              : rabi_for_splitting(omega_c, cfg.number("cavity", "splitting_over_omega"));
      const double ref_n = cfg.number_or("cavity", "reference_N", base.ensemble.count);
      double ref_d = 0.0;
      if (cfg.has("cavity", "reference_dipole_debye") || !dipole) {
        ref_d = debye(cfg.number("cavity", "reference_dipole_debye"));
      } else {
        ref_d = *dipole;
        cfg.record("cavity", "reference_dipole_debye", format_number(from_internal(ref_d, Unit::debye)));
      }
      f1 = mode_amplitude_for_rabi(omega_c, rabi, ref_n, ref_d);
    }
    base.mode = mode_from_quality(omega_c, q, *f1);
    base.metadata.emplace_back("resolved.f1", format_number(*f1));
    base.metadata.emplace_back("resolved.gamma_c_ev", format_number(to_ev(base.mode.gamma_c)));
    if (dipole && base.ensemble.count > 0) {
      const double g = coupling_from_mode(base.mode, *dipole);
      base.metadata.emplace_back("resolved.g_ev", format_number(to_ev(g)));
      base.metadata.emplace_back("resolved.rabi_over_omega",
                                 format_number(g * std::sqrt(base.ensemble.count) / omega_c));
    }
  } else {
    base.planar.length = nm(cfg.number("cavity", "length_nm"));
    base.planar.mirror = parse_material(cfg.text("cavity", "mirror"), base_dir, "cavity.mirror");
    const std::string fill = cfg.text_or("cavity", "fill", "ensemble");
    base.fill_with_ensemble = fill == "ensemble";
    if (!base.fill_with_ensemble) base.planar.fill = parse_material(fill, base_dir, "cavity.fill");
  }

  // embedding
  const std::string embedding = cfg.text_or(
      "embedding", "kind", base.cavity == CavityKind::single_mode ? "qerra" : "full_mqed");
  if (embedding == "qerra") {
    base.embedding = DressingKind::qerra;
  } else if (embedding == "full_mqed") {
    base.embedding = DressingKind::full_mqed;
    base.r_c = nm(cfg.number_or("embedding", "r_c_nm", 1.0));
  } else {
    throw ParseError("embedding.kind: qerra or full_mqed, got '" + embedding + "'");
  }

  // output
  base.quantities.clear();
  for (const auto& q : split(cfg.text_or("output", "quantities", "J"), ',')) base.quantities.push_back(q);
  base.csv_path = cfg.text_or("output", "csv", name + ".csv");
  base.plot_path = cfg.text_or("output", "plot", name + ".svg");
  const std::string log_y = cfg.text_or("output", "log_y", "false");
  if (log_y != "true" && log_y != "false") throw ParseError("output.log_y: true or false");
  base.log_y = log_y == "true";

  cfg.reject_unknown();

  std::vector<Scenario> out;
  for (auto& v : variants) {
    Scenario s = base;
    if (model == "rwa" || model == "full") {
      TwoLevelEmitter e{*dipole, v.omega_a, v.gamma_a};
      validate(e);
      s.ensemble.model = TwoLevelModel{e, model == "rwa" ? TwoLevelForm::rwa : TwoLevelForm::full};
    }
    s.name = name + v.suffix;
    s.csv_path = with_suffix(base.csv_path, v.suffix);
    s.plot_path = with_suffix(base.plot_path, v.suffix);
    s.metadata.insert(s.metadata.end(), v.meta.begin(), v.meta.end());
    s.metadata[0].second = s.name;
    if (s.fill_with_ensemble) s.planar.fill = ensemble_permittivity(s.ensemble);
    validate(s);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenarios(buf.str(), path.stem().string(), path.parent_path());
}

}  // namespace polembed
