#include "stbcsm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "stbcsm/constellation.hpp"
#include "stbcsm/error.hpp"
#include "stbcsm/vblast.hpp"

namespace stbcsm {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void invalid(const std::string& key, const std::string& value, const std::string& why = {}) {
  std::string msg = "invalid value '" + value + "' for key '" + key + "'";
  if (!why.empty()) msg += ": " + why;
  throw ConfigError(ConfigError::Kind::InvalidValue, msg);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    invalid(key, value);
  }
  if (pos != value.size() || !std::isfinite(v)) invalid(key, value);
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  if (value.empty() || value[0] == '-') invalid(key, value, "expected a non-negative integer");
  // Accept 1e7 style for bit budgets.
  if (value.find_first_of("eE.") != std::string::npos) {
    const double d = parse_double(key, value);
    if (d < 0 || d != std::floor(d) || d > 1.8e19) invalid(key, value, "expected a non-negative integer");
    return static_cast<std::uint64_t>(d);
  }
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    invalid(key, value, "expected a non-negative integer");
  }
  if (pos != value.size()) invalid(key, value, "expected a non-negative integer");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const auto v = parse_u64(key, value);
  if (v > 1'000'000) invalid(key, value, "out of range");
  return static_cast<int>(v);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Sm: return "SM";
    case Scheme::StbcSm: return "STBC-SM";
    case Scheme::Vblast: return "VBLAST";
  }
  return "?";
}

Scheme parse_scheme(const std::string& s) {
  for (Scheme v : {Scheme::Sm, Scheme::StbcSm, Scheme::Vblast}) {
    if (to_string(v) == s) return v;
  }
  throw ConfigError(ConfigError::Kind::InvalidValue, "invalid value '" + s + "' for key 'scheme'");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "scheme",         "n_t",      "n_r",         "modulation",     "variant",  "L",
      "snr_grid",       "min_bit_errors", "max_bits", "master_seed", "theta_override", "stop_ber"};
  return keys;
}

std::vector<double> parse_snr_grid(const std::string& text) {
  std::vector<double> grid;
  const std::string t = trim(text);
  if (t.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(parse_double("snr_grid", trim(item)));
    if (parts.size() != 3 || !(parts[1] > 0.0)) invalid("snr_grid", text, "expected start:step:stop");
    const auto n = static_cast<long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
    for (long k = 0; k <= n; ++k) grid.push_back(parts[0] + k * parts[1]);
  } else {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_double("snr_grid", trim(item)));
  }
  if (grid.empty()) invalid("snr_grid", text, "empty grid");
  return grid;
}

void apply_setting(SimConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "n_t") {
    cfg.n_t = parse_int(key, value);
  } else if (key == "n_r") {
    cfg.n_r = parse_int(key, value);
  } else if (key == "modulation") {
    try {
      cfg.modulation = Constellation::parse(value).name();
    } catch (const InvalidOrderError& e) {
      invalid(key, value, e.what());
    }
  } else if (key == "variant") {
    cfg.variant = parse_variant(value);
  } else if (key == "L") {
    cfg.elements = parse_int(key, value);
  } else if (key == "snr_grid") {
    cfg.snr_grid = parse_snr_grid(value);
  } else if (key == "min_bit_errors") {
    cfg.min_bit_errors = parse_u64(key, value);
  } else if (key == "max_bits") {
    cfg.max_bits = parse_u64(key, value);
  } else if (key == "master_seed") {
    cfg.master_seed = parse_u64(key, value);
  } else if (key == "theta_override") {
    if (value.empty() || value == "none") {
      cfg.theta_override.reset();
    } else {
      cfg.theta_override = parse_double(key, value);
    }
  } else if (key == "stop_ber") {
    cfg.stop_ber = parse_double(key, value);
  } else {
    throw ConfigError(ConfigError::Kind::UnknownKey, "unknown key '" + key + "'");
  }
}

SimConfig parse_config(std::istream& in) {
  SimConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(ConfigError::Kind::InvalidValue,
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(ConfigError::Kind::UnreadableFile, "cannot read config file '" + path + "'");
  return parse_config(in);
}

void SimConfig::validate() const {
  using K = ConfigError::Kind;
  if (n_t < 1 || n_r < 1) throw ConfigError(K::InvalidValue, "n_t and n_r must be >= 1");
  try {
    (void)Constellation::parse(modulation);
  } catch (const InvalidOrderError& e) {
    throw ConfigError(K::InvalidValue, e.what());
  }
  if (snr_grid.empty()) throw ConfigError(K::InvalidValue, "snr_grid must not be empty");
  for (std::size_t i = 1; i < snr_grid.size(); ++i) {
    if (!(snr_grid[i] > snr_grid[i - 1])) throw ConfigError(K::InvalidValue, "snr_grid must be strictly increasing");
  }
  if (min_bit_errors < 1) throw ConfigError(K::InvalidValue, "min_bit_errors must be >= 1");
  if (max_bits < 10'000) throw ConfigError(K::InvalidValue, "max_bits must be >= 10^4");
  if (stop_ber < 0.0) throw ConfigError(K::InvalidValue, "stop_ber must be >= 0");
  if (elements < 1) throw ConfigError(K::InvalidValue, "L must be >= 1");
  if (!uses_array(variant) && elements != 1) {
    throw ConfigError(K::InvalidValue, "L > 1 requires an abf or hbf variant");
  }
  switch (scheme) {
    case Scheme::Sm:
      if (!is_power_of_two(n_t)) throw ConfigError(K::InvalidValue, "SM needs n_t a power of two");
      if (uses_precoder(variant) && n_r < n_t) throw ConfigError(K::Unsupported, "precoded SM needs n_r >= n_t");
      break;
    case Scheme::StbcSm:
      if (n_t < 2) throw ConfigError(K::InvalidValue, "STBC-SM needs n_t >= 2");
      if (uses_precoder(variant) && n_r < 2) throw ConfigError(K::Unsupported, "precoded STBC-SM needs n_r >= 2");
      break;
    case Scheme::Vblast:
      if (variant != Variant::Plain) throw ConfigError(K::Unsupported, "V-BLAST supports only the plain variant");
      check_vblast_size(n_t, Constellation::parse(modulation));
      break;
  }
}

std::string format_config(const SimConfig& cfg) {
  std::ostringstream os;
  os << "scheme = " << to_string(cfg.scheme) << "\n"
     << "n_t = " << cfg.n_t << "\n"
     << "n_r = " << cfg.n_r << "\n"
     << "modulation = " << cfg.modulation << "\n"
     << "variant = " << to_string(cfg.variant) << "\n"
     << "L = " << cfg.elements << "\n"
     << "snr_grid = ";
  for (std::size_t i = 0; i < cfg.snr_grid.size(); ++i) os << (i ? "," : "") << format_double(cfg.snr_grid[i]);
  os << "\n"
     << "min_bit_errors = " << cfg.min_bit_errors << "\n"
     << "max_bits = " << cfg.max_bits << "\n"
     << "master_seed = " << cfg.master_seed << "\n";
  if (cfg.theta_override) os << "theta_override = " << format_double(*cfg.theta_override) << "\n";
  os << "stop_ber = " << format_double(cfg.stop_ber) << "\n";
  return os.str();
}

}  // namespace stbcsm
