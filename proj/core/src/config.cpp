#include "cfmimo/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cfmimo {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("SimConfig: " + what); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& v, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) fail(where + ": trailing characters in value '" + v + "'");
    return d;
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("SimConfig:", 0) == 0) throw;
    fail(where + ": bad numeric value '" + v + "'");
  } catch (const std::out_of_range&) {
    fail(where + ": value out of range '" + v + "'");
  }
  return 0.0;
}

long long to_int(const std::string& v, const std::string& where) {
  try {
    std::size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (pos != v.size()) fail(where + ": trailing characters in value '" + v + "'");
    return i;
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("SimConfig:", 0) == 0) throw;
    fail(where + ": bad integer value '" + v + "'");
  } catch (const std::out_of_range&) {
    fail(where + ": value out of range '" + v + "'");
  }
  return 0;
}

bool to_bool(const std::string& v, const std::string& where) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(where + ": bad boolean value '" + v + "'");
  return false;
}

}  // namespace

void SimConfig::validate() const {
  if (M <= 0) fail("M must be positive");
  if (K <= 0) fail("K must be positive");
  if (!(D > 0)) fail("D must be positive");
  if (!(d0 > 0 && d0 <= d1 && d1 < D)) fail("breakpoints must satisfy 0 < d0 <= d1 < D");
  if (!(f > 0)) fail("f must be positive");
  if (!(hAP > 0 && hu > 0)) fail("antenna heights must be positive");
  if (!(sigma_sh >= 0)) fail("sigma_sh must be nonnegative");
  if (!(delta >= 0.0 && delta <= 1.0)) fail("delta must lie in [0,1]");
  if (!(d_decorr > 0)) fail("d_decorr must be positive");
  if (!(B > 0)) fail("B must be positive");
  if (!(p_dl > 0 && p_ul > 0 && p_pilot > 0)) fail("radiated powers must be positive");
  if (tau_c <= 0) fail("tau_c must be positive");
  if (!(tau_cf >= 1 && tau_cf < tau_c)) fail("tau_cf must satisfy 1 <= tau_cf < tau_c");
  if (tau_sc_dl < 1 || tau_sc_ul < 1) fail("small-cell training lengths must be >= 1");
  if (tau_sc_dl + tau_sc_ul >= tau_c) fail("tau_sc_dl + tau_sc_ul must be < tau_c");
  if (n_drops <= 0) fail("n_drops must be positive");
}

SimConfig parse_config(std::istream& in, const std::string& origin) {
  SimConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = origin + ":" + std::to_string(lineno);
    std::string key, value;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      const auto sp = line.find_first_of(" \t");
      if (sp == std::string::npos) fail(where + ": expected 'key = value'");
      key = trim(line.substr(0, sp));
      value = trim(line.substr(sp + 1));
    }
    if (key.empty() || value.empty()) fail(where + ": expected 'key = value'");

    if (key == "M") cfg.M = static_cast<int>(to_int(value, where));
    else if (key == "K") cfg.K = static_cast<int>(to_int(value, where));
    else if (key == "D") cfg.D = to_double(value, where);
    else if (key == "d0") cfg.d0 = to_double(value, where);
    else if (key == "d1") cfg.d1 = to_double(value, where);
    else if (key == "f") cfg.f = to_double(value, where);
    else if (key == "hAP") cfg.hAP = to_double(value, where);
    else if (key == "hu") cfg.hu = to_double(value, where);
    else if (key == "sigma_sh") cfg.sigma_sh = to_double(value, where);
    else if (key == "delta") cfg.delta = to_double(value, where);
    else if (key == "d_decorr") cfg.d_decorr = to_double(value, where);
    else if (key == "shadowing_correlated") cfg.shadowing_correlated = to_bool(value, where);
    else if (key == "B") cfg.B = to_double(value, where);
    else if (key == "noise_figure_db") cfg.noise_figure_db = to_double(value, where);
    else if (key == "p_dl") cfg.p_dl = to_double(value, where);
    else if (key == "p_ul") cfg.p_ul = to_double(value, where);
    else if (key == "p_pilot") cfg.p_pilot = to_double(value, where);
    else if (key == "tau_c") cfg.tau_c = static_cast<int>(to_int(value, where));
    else if (key == "tau_cf") cfg.tau_cf = static_cast<int>(to_int(value, where));
    else if (key == "tau_sc_dl") cfg.tau_sc_dl = static_cast<int>(to_int(value, where));
    else if (key == "tau_sc_ul") cfg.tau_sc_ul = static_cast<int>(to_int(value, where));
    else if (key == "greedy_iters") cfg.greedy_iters = static_cast<int>(to_int(value, where));
    else if (key == "n_drops") cfg.n_drops = static_cast<int>(to_int(value, where));
    else if (key == "rng_seed") cfg.rng_seed = static_cast<std::uint64_t>(to_int(value, where));
    else fail(where + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file: " + path);
  return parse_config(in, path);
}

}  // namespace cfmimo
