#include "subrad/run_config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "subrad/errors.hpp"
#include "subrad/hilbert.hpp"

namespace subrad {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(trim(item));
  return parts;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    return used == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& s, long long& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

class FieldErrors {
 public:
  void add(const std::string& field, const std::string& message) {
    lines_ += "  " + field + ": " + message + "\n";
  }
  bool empty() const { return lines_.empty(); }
  const std::string& text() const { return lines_; }

 private:
  std::string lines_;
};

}  // namespace

std::string to_string(EvolutionPath path) {
  switch (path) {
    case EvolutionPath::eigen: return "eigen";
    case EvolutionPath::ode: return "ode";
    case EvolutionPath::krylov: return "krylov";
  }
  return "eigen";
}

std::string to_string(FitSelection sel) {
  switch (sel) {
    case FitSelection::anchored: return "anchored";
    case FitSelection::free_intercept: return "free";
    case FitSelection::both: return "both";
  }
  return "both";
}

RunConfig parse_run_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  FieldErrors errors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      errors.add("line " + std::to_string(lineno), "expected `key = value`");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      errors.add("line " + std::to_string(lineno), "empty key or value");
      continue;
    }
    if (!kv.emplace(key, value).second)
      errors.add(key, "duplicate key");
  }

  RunConfig cfg;
  auto take = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  if (auto v = take("dims")) {
    const auto parts = split_commas(*v);
    long long x = 0, y = 0, z = 0;
    if (parts.size() != 3 || !parse_int(parts[0], x) || !parse_int(parts[1], y) ||
        !parse_int(parts[2], z))
      errors.add("dims", "expected three comma-separated integers");
    else if (x < 1 || y < 1 || z < 1)
      errors.add("dims", "every dimension must be >= 1");
    else
      cfg.dims = GridDims{static_cast<int>(x), static_cast<int>(y),
                          static_cast<int>(z)};
  }
  if (auto v = take("spacing_lambda")) {
    if (!parse_double(*v, cfg.spacing_lambda) || !(cfg.spacing_lambda > 0.0))
      errors.add("spacing_lambda", "expected a positive number");
  }
  if (auto v = take("m")) {
    long long m = 0;
    if (!parse_int(*v, m) || m < 1)
      errors.add("m", "expected an integer >= 1");
    else
      cfg.excitations = static_cast<int>(m);
  }
  if (auto v = take("n")) {
    long long n = 0;
    if (!parse_int(*v, n) || n < 1)
      errors.add("n", "expected an integer >= 1");
    else
      cfg.imprint_index = static_cast<std::size_t>(n);
  }
  auto parse_vec3 = [&](const std::string& key, Eigen::Vector3d& out) {
    if (auto v = take(key)) {
      const auto parts = split_commas(*v);
      double x = 0, y = 0, z = 0;
      if (parts.size() != 3 || !parse_double(parts[0], x) ||
          !parse_double(parts[1], y) || !parse_double(parts[2], z)) {
        errors.add(key, "expected three comma-separated numbers");
        return;
      }
      out = Eigen::Vector3d(x, y, z);
      if (out.norm() == 0.0) errors.add(key, "must be a nonzero vector");
    }
  };
  parse_vec3("d_hat", cfg.d_hat);
  parse_vec3("k_hat", cfg.k_hat);
  if (auto v = take("t_max_gamma")) {
    if (!parse_double(*v, cfg.t_max_gamma) || !(cfg.t_max_gamma >= 0.0))
      errors.add("t_max_gamma", "expected a nonnegative number");
  }
  if (auto v = take("n_time_points")) {
    long long n = 0;
    if (!parse_int(*v, n) || n < 1)
      errors.add("n_time_points", "expected an integer >= 1");
    else
      cfg.n_time_points = static_cast<std::size_t>(n);
  }
  if (auto v = take("fit_window")) {
    const auto parts = split_commas(*v);
    double a = 0, b = 0;
    if (parts.size() != 2 || !parse_double(parts[0], a) ||
        !parse_double(parts[1], b) || !(a < b) || a < 0.0)
      errors.add("fit_window", "expected `t_begin,t_end` with 0 <= t_begin < t_end");
    else
      cfg.fit_window = FitWindow{a, b};
  }
  if (auto v = take("fit_mode")) {
    if (*v == "anchored")
      cfg.fit_mode = FitSelection::anchored;
    else if (*v == "free")
      cfg.fit_mode = FitSelection::free_intercept;
    else if (*v == "both")
      cfg.fit_mode = FitSelection::both;
    else
      errors.add("fit_mode", "expected anchored, free, or both");
  }
  if (auto v = take("evolution_path")) {
    if (*v == "eigen")
      cfg.evolution_path = EvolutionPath::eigen;
    else if (*v == "ode")
      cfg.evolution_path = EvolutionPath::ode;
    else if (*v == "krylov")
      cfg.evolution_path = EvolutionPath::krylov;
    else
      errors.add("evolution_path", "expected eigen, ode, or krylov");
  }
  if (auto v = take("krylov_dim")) {
    long long k = 0;
    if (!parse_int(*v, k) || k < 2)
      errors.add("krylov_dim", "expected an integer >= 2");
    else
      cfg.krylov_dim = static_cast<int>(k);
  }
  if (auto v = take("output_dir")) cfg.output_dir = *v;

  for (const auto& [key, value] : kv) errors.add(key, "unknown key");

  // Cross-field checks.
  if (errors.empty()) {
    if (cfg.excitations > cfg.dims.count())
      errors.add("m", "excitation number exceeds atom count " +
                          std::to_string(cfg.dims.count()));
    else if (binomial(cfg.dims.count(), cfg.excitations) > kDefaultDimCap)
      errors.add("m", "Hilbert dimension C(" + std::to_string(cfg.dims.count()) +
                          "," + std::to_string(cfg.excitations) +
                          ") exceeds the cap " + std::to_string(kDefaultDimCap));
    else if (cfg.imprint_index &&
             *cfg.imprint_index > binomial(cfg.dims.count(), cfg.excitations))
      errors.add("n", "imprint index exceeds the Hilbert dimension");
  }

  if (!errors.empty())
    throw ConfigError("invalid run config:\n" + errors.text());
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  return parse_run_config(in);
}

}  // namespace subrad
