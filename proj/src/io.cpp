// SPDX-License-Identifier: Apache-2.0
#include "qillum/io.hpp"

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qillum/errors.hpp"

namespace qillum {

std::string fmt17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_matrix_dump(std::ostream& out, const Eigen::MatrixXcd& m) {
  out << "dim " << m.rows() << "\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out << r << " " << c << " " << fmt17(m(r, c).real()) << " "
          << fmt17(m(r, c).imag()) << "\n";
    }
  }
}

Eigen::MatrixXcd read_matrix_dump(std::istream& in) {
  std::string tag;
  long long dim = 0;
  if (!(in >> tag >> dim) || tag != "dim" || dim < 1) {
    throw ConfigError("matrix dump must start with 'dim <n>'");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (long long i = 0; i < dim * dim; ++i) {
    long long r = 0;
    long long c = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(in >> r >> c >> re >> im)) {
      throw ConfigError("matrix dump ended after " + std::to_string(i) +
                        " of " + std::to_string(dim * dim) + " entries");
    }
    if (r < 0 || r >= dim || c < 0 || c >= dim) {
      throw ConfigError("matrix dump index (" + std::to_string(r) + ", " +
                        std::to_string(c) + ") outside dimension " +
                        std::to_string(dim));
    }
    m(r, c) = std::complex<double>(re, im);
  }
  return m;
}

void write_grid(std::ostream& out, int width, int height,
                const std::vector<double>& values) {
  out << width << " " << height << "\n";
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x) out << " ";
      out << fmt17(values[static_cast<std::size_t>(y) * width + x]);
    }
    out << "\n";
  }
}

ReflectivityMap read_map(std::istream& in) {
  int width = 0;
  int height = 0;
  if (!(in >> width >> height) || width < 1 || height < 1) {
    throw ConfigError("map must start with positive 'width height'");
  }
  ReflectivityMap map{width, height, {}};
  map.values.resize(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < map.values.size(); ++i) {
    if (!(in >> map.values[i])) {
      throw ConfigError("map ended after " + std::to_string(i) + " of " +
                        std::to_string(map.values.size()) + " values");
    }
  }
  map.validate();
  return map;
}

void write_pgm(std::ostream& out, const ImageResult& result) {
  out << "P2\n" << result.width << " " << result.height << "\n255\n";
  for (int y = 0; y < result.height; ++y) {
    for (int x = 0; x < result.width; ++x) {
      if (x) out << " ";
      out << (result.detected[static_cast<std::size_t>(y) * result.width + x]
                  ? 255
                  : 0);
    }
    out << "\n";
  }
}

namespace {

std::string trim(const std::string& s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "' has non-numeric value '" +
                      value + "'");
  }
}

std::vector<std::complex<double>> parse_amplitudes(const std::string& value) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const std::size_t sep = item.find(':');
    if (sep == std::string::npos) {
      throw ConfigError("psi entries must look like 're:im', got '" + item + "'");
    }
    out.emplace_back(parse_double("psi", trim(item.substr(0, sep))),
                     parse_double("psi", trim(item.substr(sep + 1))));
  }
  if (out.empty()) throw ConfigError("psi list is empty");
  return out;
}

}  // namespace

ScenarioFile parse_scenario_file(std::istream& in) {
  ScenarioFile file;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        " is not 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));

    if (key == "eta") {
      file.eta = parse_double(key, value);
    } else if (key == "b") {
      file.b = parse_double(key, value);
    } else if (key == "d") {
      const double v = parse_double(key, value);
      if (v != static_cast<int>(v)) {
        throw ConfigError("config key 'd' must be an integer, got '" + value + "'");
      }
      file.d = static_cast<int>(v);
    } else if (key == "prior0") {
      file.prior0 = parse_double(key, value);
    } else if (key == "seed") {
      try {
        std::size_t used = 0;
        file.seed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::exception&) {
        throw ConfigError("config key 'seed' has non-integer value '" + value + "'");
      }
    } else if (key == "psi") {
      if (value == "uniform") {
        file.psi_uniform = true;
        file.psi.reset();
      } else {
        file.psi = parse_amplitudes(value);
        file.psi_uniform = false;
      }
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return file;
}

}  // namespace qillum
