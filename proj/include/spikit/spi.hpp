#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "spikit/errors.hpp"
#include "spikit/syntree.hpp"
#include "spikit/treekernel.hpp"

namespace spikit {

// The bounded "tanh" map is the default. The "literal" form
// (e^{gx} - 1) / (e^{-gx} + 1) is unbounded for positive differences and is
// kept only behind this switch for auditability.
enum class SpiVariant { tanh, literal };

inline std::string to_string(SpiVariant v) {
  return v == SpiVariant::tanh ? "tanh" : "literal";
}

inline SpiVariant spi_variant_from_string(const std::string& s) {
  if (s == "tanh") return SpiVariant::tanh;
  if (s == "literal") return SpiVariant::literal;
  throw ConfigError("unknown SPI variant: " + s);
}

struct SpiParams {
  double gamma = 3.0;  // sensitivity scale, 0.1 <= gamma <= 10.0
  SpiVariant variant = SpiVariant::tanh;
};

inline void check_params(const SpiParams& params) {
  if (!(params.gamma >= 0.1 && params.gamma <= 10.0)) {
    throw GammaOutOfRange(params.gamma);
  }
}

enum class Direction { positive, negative, neutral };

inline std::string to_string(Direction d) {
  switch (d) {
    case Direction::positive: return "positive";
    case Direction::negative: return "negative";
    default: return "neutral";
  }
}

inline Direction direction_from_string(const std::string& s) {
  if (s == "positive") return Direction::positive;
  if (s == "negative") return Direction::negative;
  if (s == "neutral") return Direction::neutral;
  throw Error("unknown direction: " + s);
}

struct SpiResult {
  double d_p = 0.0;  // normalized kernel against the positive prime
  double d_n = 0.0;  // normalized kernel against the negative prime
  double spi = 0.0;
  Direction direction = Direction::neutral;
};

// positive above +epsilon, negative below -epsilon, neutral in between.
inline Direction classify(double spi, double epsilon = 0.0) {
  if (spi > epsilon) return Direction::positive;
  if (spi < -epsilon) return Direction::negative;
  return Direction::neutral;
}

// Maps the kernel difference x = D_p - D_n through the gamma-scaled
// amplification. The tanh variant (e^{gx} - 1) / (e^{gx} + 1) equals
// tanh(gx / 2): odd, bounded in (-1, 1), zero exactly at x = 0.
inline double spi_from_difference(double x, const SpiParams& params) {
  check_params(params);
  if (params.variant == SpiVariant::tanh) {
    return std::tanh(0.5 * params.gamma * x);
  }
  return (std::exp(params.gamma * x) - 1.0) /
         (std::exp(-params.gamma * x) + 1.0);
}

// Scores one priming probe: how much closer the predicted tree is to the
// positive prime than to the negative prime.
inline SpiResult spi_score(const SyntaxTree& positive_prime,
                           const SyntaxTree& negative_prime,
                           const SyntaxTree& predicted,
                           const KernelParams& kparams,
                           const SpiParams& sparams) {
  check_params(sparams);
  SpiResult r;
  r.d_p = normalized_kernel(positive_prime, predicted, kparams);
  r.d_n = normalized_kernel(negative_prime, predicted, kparams);
  r.spi = spi_from_difference(r.d_p - r.d_n, sparams);
  r.direction = classify(r.spi);
  return r;
}

struct SweepRow {
  double x = 0.0;
  double gamma = 0.0;
  double spi = 0.0;
};

// Full cross-product of kernel differences and gamma values, row order
// x-major, for external plotting.
inline std::vector<SweepRow> gamma_sweep(const std::vector<double>& x_values,
                                         const std::vector<double>& gamma_grid,
                                         SpiVariant variant = SpiVariant::tanh) {
  for (double gamma : gamma_grid) {
    check_params(SpiParams{gamma, variant});
  }
  std::vector<SweepRow> rows;
  rows.reserve(x_values.size() * gamma_grid.size());
  for (double x : x_values) {
    for (double gamma : gamma_grid) {
      rows.push_back({x, gamma, spi_from_difference(x, {gamma, variant})});
    }
  }
  return rows;
}

namespace detail {

// Shortest decimal form that round-trips the double.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace detail

inline std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "x,gamma,spi\n";
  for (const auto& row : rows) {
    out += detail::format_double(row.x);
    out += ',';
    out += detail::format_double(row.gamma);
    out += ',';
    out += detail::format_double(row.spi);
    out += '\n';
  }
  return out;
}

}  // namespace spikit
