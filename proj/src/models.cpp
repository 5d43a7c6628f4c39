#include "gptlab/models.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

namespace gptlab {

namespace {

// ((1 - t²)/(1 + t²), 2t/(1 + t²)) lies exactly on the unit circle.
Vector circle_point(const Rational& t) {
  Rational denom = 1 + t * t;
  return Vector{(1 - t * t) / denom, 2 * t / denom};
}

// tan(θ/2) rounded to a multiple of 1/1000.
Rational half_angle_parameter(double theta) {
  return Rational(static_cast<long>(std::llround(std::tan(theta / 2) * 1000)), 1000);
}

}  // namespace

StateSpace polygon(int n) {
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "a polygon needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Vector> pts(static_cast<std::size_t>(n));
  pts[0] = Vector{1, 0};
  const double step = 2 * std::numbers::pi / n;
  if (n % 2 == 0) {
    // Centrally symmetric, so opposite edges stay exactly parallel.
    const int half = n / 2;
    for (int k = 1; k < half; ++k) pts[k] = circle_point(half_angle_parameter(k * step));
    for (int k = 0; k < half; ++k) pts[k + half] = -pts[k];
  } else {
    // Mirror symmetric about the x-axis.
    for (int k = 1; k <= n / 2; ++k) {
      pts[k] = circle_point(half_angle_parameter(k * step));
      pts[n - k] = Vector{pts[k][0], -pts[k][1]};
    }
  }
  return StateSpace::lift(VPolytope::from_extreme_points(2, std::move(pts)));
}

StateSpace simplex_model(int k) {
  if (k < 1) throw Error(ErrorKind::TooFewVertices, "a simplex needs at least 1 vertex");
  const auto d = static_cast<std::size_t>(k);
  std::vector<Vector> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(Vector::unit(d, i));
  return StateSpace::build(d, Vector(std::vector<Rational>(d, Rational(1))), std::move(e));
}

StateSpace square_pyramid() {
  return StateSpace::lift(VPolytope::from_extreme_points(
      3, {Vector{1, 1, 0}, Vector{1, -1, 0}, Vector{-1, 1, 0}, Vector{-1, -1, 0}, Vector{0, 0, 1}}));
}

StateSpace nosignaling_2222() {
  // p(ab|xy) for a, b, x, y ∈ {0, 1} as a function of the box.
  using Box = std::array<Rational, 16>;
  auto index = [](int a, int b, int x, int y) { return ((a * 2 + b) * 2 + x) * 2 + y; };
  auto coordinates = [&](const Box& p) {
    Vector v(9);
    v[0] = p[index(0, 0, 0, 0)] + p[index(0, 1, 0, 0)];  // p_A(0|x=0)
    v[1] = p[index(0, 0, 1, 0)] + p[index(0, 1, 1, 0)];  // p_A(0|x=1)
    v[2] = p[index(0, 0, 0, 0)] + p[index(1, 0, 0, 0)];  // p_B(0|y=0)
    v[3] = p[index(0, 0, 0, 1)] + p[index(1, 0, 0, 1)];  // p_B(0|y=1)
    v[4] = p[index(0, 0, 0, 0)];
    v[5] = p[index(0, 0, 0, 1)];
    v[6] = p[index(0, 0, 1, 0)];
    v[7] = p[index(0, 0, 1, 1)];
    v[8] = 1;
    return v;
  };

  std::vector<Vector> vertices;
  // Local deterministic boxes: a = α(x), b = β(y).
  for (int mask = 0; mask < 16; ++mask) {
    const int alpha[2] = {mask & 1, (mask >> 1) & 1};
    const int beta[2] = {(mask >> 2) & 1, (mask >> 3) & 1};
    Box p{};
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) p[index(alpha[x], beta[y], x, y)] = 1;
    }
    vertices.push_back(coordinates(p));
  }
  // PR boxes: a ⊕ b = xy ⊕ αx ⊕ βy ⊕ γ, each allowed pair with weight 1/2.
  for (int mask = 0; mask < 8; ++mask) {
    const int alpha = mask & 1, beta = (mask >> 1) & 1, gamma = (mask >> 2) & 1;
    Box p{};
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const int parity = (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma;
        for (int a = 0; a < 2; ++a) p[index(a, a ^ parity, x, y)] = Rational(1, 2);
      }
    }
    vertices.push_back(coordinates(p));
  }
  return StateSpace::build(9, Vector::unit(9, 8), std::move(vertices));
}

const std::vector<ZooEntry>& zoo_catalog() {
  static const std::vector<ZooEntry> catalog{
      {"polygon", "n", 3, 64, "n-gon with rational vertices on the unit circle (dim_A = 3)"},
      {"simplex", "k", 1, 12, "classical theory with k pure states (dim_A = k)"},
      {"square_pyramid", "", 0, 0, "pyramid over a square, not uniformly pyramidal (dim_A = 4)"},
      {"nosignaling", "", 0, 0, "two-party two-input two-output no-signaling boxes (dim_A = 9)"},
  };
  return catalog;
}

std::vector<ModelSpec> standard_zoo() {
  std::vector<ModelSpec> out;
  for (int n = 3; n <= 9; ++n) out.push_back({"polygon", {{"n", n}}, ""});
  for (int k = 1; k <= 5; ++k) out.push_back({"simplex", {{"k", k}}, ""});
  out.push_back({"square_pyramid", {}, ""});
  out.push_back({"nosignaling", {}, ""});
  for (auto& spec : out) {
    for (const auto& entry : zoo_catalog()) {
      if (entry.name == spec.name) spec.description = entry.description;
    }
  }
  return out;
}

StateSpace make_model(const ModelSpec& spec) {
  auto param = [&](const char* key) {
    auto it = spec.parameters.find(key);
    if (it == spec.parameters.end()) throw Error(ErrorKind::ParseError, spec.name + " needs parameter " + key);
    return it->second;
  };
  if (spec.name == "polygon") return polygon(param("n"));
  if (spec.name == "simplex") return simplex_model(param("k"));
  if (spec.name == "square_pyramid") return square_pyramid();
  if (spec.name == "nosignaling") return nosignaling_2222();
  throw Error(ErrorKind::ParseError, "unknown zoo model '" + spec.name + "'");
}

ModelSpec parse_zoo_reference(std::string_view ref) {
  constexpr std::string_view prefix = "zoo:";
  if (!ref.starts_with(prefix)) throw Error(ErrorKind::ParseError, "zoo reference must start with 'zoo:'");
  ref.remove_prefix(prefix.size());
  std::string_view name = ref;
  std::optional<std::string_view> arg;
  if (auto colon = ref.find(':'); colon != std::string_view::npos) {
    name = ref.substr(0, colon);
    arg = ref.substr(colon + 1);
  }
  for (const auto& entry : zoo_catalog()) {
    if (entry.name != name) continue;
    ModelSpec spec{entry.name, {}, entry.description};
    if (entry.parameter.empty()) {
      if (arg) throw Error(ErrorKind::ParseError, entry.name + " takes no parameter");
      return spec;
    }
    if (!arg) throw Error(ErrorKind::ParseError, entry.name + " needs parameter " + entry.parameter);
    int value = 0;
    auto [ptr, ec] = std::from_chars(arg->data(), arg->data() + arg->size(), value);
    if (ec != std::errc() || ptr != arg->data() + arg->size()) {
      throw Error(ErrorKind::ParseError, "parameter '" + std::string(*arg) + "' is not an integer");
    }
    if (value < entry.min_param || value > entry.max_param) {
      throw Error(ErrorKind::ParseError, entry.name + " parameter must lie in [" + std::to_string(entry.min_param) +
                                             ", " + std::to_string(entry.max_param) + "]");
    }
    spec.parameters[entry.parameter] = value;
    return spec;
  }
  throw Error(ErrorKind::ParseError, "unknown zoo model '" + std::string(name) + "'");
}

std::string zoo_reference(const ModelSpec& spec) {
  std::string out = "zoo:" + spec.name;
  for (const auto& [key, value] : spec.parameters) out += ":" + std::to_string(value);
  return out;
}

}  // namespace gptlab
