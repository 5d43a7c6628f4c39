#pragma once

#include "gptlab/state_space.hpp"

#include <map>
#include <string>

namespace gptlab {

/// n rational points on the unit circle in convex position, lifted to dim_A = 3.
/// Throws TooFewVertices for n < 3.
StateSpace polygon(int n);

/// Classical theory with k pure states e_1..e_k and u_A = (1, …, 1).
StateSpace simplex_model(int k);

/// Square base (±1, ±1, 0) with apex (0, 0, 1), lifted to dim_A = 4.
StateSpace square_pyramid();

/// Two parties, two inputs, two outputs. Coordinates are
/// (p_A(0|0), p_A(0|1), p_B(0|0), p_B(0|1), p(00|00), p(00|01), p(00|10), p(00|11), 1).
StateSpace nosignaling_2222();

struct ModelSpec {
  std::string name;
  std::map<std::string, int> parameters;
  std::string description;
};

/// Every zoo entry with its admissible parameter range.
struct ZooEntry {
  std::string name;
  std::string parameter;  // empty when the generator takes none
  int min_param = 0;
  int max_param = 0;
  std::string description;
};

const std::vector<ZooEntry>& zoo_catalog();

/// The models swept by the acceptance checks: polygon 3..9, simplex 1..5,
/// square pyramid and the no-signaling polytope.
std::vector<ModelSpec> standard_zoo();

StateSpace make_model(const ModelSpec& spec);

/// Parses "zoo:<name>[:<param>]". Throws ParseError.
ModelSpec parse_zoo_reference(std::string_view ref);

/// "zoo:polygon:5" style identifier.
std::string zoo_reference(const ModelSpec& spec);

}  // namespace gptlab
