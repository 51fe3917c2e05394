#ifndef GOLDIELAB_TOOLS_PARAMS_IO_HPP
#define GOLDIELAB_TOOLS_PARAMS_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "goldielab/goldie.hpp"
#include "goldielab/stable.hpp"

namespace goldielab::cli {

// A parameter file is a flat JSON object in exactly one of two shapes:
//   Pitman form:    {"c": 1.0, "y": 0.0, "lambda": 0.0, "alpha": 1.5}
//   canonical form: {"f1": [re, im], "kappa": [re, im], "gamma": 0.5}
// Unknown or missing fields, mixed shapes and non-finite numbers are
// rejected with a message naming the offending field.
struct LoadedParams {
  StableParams params;
  bool pitman_form = false;
};

LoadedParams load_params_file(const std::string& path);
LoadedParams parse_params_object(const nlohmann::json& j,
                                 const std::string& context);

nlohmann::ordered_json complex_json(const Complex& z);
nlohmann::ordered_json canonical_params_json(const StableParams& p);

// CSV tables with a header row. Complex samples use columns x,re,im with a
// strictly increasing x column; sequence tables use columns n,a_n with
// n = 1, 2, ..., N contiguous. Diagnostics carry file:line.
std::vector<GoldieSample> load_complex_samples(const std::string& path);
std::vector<double> load_sequence_samples(const std::string& path);

}  // namespace goldielab::cli

#endif  // GOLDIELAB_TOOLS_PARAMS_IO_HPP
