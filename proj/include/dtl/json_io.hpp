#ifndef DTL_JSON_IO_HPP
#define DTL_JSON_IO_HPP

#include <json.hpp>

#include "dtl/cycle.hpp"

namespace dtl {

// {"space": {"family": "z", "n": .., "m": ..}, "degree": ..,
//  "terms": [{"coeff": "<decimal>", "vars": [[i, j, exp], ..]}, ..]}
// x/y polynomials use [i, exp] pairs. Coefficients are decimal strings so
// arbitrary-precision values survive the trip.
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

// {"space": .., "degree": "<decimal>",
//  "components": [{"multiplicity": "<decimal>", "polynomial": {..}}, ..]}
nlohmann::json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

}  // namespace dtl

#endif
