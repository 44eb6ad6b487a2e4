#pragma once

#include <string>

#include "json.hpp"

#include "simphil/morphism.hpp"
#include "simphil/sset.hpp"

namespace simphil::cli {

/// Malformed spec document.  `pointer` is the JSON pointer of the offending value.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string pointer, const std::string& message);
    const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// Builds the simplicial set described by `doc` without validating it.
SimplicialSet build_spec(const nlohmann::json& doc);

/// Builds and validates; an invalid set throws invalid-input naming the relation.
SimplicialSet parse_spec(const nlohmann::json& doc);

/// Morphism document for `circuit --from-morphism`:
///   {"target": <spec>, "map": "identity" | "constant" | {"vertex": label}
///                           | {"homomorphism": [...]} | {"labels": [{src: dst, ...}, ...]}}
struct MorphismDocument {
    SimplicialSet target;
    SimplicialMorphismTable phi;
    std::string map_kind;
};

MorphismDocument parse_morphism(const nlohmann::json& doc, const SimplicialSet& source);

}  // namespace simphil::cli
