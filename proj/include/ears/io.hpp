#pragma once

#include "ears/ears.hpp"
#include "ears/generation.hpp"
#include "ears/orbit.hpp"
#include "ears/presentation.hpp"

#include <json.hpp>

#include <string>

namespace ears {

using Json = nlohmann::ordered_json;

// integers stay numbers, everything else becomes "p/q"
Json to_json(const Q& q);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const Lattice& l);
Json to_json(const CosetSet& c);
Json to_json(const GeneratorWord& w);
Json to_json(const ParityVector& p);

Q rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);

// {"type", "rank", "nullity", "S": {"lattice", "cosets", "translated"}, "L", "E"};
// S = cosets + 2 * lattice. The
// canonical form written back by descriptor_to_json reads in unchanged.
EarsDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const EarsDescriptor& r);

Json to_json(const AxiomReport& a);
Json to_json(const OrbitDescriptor& o);
Json to_json(const OrbitTable& t);
Json to_json(const GenerationResult& g);
Json to_json(const MinimalityResult& m);
Json to_json(const ExtractionResult& e);
Json to_json(const CoxeterDecision& d);
Json to_json(const ObstructionResult& o);
Json to_json(const TrimResult& t);

Json parse_json(const std::string& text); // ParseError on malformed input
Json read_json_file(const std::string& path);
std::string dump(const Json& j);

} // namespace ears
