#pragma once
#include <json.hpp>

#include "slicewb/fueter_sce.hpp"
#include "slicewb/slice_almansi.hpp"

namespace slicewb {

using json = nlohmann::ordered_json;

/// {"1":"1/1","e13":"-2/3"}
json to_json(const MultivectorQ& x);
MultivectorQ multivector_from_json(const json& j, int m);

/// {"m":5,"n":2,"components":{"{}":[{"alpha":[..],"beta":[..],"coeff":{..}}],...}}
json to_json(const StemPolynomial& f);
/// Throws InvalidStem on schema violations.
StemPolynomial stem_from_json(const json& j);

/// [{"alpha":"1/1","vector":{"e1":"3/1"}}, ...]
json to_json(const PointQ& x);
PointQ point_from_json(const json& j, int m);

json to_json(const ResidualReport& r);
json to_json(const ClassicalAlmansiResult& r);
json to_json(const SliceAlmansiResult& r);
json to_json(const SimultaneousResult& r);
json to_json(const FueterSceCertificate& c);

std::string index_to_string(const AlmansiIndex& t);

}  // namespace slicewb
