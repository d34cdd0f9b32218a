#pragma once

// JSON encodings shared by the command-line tool and the tests.
// Ring elements are [a, b]; a component outside int64 is written as a decimal
// string. Rings are tagged "Z", {"quad": d} or "gauss".

#include <nlohmann/json.hpp>

#include "diophant/dioset.hpp"
#include "diophant/enumeration.hpp"
#include "diophant/formal.hpp"
#include "diophant/numtheory.hpp"
#include "diophant/polynomial.hpp"
#include "diophant/reduction.hpp"
#include "diophant/search.hpp"

namespace diophant::json_io {

using nlohmann::json;

json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const json& j);

json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const json& j);

json element_to_json(const RingElement& x);
RingElement element_from_json(const json& j, RingDescriptor ring);

json assignment_to_json(const Assignment& values);
Assignment assignment_from_json(const json& j, RingDescriptor ring);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json set_to_json(const DiophantineSet& s);
DiophantineSet set_from_json(const json& j);

/// {"state": ..., "witness": [...]} with the witness only for members.
json tristate_to_json(const TriState& s);

json sigma_witness_to_json(const SigmaWitness& w);
json gauss_witness_to_json(const GaussWitness& w);
GaussWitness gauss_witness_from_json(const json& j);
json gauss_report_to_json(const GaussReport& r);

json system_to_json(const FormalSystem& sys);
FormalSystem system_from_json(const json& j);
json function2_to_json(const FiniteFunction2& g);
FiniteFunction2 function2_from_json(const json& j);

}  // namespace diophant::json_io
