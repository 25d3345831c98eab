#pragma once

// JSON documents for the command line, and a plain-text rendering of them.
// Node and map labels in reports are 1-based.

#include "cyclic/fibre.hpp"
#include "cyclic/k1.hpp"
#include "cyclic/quiver.hpp"
#include "cyclic/representation.hpp"

#include <json.hpp>

#include <string>

namespace cyclic::report {

using Json = nlohmann::json;

/// A number when it fits in 64 bits, otherwise its decimal string.
Json integer(const Integer& value);

Json descriptor(const CyclicQuiver& q, const ModuliDescriptor& d);
Json rep(const CyclicRep& r);
Json fibre(const CyclicQuiver& q, const FibreSet& f);
Json stability(const StabilityReport& s);
Json k1_rep(const K1Rep& r);
Json decomposition(const K1Quiver& q, const DecompositionDescriptor& d);
Json reduction(const K1Rep& input, const K1Reduction& reduced);
Json k1_count(const K1FibreCount& c);

/// "key: value" lines; nested objects are indented, lists of scalars joined.
std::string text(const Json& doc);

}  // namespace cyclic::report
