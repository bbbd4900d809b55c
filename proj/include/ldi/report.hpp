#pragma once

#include <json.hpp>

#include "ldi/canonical.hpp"
#include "ldi/codefile.hpp"
#include "ldi/distance.hpp"
#include "ldi/symplectic.hpp"
#include "ldi/transform.hpp"

namespace ldi::report {

// Key order is insertion order, so identical inputs give byte-identical documents.
using Json = nlohmann::ordered_json;

Json matrix(const IntMatrix &m);
Json step(const TransformStep &s);
Json log(const TransformLog &l);
Json phi(const PhiVector &v);

Json info(const CodeSpec &c);
Json canonical(const CanonicalForm &cf);
Json verification(const VerificationReport &v);
Json transform(const TransformResult &r, NRepresentative rep);
Json distance(const DistanceReport &d);
Json bounds(const CodeSpec &c, const BoundsReport &b);
Json rates(const RatesReport &r);
Json scan(const ScanReport &s);

}  // namespace ldi::report
