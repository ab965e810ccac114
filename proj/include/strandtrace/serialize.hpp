#pragma once

#include "json.hpp"

#include "strandtrace/diagram.hpp"
#include "strandtrace/orders.hpp"
#include "strandtrace/reduction.hpp"
#include "strandtrace/search.hpp"
#include "strandtrace/symfun.hpp"

namespace strandtrace {

using Json = nlohmann::ordered_json;

/// {"basis":"h","terms":[{"partition":[2,2],"coeff":"2/1"},...]} in canonical term order.
Json to_json(const SymFun& f);
SymFun symfun_from_json(const Json& j);

/// Just the "terms" array of to_json.
Json terms_json(const SymFun& f);

/// {"n":4,"crossings":[[2,3],[1,2]]}
Json to_json(const StrandDiagram& d);
StrandDiagram diagram_from_json(const Json& j);

/// {"n":4,"edges":[[1,2],[2,3],[3,4]]}
Json to_json(const IncompGraph& g);

/// {"terms":[{"diagram":{...},"b":1,"coeff":{...}}]}
Json to_json(const PartialCombo& c);

/// {"n":..,"crossings":..,"h":[...],"positive":bool} plus "witness" on failures.
Json to_json(const SearchRecord& r);

}  // namespace strandtrace
