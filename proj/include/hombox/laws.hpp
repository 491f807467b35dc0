#pragma once

#include "hombox/report.hpp"
#include "hombox/structures.hpp"

namespace hombox {

enum class Suite { algebra, coalgebra, bialgebra, hopf };
const char* suite_name(Suite s);
Suite parse_suite(const std::string& name);

// Every law is evaluated exactly on all basis tuples. Asking for a suite above
// the object's level throws MissingStructure.
CheckReport check_structure(const HomAlgebra& a, Suite suite = Suite::algebra, CheckOptions options = {});
CheckReport check_structure(const HomCoalgebra& c, Suite suite = Suite::coalgebra, CheckOptions options = {});
CheckReport check_structure(const HomBialgebra& b, Suite suite = Suite::bialgebra, CheckOptions options = {});
CheckReport check_structure(const HomHopfAlgebra& h, Suite suite = Suite::hopf, CheckOptions options = {});

enum class ActionLevel { module, module_algebra };
enum class CoactionLevel { comodule, comodule_algebra, comodule_coalgebra };

CheckReport check_action_laws(const ActionMap& act, const HomBialgebra& actor, const HomAlgebra& carrier,
                              ActionLevel level, Side side, CheckOptions options = {});
CheckReport check_coaction_laws(const CoactionMap& coact, const HomBialgebra& coactor, const HomAlgebra& carrier,
                                CoactionLevel level, Side side, CheckOptions options = {});
CheckReport check_coaction_laws(const CoactionMap& coact, const HomBialgebra& coactor, const HomCoalgebra& carrier,
                                CoactionLevel level, Side side, CheckOptions options = {});

}  // namespace hombox
