#pragma once

// Finite and computable pseudo hoop / pseudo BL / pseudo MV toolkit:
// axiom validation, filter lattices, quotients, the maximal-filter
// inequality schemas with their direct oracle, exact infinite test beds
// built from ordered groups, and bounded model search.

#include "hoops/algebra.hpp"
#include "hoops/computable.hpp"
#include "hoops/constructions.hpp"
#include "hoops/errors.hpp"
#include "hoops/filters.hpp"
#include "hoops/groups.hpp"
#include "hoops/io.hpp"
#include "hoops/quotients.hpp"
#include "hoops/random.hpp"
#include "hoops/rational.hpp"
#include "hoops/schemas.hpp"
#include "hoops/search.hpp"
#include "hoops/term.hpp"
