#pragma once

// Umbrella header: iterated Sugeno-style integrals on finite ground sets,
// the additive-link chain integral, scientometric indices, and the
// verification suites.

#include "benvenuti.hpp"
#include "core.hpp"
#include "integral.hpp"
#include "json_io.hpp"
#include "maps.hpp"
#include "measure.hpp"
#include "random_instances.hpp"
#include "report.hpp"
#include "scientometrics.hpp"
#include "suites.hpp"
