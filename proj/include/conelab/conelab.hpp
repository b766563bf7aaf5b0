#pragma once

#include "conelab/baselocus.hpp"
#include "conelab/cones.hpp"
#include "conelab/core.hpp"
#include "conelab/cremona.hpp"
#include "conelab/formulas.hpp"
#include "conelab/oracle.hpp"
#include "conelab/specio.hpp"
#include "conelab/sweep.hpp"
#include "conelab/version.hpp"
