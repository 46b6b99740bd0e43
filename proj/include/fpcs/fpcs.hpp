#pragma once

#include "fpcs/analytic.hpp"
#include "fpcs/checks.hpp"
#include "fpcs/error.hpp"
#include "fpcs/families.hpp"
#include "fpcs/grid.hpp"
#include "fpcs/io.hpp"
#include "fpcs/oracle.hpp"
#include "fpcs/semiclassical.hpp"
#include "fpcs/units.hpp"
