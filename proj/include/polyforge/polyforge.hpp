#pragma once

#include "polyforge/bigint.hpp"
#include "polyforge/bounce.hpp"
#include "polyforge/enumerate.hpp"
#include "polyforge/error.hpp"
#include "polyforge/forest.hpp"
#include "polyforge/lattice.hpp"
#include "polyforge/marked_series.hpp"
#include "polyforge/series.hpp"
#include "polyforge/verify.hpp"
