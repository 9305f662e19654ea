#pragma once

#include "bridge.hpp"
#include "distribution.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "fraclp.hpp"
#include "hypergraph.hpp"
#include "json_io.hpp"
#include "rational.hpp"
#include "simplex.hpp"
#include "theta_search.hpp"
#include "thresholds.hpp"
#include "verify.hpp"
