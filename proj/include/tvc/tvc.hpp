#pragma once

// Everything except the JSON report layer (tvc/report.hpp), which needs nlohmann/json.

#include "tvc/bounds.hpp"
#include "tvc/ear.hpp"
#include "tvc/ear_search.hpp"
#include "tvc/even_ears.hpp"
#include "tvc/graph.hpp"
#include "tvc/instances.hpp"
#include "tvc/pipeline.hpp"
#include "tvc/properties.hpp"
#include "tvc/redundancy.hpp"
#include "tvc/rewrite.hpp"
#include "tvc/solve.hpp"
#include "tvc/verify.hpp"
