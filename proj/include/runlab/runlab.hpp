#pragma once

// Umbrella header for the whole library.

#include "runlab/analysis.hpp"
#include "runlab/bench.hpp"
#include "runlab/features.hpp"
#include "runlab/generator.hpp"
#include "runlab/image.hpp"
#include "runlab/io.hpp"
#include "runlab/labeling.hpp"
#include "runlab/oracle.hpp"
#include "runlab/tables.hpp"
#include "runlab/types.hpp"
