#pragma once

#include "dj/analysis.hpp"
#include "dj/bigint.hpp"
#include "dj/bitstring.hpp"
#include "dj/format.hpp"
#include "dj/oracle.hpp"
#include "dj/rng.hpp"
#include "dj/simulator.hpp"
#include "dj/spectrum.hpp"
#include "dj/truth_table.hpp"
