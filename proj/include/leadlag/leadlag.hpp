// leadlag/leadlag.hpp
// Umbrella header.
#pragma once

#include "leadlag/baselines.hpp"
#include "leadlag/csv.hpp"
#include "leadlag/errors.hpp"
#include "leadlag/exact_sum.hpp"
#include "leadlag/harness.hpp"
#include "leadlag/naples.hpp"
#include "leadlag/rng.hpp"
#include "leadlag/sim.hpp"
#include "leadlag/theory.hpp"
#include "leadlag/ticks.hpp"
