#pragma once

#include "cli.hpp"
#include "config_io.hpp"
#include "contagion.hpp"
#include "correlation.hpp"
#include "csv.hpp"
#include "decision.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "initialization.hpp"
#include "layout.hpp"
#include "mobility.hpp"
#include "population.hpp"
#include "practice_model.hpp"
#include "scenario.hpp"
#include "simulation.hpp"
#include "world.hpp"
