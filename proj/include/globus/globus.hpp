#pragma once

#include "globus/core.hpp"
#include "globus/engine.hpp"
#include "globus/export.hpp"
#include "globus/io.hpp"
#include "globus/metrics.hpp"
#include "globus/runner.hpp"
#include "globus/scenario.hpp"
#include "globus/survival.hpp"
