#pragma once

#include <srmkit/analysis.hpp>
#include <srmkit/common.hpp>
#include <srmkit/factor.hpp>
#include <srmkit/gu.hpp>
#include <srmkit/json_io.hpp>
#include <srmkit/measurement.hpp>
#include <srmkit/optimality.hpp>
#include <srmkit/state_set.hpp>
