#pragma once

#include "configurations.hpp"
#include "frame.hpp"
#include "generate.hpp"
#include "geometry.hpp"
#include "instance.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "preprocess.hpp"
#include "regions.hpp"
#include "routing.hpp"
#include "solve.hpp"
#include "solver_general.hpp"
#include "solver_left.hpp"
#include "svg.hpp"
#include "sweep.hpp"
#include "validity.hpp"
