#pragma once

#include "szlab/bd_space.hpp"
#include "szlab/dual_tree.hpp"
#include "szlab/error.hpp"
#include "szlab/json_io.hpp"
#include "szlab/matrix.hpp"
#include "szlab/ordinal.hpp"
#include "szlab/ordinal_measure.hpp"
#include "szlab/rational.hpp"
#include "szlab/step_function.hpp"
