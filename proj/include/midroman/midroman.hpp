#pragma once

#include "midroman/characterization.hpp"
#include "midroman/enumerate.hpp"
#include "midroman/errors.hpp"
#include "midroman/graph.hpp"
#include "midroman/graph6.hpp"
#include "midroman/labeling.hpp"
#include "midroman/middle.hpp"
#include "midroman/middle_roman.hpp"
#include "midroman/mixed.hpp"
#include "midroman/random_graphs.hpp"
#include "midroman/solve.hpp"
#include "midroman/survey.hpp"

//! Exact solvers and verification tools for Roman and perfect Roman
//! domination on middle graphs.
namespace midroman {}
