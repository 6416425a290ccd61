#pragma once

#include "gmalie/algebra.hpp"
#include "gmalie/analysis.hpp"
#include "gmalie/budget.hpp"
#include "gmalie/builtins.hpp"
#include "gmalie/context.hpp"
#include "gmalie/decompose.hpp"
#include "gmalie/error.hpp"
#include "gmalie/field.hpp"
#include "gmalie/matrix.hpp"
#include "gmalie/multilinear.hpp"
#include "gmalie/report.hpp"
#include "gmalie/subspace.hpp"
