#pragma once

#include <gtest/gtest.h>

#include "sjgeo/cmatrix.hpp"

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(::sjgeo::max_abs_diff((a), (b)), (tol))

inline sjgeo::CMatrix scalar_matrix(sjgeo::cdouble v) { return sjgeo::CMatrix{{v}}; }
