#pragma once

#include "faddeeva/analysis.hpp"
#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/errors.hpp"
#include "faddeeva/format.hpp"
#include "faddeeva/full_plane.hpp"
#include "faddeeva/kernel.hpp"
#include "faddeeva/oracle.hpp"
#include "faddeeva/params.hpp"
#include "faddeeva/rational.hpp"
#include "faddeeva/reference.hpp"
