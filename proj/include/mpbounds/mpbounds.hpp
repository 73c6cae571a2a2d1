#pragma once

#include "mpbounds/basis.hpp"
#include "mpbounds/cauchy.hpp"
#include "mpbounds/convert.hpp"
#include "mpbounds/eig.hpp"
#include "mpbounds/error.hpp"
#include "mpbounds/lu.hpp"
#include "mpbounds/matrix.hpp"
#include "mpbounds/polyeig.hpp"
#include "mpbounds/polynomial.hpp"
#include "mpbounds/problems.hpp"
#include "mpbounds/region.hpp"
#include "mpbounds/serialize.hpp"
#include "mpbounds/svg.hpp"
#include "mpbounds/union_find.hpp"
