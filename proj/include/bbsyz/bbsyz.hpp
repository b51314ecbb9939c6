#pragma once

#include "bbsyz/error.hpp"
#include "bbsyz/variable.hpp"
#include "bbsyz/rational.hpp"
#include "bbsyz/poly.hpp"
#include "bbsyz/poly_parse.hpp"
#include "bbsyz/monomial.hpp"
#include "bbsyz/order_ideal.hpp"
#include "bbsyz/enumerate.hpp"
#include "bbsyz/grading.hpp"
#include "bbsyz/extended_ring.hpp"
#include "bbsyz/matrix.hpp"
#include "bbsyz/genmat.hpp"
#include "bbsyz/syzygy.hpp"
#include "bbsyz/jacobi.hpp"
#include "bbsyz/ordered_product.hpp"
#include "bbsyz/free_algebra.hpp"
#include "bbsyz/trace.hpp"
#include "bbsyz/planar.hpp"
#include "bbsyz/properties.hpp"
