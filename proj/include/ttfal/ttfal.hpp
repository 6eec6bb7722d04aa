#pragma once

#include "ttfal/gaussian_rational.hpp"
#include "ttfal/multi_poly.hpp"
#include "ttfal/uni_poly.hpp"
#include "ttfal/mat2.hpp"
#include "ttfal/diagram.hpp"
#include "ttfal/diagram_json.hpp"
#include "ttfal/labeling.hpp"
#include "ttfal/equations.hpp"
#include "ttfal/roots.hpp"
#include "ttfal/eliminate.hpp"
#include "ttfal/cusp.hpp"
#include "ttfal/solve.hpp"
#include "ttfal/pretzel.hpp"
