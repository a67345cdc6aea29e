#pragma once

#include "mink/bertrand.hpp"
#include "mink/curve.hpp"
#include "mink/errors.hpp"
#include "mink/expr.hpp"
#include "mink/format.hpp"
#include "mink/frenet.hpp"
#include "mink/io.hpp"
#include "mink/jet.hpp"
#include "mink/quadrature.hpp"
#include "mink/random_curve.hpp"
#include "mink/rng.hpp"
#include "mink/sabban.hpp"
#include "mink/surface.hpp"
#include "mink/vec.hpp"
