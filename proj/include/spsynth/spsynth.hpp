#pragma once

#include "spsynth/scalar.hpp"
#include "spsynth/surd.hpp"
#include "spsynth/poly.hpp"
#include "spsynth/rational_fn.hpp"
#include "spsynth/sturm.hpp"
#include "spsynth/mpoly.hpp"
#include "spsynth/network.hpp"
#include "spsynth/topology.hpp"
#include "spsynth/catalog.hpp"
#include "spsynth/biquad.hpp"
#include "spsynth/conditions.hpp"
#include "spsynth/synthesis.hpp"
#include "spsynth/classify.hpp"
#include "spsynth/verify.hpp"
#include "spsynth/fit.hpp"
#include "spsynth/spice.hpp"
#include "spsynth/io.hpp"
