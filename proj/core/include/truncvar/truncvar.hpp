#pragma once

#include "truncvar/approx.hpp"
#include "truncvar/error.hpp"
#include "truncvar/path.hpp"
#include "truncvar/regimes.hpp"
#include "truncvar/synth.hpp"
#include "truncvar/variation.hpp"
