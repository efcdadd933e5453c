#pragma once

// Umbrella header: Coxeter-group wavelet sets, scaling sets, SMRA
// multiwavelets, and WSK sampling over exact box regions.

#include "coxwave/common.hpp"
#include "coxwave/coxeter.hpp"
#include "coxwave/frame.hpp"
#include "coxwave/io.hpp"
#include "coxwave/lattice.hpp"
#include "coxwave/mra.hpp"
#include "coxwave/region.hpp"
#include "coxwave/sampling.hpp"
#include "coxwave/wavelet_sets.hpp"
