#pragma once

// Umbrella header: exact surreal-number arithmetic on sign expansions,
// Cantor-normal-form ordinals, dyadic/rational conversions, and the
// convergence checker for surreal sequences.

#include "surreal/arithmetic.hpp"
#include "surreal/limits.hpp"
#include "surreal/notation.hpp"
#include "surreal/ordinal.hpp"
#include "surreal/rational.hpp"
#include "surreal/sequence.hpp"
#include "surreal/sign_expansion.hpp"
