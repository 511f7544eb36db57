#pragma once

// Umbrella header: shake detection, trace formats, synthesis, evaluation.

#include "shakekit/detector.hpp"
#include "shakekit/direction.hpp"
#include "shakekit/errors.hpp"
#include "shakekit/eval.hpp"
#include "shakekit/oracle.hpp"
#include "shakekit/rng.hpp"
#include "shakekit/synth.hpp"
#include "shakekit/trace_io.hpp"
#include "shakekit/types.hpp"
