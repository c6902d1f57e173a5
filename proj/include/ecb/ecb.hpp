#pragma once

// Umbrella header for the ecbin library.

#include "ecb/alphabet.hpp"
#include "ecb/baselines.hpp"
#include "ecb/binarizer.hpp"
#include "ecb/bincoder.hpp"
#include "ecb/bitplane.hpp"
#include "ecb/container.hpp"
#include "ecb/entropy.hpp"
#include "ecb/error.hpp"
#include "ecb/pipeline.hpp"
