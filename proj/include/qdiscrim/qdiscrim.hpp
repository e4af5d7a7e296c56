/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include "qdiscrim/channel.hpp"
#include "qdiscrim/complex_matrix.hpp"
#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/errors.hpp"
#include "qdiscrim/info_theory.hpp"
#include "qdiscrim/montecarlo.hpp"
#include "qdiscrim/optimizer.hpp"
#include "qdiscrim/rng.hpp"
#include "qdiscrim/states.hpp"
