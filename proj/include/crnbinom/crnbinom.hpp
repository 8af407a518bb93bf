#pragma once

// Umbrella header for the whole library.

#include "crnbinom/analyze.hpp"
#include "crnbinom/bench.hpp"
#include "crnbinom/decomposition.hpp"
#include "crnbinom/dot.hpp"
#include "crnbinom/graph.hpp"
#include "crnbinom/json_io.hpp"
#include "crnbinom/matrix.hpp"
#include "crnbinom/network.hpp"
#include "crnbinom/parse.hpp"
#include "crnbinom/polynomial.hpp"
#include "crnbinom/random_network.hpp"
#include "crnbinom/rational.hpp"
#include "crnbinom/verdict.hpp"
