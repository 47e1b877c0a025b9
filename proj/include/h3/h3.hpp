#pragma once

#include "h3/bitset.hpp"
#include "h3/embedding.hpp"
#include "h3/error.hpp"
#include "h3/experiment.hpp"
#include "h3/generate.hpp"
#include "h3/hypergraph.hpp"
#include "h3/indexing.hpp"
#include "h3/parallel.hpp"
#include "h3/pattern.hpp"
#include "h3/properties.hpp"
#include "h3/rational.hpp"
#include "h3/rng.hpp"
#include "h3/spectral.hpp"
