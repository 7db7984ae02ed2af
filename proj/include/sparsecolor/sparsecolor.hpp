#pragma once

// Umbrella header: sparse-matrix coloring, bicoloring, and decompression.

#include "sparsecolor/bicoloring.hpp"
#include "sparsecolor/coloring.hpp"
#include "sparsecolor/compression.hpp"
#include "sparsecolor/dense.hpp"
#include "sparsecolor/forest.hpp"
#include "sparsecolor/graph.hpp"
#include "sparsecolor/matrix_market.hpp"
#include "sparsecolor/ordering.hpp"
#include "sparsecolor/pattern.hpp"
#include "sparsecolor/postprocess.hpp"
#include "sparsecolor/report.hpp"
#include "sparsecolor/verify.hpp"
