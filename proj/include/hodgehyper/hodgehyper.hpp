#pragma once

#include "errors.hpp"
#include "scalar.hpp"
#include "matrix.hpp"
#include "linalg.hpp"
#include "hypergraph.hpp"
#include "digraph.hpp"
#include "text_io.hpp"
#include "weight.hpp"
#include "chains.hpp"
#include "hodge.hpp"
#include "spectra.hpp"
#include "random.hpp"
#include "report.hpp"
