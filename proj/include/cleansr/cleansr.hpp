#pragma once

#include "cleansr/bitset.hpp"
#include "cleansr/catalog.hpp"
#include "cleansr/claim.hpp"
#include "cleansr/clean_graph.hpp"
#include "cleansr/error.hpp"
#include "cleansr/graph.hpp"
#include "cleansr/graph_io.hpp"
#include "cleansr/polynomial.hpp"
#include "cleansr/report_io.hpp"
#include "cleansr/ring.hpp"
#include "cleansr/ring_build.hpp"
#include "cleansr/ring_spec.hpp"
#include "cleansr/solvers.hpp"
#include "cleansr/srg.hpp"
#include "cleansr/verifier.hpp"
