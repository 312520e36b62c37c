#pragma once

// Umbrella header for the parity game composition toolkit.

#include "pgcomp/add_vertex.hpp"
#include "pgcomp/arena.hpp"
#include "pgcomp/attractor.hpp"
#include "pgcomp/baseline.hpp"
#include "pgcomp/classes.hpp"
#include "pgcomp/errors.hpp"
#include "pgcomp/generators.hpp"
#include "pgcomp/half_solve.hpp"
#include "pgcomp/io.hpp"
#include "pgcomp/join.hpp"
#include "pgcomp/pasting.hpp"
#include "pgcomp/recognition.hpp"
#include "pgcomp/regions.hpp"
#include "pgcomp/rng.hpp"
#include "pgcomp/solve_auto.hpp"
#include "pgcomp/subgame.hpp"
#include "pgcomp/undirected.hpp"
#include "pgcomp/vertex_set.hpp"
