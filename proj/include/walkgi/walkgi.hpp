#pragma once

#include "walkgi/catalog.hpp"
#include "walkgi/encoding.hpp"
#include "walkgi/error.hpp"
#include "walkgi/exact_linalg.hpp"
#include "walkgi/graph.hpp"
#include "walkgi/graph6.hpp"
#include "walkgi/invariants.hpp"
#include "walkgi/isotest.hpp"
#include "walkgi/parallel.hpp"
