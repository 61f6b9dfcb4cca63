#pragma once

#include "polylog/chromatic.hpp"
#include "polylog/graph.hpp"
#include "polylog/graphhom.hpp"
#include "polylog/hardcore.hpp"
#include "polylog/oracle.hpp"
#include "polylog/parallel.hpp"
#include "polylog/rational.hpp"
#include "polylog/series.hpp"
#include "polylog/sinkfree.hpp"
#include "polylog/trees.hpp"
