#pragma once

#include "skein/bounds.hpp"
#include "skein/braid.hpp"
#include "skein/cache.hpp"
#include "skein/dataset.hpp"
#include "skein/diagram.hpp"
#include "skein/dot.hpp"
#include "skein/homfly.hpp"
#include "skein/laurent_poly.hpp"
#include "skein/moves.hpp"
#include "skein/recognize.hpp"
#include "skein/skein_tree.hpp"
#include "skein/solver.hpp"
#include "skein/tabulate.hpp"
#include "skein/verify.hpp"
