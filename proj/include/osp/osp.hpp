#pragma once

// Weight combinatorics, translation operators, blocks and resolution growth
// for the orthosymplectic Lie superalgebras osp(k|2), k > 2.

#include "osp/halfint.hpp"
#include "osp/weight.hpp"
#include "osp/rootsys.hpp"
#include "osp/weyl.hpp"
#include "osp/atypical.hpp"
#include "osp/szops.hpp"
#include "osp/polydegree.hpp"
#include "osp/dims.hpp"
#include "osp/resolution.hpp"
#include "osp/growth.hpp"
