#pragma once

// Umbrella header.

#include "credalkit/belief.hpp"
#include "credalkit/box_minimize.hpp"
#include "credalkit/credal.hpp"
#include "credalkit/decision.hpp"
#include "credalkit/errors.hpp"
#include "credalkit/frame.hpp"
#include "credalkit/fusion.hpp"
#include "credalkit/model_io.hpp"
#include "credalkit/monotone.hpp"
#include "credalkit/polynomial.hpp"
#include "credalkit/polytope.hpp"
#include "credalkit/rational.hpp"
#include "credalkit/reproduce.hpp"
#include "credalkit/subset_transform.hpp"
#include "credalkit/table.hpp"
#include "credalkit/worked_examples.hpp"
