#pragma once

#include "scaling/algebra.hpp"
#include "scaling/casebook.hpp"
#include "scaling/csv.hpp"
#include "scaling/dataset.hpp"
#include "scaling/dimension.hpp"
#include "scaling/error.hpp"
#include "scaling/rational.hpp"
#include "scaling/regression.hpp"
#include "scaling/svg.hpp"
#include "scaling/synthetic.hpp"
#include "scaling/units.hpp"
