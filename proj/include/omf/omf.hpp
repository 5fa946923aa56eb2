#pragma once

#include "omf/canonical.hpp"
#include "omf/design.hpp"
#include "omf/feasibility.hpp"
#include "omf/groups.hpp"
#include "omf/kernel.hpp"
#include "omf/matrix_io.hpp"
#include "omf/oracle.hpp"
#include "omf/row_types.hpp"
#include "omf/run_config.hpp"
#include "omf/runner.hpp"
#include "omf/search.hpp"
#include "omf/verify.hpp"
#include "omf/version.hpp"
