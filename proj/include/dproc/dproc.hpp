#pragma once

#include "dproc/compare.hpp"
#include "dproc/dsl.hpp"
#include "dproc/enumerate.hpp"
#include "dproc/errors.hpp"
#include "dproc/formula.hpp"
#include "dproc/model.hpp"
#include "dproc/preference.hpp"
#include "dproc/templates.hpp"
#include "dproc/utility.hpp"
