#pragma once

#include "solv/sym/eval.hpp"
#include "solv/sym/expr.hpp"
#include "solv/sym/forms.hpp"
#include "solv/sym/ratfunc.hpp"
