#pragma once

#include "stablekernel/aggregate.hpp"
#include "stablekernel/analysis.hpp"
#include "stablekernel/casebook.hpp"
#include "stablekernel/error.hpp"
#include "stablekernel/evaluation.hpp"
#include "stablekernel/formula.hpp"
#include "stablekernel/parser.hpp"
#include "stablekernel/printer.hpp"
#include "stablekernel/rational.hpp"
#include "stablekernel/reduct.hpp"
#include "stablekernel/semantics.hpp"
#include "stablekernel/simplify.hpp"
#include "stablekernel/theory.hpp"
#include "stablekernel/translations.hpp"
