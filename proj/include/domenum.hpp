#pragma once

#include "domenum/errors.hpp"
#include "domenum/graph.hpp"
#include "domenum/graph_io.hpp"
#include "domenum/recognition.hpp"
#include "domenum/redundancy.hpp"
#include "domenum/extension.hpp"
#include "domenum/rn_enum.hpp"
#include "domenum/ir_ext.hpp"
#include "domenum/dom_enum.hpp"
#include "domenum/oracle.hpp"
#include "domenum/sat_reduction.hpp"
#include "domenum/generators.hpp"
