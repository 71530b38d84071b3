#pragma once

#include "rrpart/bijections.hpp"
#include "rrpart/count.hpp"
#include "rrpart/io.hpp"
#include "rrpart/partition.hpp"
#include "rrpart/qseries.hpp"
#include "rrpart/recurrences.hpp"
