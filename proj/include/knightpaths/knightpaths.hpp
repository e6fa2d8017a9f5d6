#pragma once

#include "knightpaths/error.hpp"
#include "knightpaths/bigint.hpp"
#include "knightpaths/paths.hpp"
#include "knightpaths/counting.hpp"
#include "knightpaths/series.hpp"
#include "knightpaths/kernel.hpp"
#include "knightpaths/closed_forms.hpp"
#include "knightpaths/bijections.hpp"
#include "knightpaths/verify.hpp"
#include "knightpaths/oeis.hpp"
