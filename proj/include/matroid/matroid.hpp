#pragma once

#include "matroid/census.hpp"
#include "matroid/errors.hpp"
#include "matroid/oracles.hpp"
#include "matroid/rational.hpp"
#include "matroid/recognition.hpp"
#include "matroid/shifted.hpp"
#include "matroid/threshold.hpp"
#include "matroid/word.hpp"
