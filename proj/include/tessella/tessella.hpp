#pragma once

#include "census.hpp"
#include "geometry.hpp"
#include "grossone.hpp"
#include "numeric.hpp"
#include "sequences.hpp"
#include "trees.hpp"
#include "verify.hpp"
