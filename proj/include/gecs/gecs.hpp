#pragma once

#include "gecs/bitmatrix.hpp"
#include "gecs/bitvec.hpp"
#include "gecs/code.hpp"
#include "gecs/combinatorics.hpp"
#include "gecs/constructions.hpp"
#include "gecs/decoder.hpp"
#include "gecs/generic_set.hpp"
#include "gecs/io.hpp"
#include "gecs/search.hpp"
#include "gecs/subsets.hpp"
#include "gecs/verify.hpp"
