#pragma once

#include "admissibility.hpp"
#include "dickson.hpp"
#include "f2poly.hpp"
#include "grassmann.hpp"
#include "index_ideal.hpp"
