#pragma once

#include "topolab/bitop.hpp"
#include "topolab/classes.hpp"
#include "topolab/enumerate.hpp"
#include "topolab/error.hpp"
#include "topolab/finite_space.hpp"
#include "topolab/fixtures.hpp"
#include "topolab/homeomorphism.hpp"
#include "topolab/json_io.hpp"
#include "topolab/mine.hpp"
#include "topolab/operators.hpp"
#include "topolab/point_set.hpp"
#include "topolab/registry.hpp"
#include "topolab/symbolic.hpp"
