#pragma once

#include "copsrobber/accessible.hpp"
#include "copsrobber/arena.hpp"
#include "copsrobber/bounds.hpp"
#include "copsrobber/decomposition.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/game.hpp"
#include "copsrobber/generators.hpp"
#include "copsrobber/graph.hpp"
#include "copsrobber/helicopter.hpp"
#include "copsrobber/interval.hpp"
#include "copsrobber/io.hpp"
#include "copsrobber/rng.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/verify.hpp"
#include "copsrobber/wide.hpp"
