#pragma once

#include "roots/color_rules.hpp"
#include "roots/complexity.hpp"
#include "roots/generators.hpp"
#include "roots/handle_graph.hpp"
#include "roots/io.hpp"
#include "roots/reduction_system.hpp"
#include "roots/root_engine.hpp"
