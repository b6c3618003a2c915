#ifndef LPA_LPA_HPP_
#define LPA_LPA_HPP_

#include "cycles.hpp"
#include "element.hpp"
#include "expression.hpp"
#include "gk_dim.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "growth.hpp"
#include "growth_cache.hpp"
#include "order.hpp"
#include "report.hpp"
#include "rewrite.hpp"

#endif  // LPA_LPA_HPP_
