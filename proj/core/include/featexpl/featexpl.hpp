#pragma once

#include "featexpl/analysis.hpp"
#include "featexpl/catalog.hpp"
#include "featexpl/models.hpp"
#include "featexpl/mss.hpp"
#include "featexpl/oracle.hpp"
#include "featexpl/serialize.hpp"
#include "featexpl/shapley.hpp"
#include "featexpl/types.hpp"
