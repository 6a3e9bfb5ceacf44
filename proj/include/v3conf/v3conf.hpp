#pragma once

#include "v3conf/canonical.hpp"
#include "v3conf/census.hpp"
#include "v3conf/configuration.hpp"
#include "v3conf/construct.hpp"
#include "v3conf/cyclic.hpp"
#include "v3conf/enumerate.hpp"
#include "v3conf/error.hpp"
#include "v3conf/graphs.hpp"
#include "v3conf/io.hpp"
