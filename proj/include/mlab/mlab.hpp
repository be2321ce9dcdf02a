#pragma once

// Umbrella header: the whole finite-algebra toolkit.

#include "mlab/catalog.hpp"
#include "mlab/core.hpp"
#include "mlab/embedding.hpp"
#include "mlab/error.hpp"
#include "mlab/expansion.hpp"
#include "mlab/families.hpp"
#include "mlab/greens.hpp"
#include "mlab/groups.hpp"
#include "mlab/io.hpp"
#include "mlab/projectivity.hpp"
#include "mlab/wreath.hpp"
