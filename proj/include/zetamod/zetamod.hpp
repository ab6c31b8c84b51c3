#pragma once

#include "errors.hpp"
#include "exactcore.hpp"
#include "spectrum.hpp"
#include "zetafn.hpp"
#include "rha.hpp"
#include "ffgeom.hpp"
#include "covmodel.hpp"
#include "io.hpp"
