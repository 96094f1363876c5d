#pragma once

#include "vframe/characters.hpp"
#include "vframe/errors.hpp"
#include "vframe/gf2.hpp"
#include "vframe/labels.hpp"
#include "vframe/orbifold.hpp"
#include "vframe/qseries.hpp"
#include "vframe/structure.hpp"
#include "vframe/text_format.hpp"
