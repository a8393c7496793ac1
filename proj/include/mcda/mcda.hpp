#pragma once

#include "mcda/dominance.hpp"
#include "mcda/format.hpp"
#include "mcda/fuzzy.hpp"
#include "mcda/lattice.hpp"
#include "mcda/measures.hpp"
#include "mcda/owa.hpp"
#include "mcda/pipeline.hpp"
#include "mcda/ranking.hpp"
#include "mcda/spec_io.hpp"
