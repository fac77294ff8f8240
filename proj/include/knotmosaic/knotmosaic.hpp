#ifndef KNOTMOSAIC_KNOTMOSAIC_HPP
#define KNOTMOSAIC_KNOTMOSAIC_HPP

#include "knotmosaic/bigint.hpp"
#include "knotmosaic/census.hpp"
#include "knotmosaic/counting.hpp"
#include "knotmosaic/dispatch.hpp"
#include "knotmosaic/errors.hpp"
#include "knotmosaic/journal.hpp"
#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/oracle.hpp"
#include "knotmosaic/state_matrix.hpp"
#include "knotmosaic/tile.hpp"

#endif  // KNOTMOSAIC_KNOTMOSAIC_HPP
