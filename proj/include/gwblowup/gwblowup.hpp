#pragma once

#include "gwblowup/bigcount.hpp"
#include "gwblowup/cache.hpp"
#include "gwblowup/cremona.hpp"
#include "gwblowup/engine.hpp"
#include "gwblowup/lattice.hpp"
#include "gwblowup/memo_store.hpp"
#include "gwblowup/relations.hpp"
