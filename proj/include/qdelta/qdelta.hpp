#pragma once

#include "qdelta/errors.hpp"
#include "qdelta/fixtures.hpp"
#include "qdelta/format.hpp"
#include "qdelta/hnf.hpp"
#include "qdelta/int_matrix.hpp"
#include "qdelta/lab.hpp"
#include "qdelta/lattice.hpp"
#include "qdelta/quandle.hpp"
#include "qdelta/report.hpp"
#include "qdelta/ring.hpp"
#include "qdelta/snf.hpp"
