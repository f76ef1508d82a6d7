#pragma once

#include "koebe/chebyshev.hpp"
#include "koebe/circle.hpp"
#include "koebe/cubic.hpp"
#include "koebe/polynomial.hpp"
#include "koebe/roots.hpp"
#include "koebe/univalence.hpp"
