#pragma once

// Umbrella header for the whole library.

#include <nleib/bounds.hpp>
#include <nleib/combinatorics.hpp>
#include <nleib/io.hpp>
#include <nleib/linalg.hpp>
#include <nleib/nalgebra.hpp>
#include <nleib/rational.hpp>
#include <nleib/series.hpp>
