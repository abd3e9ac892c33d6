#pragma once

#include <cstddef>

#include "expriordan/series.hpp"

// Exact Maclaurin truncations of the elementary functions the sigmoid
// catalog is assembled from. Each takes the target order N.
namespace expriordan::elementary {

Series exp(std::size_t order);  // e^x
Series sin(std::size_t order);
Series cos(std::size_t order);
Series sinh(std::size_t order);
Series cosh(std::size_t order);
Series tan(std::size_t order);
Series sec(std::size_t order);
Series arctan(std::size_t order);
Series artanh(std::size_t order);
Series arcsin(std::size_t order);
Series log1p(std::size_t order);  // log(1 + x)

}  // namespace expriordan::elementary
