#pragma once

#include <string>
#include <string_view>

#include "polydefect/polytope.hpp"

namespace polydefect {

/// Builds a polytope from the construction grammar
///
///   X := simplex(n) | dilate(k, X) | cube(n, a) | product(X, Y, ...)
///      | pyramid(X) | cayley(X1, ..., Xr) | file(path)
///
/// file(path) reads the polytope JSON format; relative paths resolve against
/// the working directory. Throws InputError on grammar errors.
LatticePolytope construct(std::string_view spec);

}  // namespace polydefect
