#pragma once

#include "trisym/scalar.hpp"

#include <optional>
#include <vector>

namespace trisym {

using IntRow = std::vector<mpz_class>;

/// Decides the homogeneous strict system { a . x > 0 : a in rows } over Q by
/// Fourier-Motzkin elimination and returns a solution when one exists.
///
/// Variables are eliminated from the last to the first. Back-substitution
/// picks, for each variable in turn, the integer of smallest magnitude in its
/// open feasible interval (0 when unconstrained); when the interval holds no
/// integer the midpoint is used. The result is therefore deterministic.
///
/// Throws std::length_error if an intermediate system exceeds `max_rows`.
std::optional<std::vector<Rational>> solve_strict_homogeneous(const std::vector<IntRow>& rows, int num_vars,
                                                              std::size_t max_rows = 200000);

}  // namespace trisym
