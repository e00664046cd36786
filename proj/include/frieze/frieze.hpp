#pragma once

// Umbrella header for the frieze library: exact Laurent arithmetic, polygon
// dissections, weighted walk matrices, determinant identities, explicit
// diagonalization, integer Smith normal form, and generalized frieze
// patterns with their adjacent minors.

#include "frieze/complement.hpp"
#include "frieze/determinant.hpp"
#include "frieze/diagonal_form.hpp"
#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/json_io.hpp"
#include "frieze/laurent.hpp"
#include "frieze/matrix.hpp"
#include "frieze/pattern.hpp"
#include "frieze/snf.hpp"
#include "frieze/varset.hpp"
#include "frieze/walks.hpp"
