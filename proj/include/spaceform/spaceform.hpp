// Umbrella header.

#ifndef SPACEFORM_SPACEFORM_HPP_
#define SPACEFORM_SPACEFORM_HPP_

#include "builders.hpp"
#include "group.hpp"
#include "iso.hpp"
#include "ops.hpp"
#include "recognition.hpp"
#include "rep.hpp"
#include "residues.hpp"
#include "tuple.hpp"
#include "wolf.hpp"

#endif  // SPACEFORM_SPACEFORM_HPP_
